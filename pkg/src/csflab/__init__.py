"""Chromatic symmetric functions of small graphs: forest-basis expansions via
step/route rewriting, U-polynomials, and reconstruction from induced subgraphs.

All arithmetic is exact (``int`` and ``fractions.Fraction``).
"""

from .errors import (
    CsfLabError,
    DomainError,
    DuplicateEdgeError,
    MalformedHeaderError,
    NotABasisError,
    ParseError,
    ResourceGuardError,
    StepError,
    VerificationError,
    VertexRangeError,
)
from .graphio import decode_edge_list, decode_graph6, encode_edge_list, encode_graph6, parse_graph
from .graphs import (
    Graph,
    GraphClass,
    SpecialKind,
    canonical_form,
    canonical_graph,
    canonical_key,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    enumerate_graphs,
    generate_special,
    girth,
    is_isomorphic,
    isomorphism,
    part_of,
    path_graph,
    star_graph,
)
from .kernels import BACKEND
from .partitions import (
    Partition,
    enumerate_partitions,
    equivalent,
    is_refinement,
    multiplicity_factorial,
    reduced_form,
    s_reduced_form,
)
from .reconstruct import (
    LambdaMatrix,
    SubgraphCensus,
    exact_rank,
    induced_subgraph_census,
    k_lambda_family,
    lambda_matrix,
    reconstruct_coefficient,
    verify_matrix_relation,
)
from .routes import (
    BasisExpansion,
    ChromaticBasis,
    March,
    Route,
    Routing,
    Step,
    dnc_route,
    expand_in_forest_basis,
    expand_via_linear_solve,
    load_basis_file,
    march,
    path_basis,
    route_between_forests,
    route_to_girth3,
    route_to_path_form,
    route_to_star_form,
    star_basis,
    step,
    triangle_split,
    truncate_expansion,
)
from .symmetric import (
    MPoly,
    chromatic_polynomial,
    csf,
    csf_coloring_oracle,
    product,
    specialize_ones,
    stable_partition_census,
)
from .upolynomial import (
    INFINITE,
    UPoly,
    UPolyXY,
    corner_number,
    restricted_u,
    u_polynomial_forest,
    u_polynomial_general,
    verify_theorem_u_equiv,
)

__version__ = "0.1.0"

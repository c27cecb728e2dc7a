"""Steps, routes and marches, and CSF expansion in chromatic bases.

A *step* on a cherry ``v1v2, v1v3 in E, v2v3 not in E`` moves the edge
``v1v3`` to ``v2v3``; alongside the target it produces a positive remainder
(``v1v2`` deleted) and a negative remainder (``v1v2``, ``v1v3`` deleted and
``v2v3`` added), and ``X(source) = X(target) + X(pos) - X(neg)``.
"""

from __future__ import annotations

import enum
import random
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, NotABasisError, ResourceGuardError, StepError, VerificationError
from .graphs import (
    Graph,
    canonical_form,
    canonical_key,
    find_triangle,
    generate_special,
    girth,
    isomorphism,
    part_of,
    shortest_cycle,
)
from .linalg import solve_left
from .partitions import Partition, enumerate_partitions, sort_key
from .symmetric import MPoly, csf

MAX_MEMO = 500_000


# steps, routes, marches

@dataclass(frozen=True)
class Step:
    source: Graph
    target: Graph
    positive: Graph
    negative: Graph
    witness: tuple[int, int, int]

    def reversed(self) -> "Step":
        """The step from ``target`` back to ``source``; remainders swap roles."""
        v1, v2, v3 = self.witness
        return step(self.target, v2, v1, v3)

    def relabel(self, perm: Sequence[int]) -> "Step":
        v1, v2, v3 = self.witness
        return step(self.source.relabel(perm), perm[v1], perm[v2], perm[v3])


def step(g: Graph, v1: int, v2: int, v3: int) -> Step:
    if len({v1, v2, v3}) != 3:
        raise StepError(f"step witness vertices must be distinct: {(v1, v2, v3)}")
    for v in (v1, v2, v3):
        if not 0 <= v < g.n:
            raise StepError(f"vertex {v} out of range for n={g.n}")
    if not g.has_edge(v1, v2):
        raise StepError(f"v1v2 = ({v1},{v2}) is not an edge")
    if not g.has_edge(v1, v3):
        raise StepError(f"v1v3 = ({v1},{v3}) is not an edge")
    if g.has_edge(v2, v3):
        raise StepError(f"v2v3 = ({v2},{v3}) is already an edge")
    return Step(
        source=g,
        target=g.modified(remove=[(v1, v3)], add=[(v2, v3)]),
        positive=g.modified(remove=[(v1, v2)]),
        negative=g.modified(remove=[(v1, v2), (v1, v3)], add=[(v2, v3)]),
        witness=(v1, v2, v3),
    )


def valid_witnesses(g: Graph) -> list[tuple[int, int, int]]:
    """Every ordered triple on which a step can be taken."""
    out = []
    for v1 in range(g.n):
        nb = g.neighbors(v1)
        for v2 in nb:
            for v3 in nb:
                if v2 != v3 and not g.has_edge(v2, v3):
                    out.append((v1, v2, v3))
    return out


@dataclass(frozen=True)
class Route:
    graphs: tuple[Graph, ...]
    steps: tuple[Step, ...] = ()

    @classmethod
    def trivial(cls, g: Graph) -> "Route":
        return cls((g,), ())

    @classmethod
    def from_steps(cls, start: Graph, steps: Iterable[Step]) -> "Route":
        steps = tuple(steps)
        return cls((start,) + tuple(s.target for s in steps), steps)

    @property
    def start(self) -> Graph:
        return self.graphs[0]

    @property
    def end(self) -> Graph:
        return self.graphs[-1]

    def __len__(self):
        return len(self.steps)

    def reversed(self) -> "Route":
        return Route.from_steps(self.end, (s.reversed() for s in reversed(self.steps)))

    def concat(self, other: "Route") -> "Route":
        if self.end != other.start:
            raise DomainError("routes can only be concatenated when the end of one is the start of the other")
        return Route.from_steps(self.start, self.steps + other.steps)

    def relabel(self, perm: Sequence[int]) -> "Route":
        return Route.from_steps(self.start.relabel(perm), (s.relabel(perm) for s in self.steps))

    def validate(self) -> None:
        """Raise ``VerificationError`` unless every recorded step links consecutive graphs."""
        if len(self.graphs) != len(self.steps) + 1:
            raise VerificationError("route needs exactly one more graph than steps")
        lam = part_of(self.start)
        for i, s in enumerate(self.steps):
            if s.source != self.graphs[i] or s.target != self.graphs[i + 1]:
                raise VerificationError(f"step {i} does not link graphs {i} and {i + 1}")
            if step(s.source, *s.witness) != s:
                raise VerificationError(f"step {i} is inconsistent with its witness")
        for g in self.graphs:
            if g.n != self.start.n or g.num_edges != self.start.num_edges or part_of(g) != lam:
                raise VerificationError("route graphs must share vertex count, edge count and Part")


@dataclass(frozen=True)
class March:
    positive: tuple[Graph, ...]
    negative: tuple[Graph, ...]

    def __len__(self):
        return len(self.positive)


def march(route: Route) -> March:
    return March(tuple(s.positive for s in route.steps), tuple(s.negative for s in route.steps))


def march_identity_residual(route: Route) -> MPoly:
    """``X(G_1) - X(G_k) - sum X(P_i) + sum X(N_i)``; zero for every valid route."""
    m = march(route)
    out = csf(route.start) - csf(route.end)
    for p, q in zip(m.positive, m.negative):
        out = out - csf(p) + csf(q)
    return out


def random_route(g: Graph, length: int, rng: random.Random) -> Route:
    """A route of up to ``length`` uniformly chosen steps (stops early if none apply)."""
    steps = []
    cur = g
    for _ in range(length):
        ws = valid_witnesses(cur)
        if not ws:
            break
        s = step(cur, *rng.choice(ws))
        steps.append(s)
        cur = s.target
    return Route.from_steps(g, steps)


# routing constructions

def _require_forest(g: Graph) -> None:
    if not g.is_forest():
        raise DomainError("graph is not a forest")


def _tree_path(g: Graph, a: int, b: int) -> list[int]:
    prev = {a: None}
    order = [a]
    for u in order:
        for w in g.neighbors(u):
            if w not in prev:
                prev[w] = u
                order.append(w)
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    return path[::-1]


def _longest_path(g: Graph, comp: Sequence[int]) -> list[int]:
    best = [comp[0]]
    for i, a in enumerate(comp):
        for b in comp:
            if a == b:
                continue
            p = _tree_path(g, a, b)
            if len(p) > len(best) or (len(p) == len(best) and p < best):
                best = p
    return best


def _is_path_component(g: Graph, comp: Sequence[int]) -> bool:
    return all(g.degree(v) <= 2 for v in comp)


def _is_star_component(g: Graph, comp: Sequence[int]) -> bool:
    return len(comp) <= 2 or any(g.degree(v) == len(comp) - 1 for v in comp)


def route_to_path_form(f: Graph) -> Route:
    """Route from a forest to a labelled copy of ``P_lambda``.

    Each non-path component is straightened with a fixed longest path ``L``:
    the branch vertex nearest ``L[0]`` hands one off-path neighbour to its
    predecessor on ``L``; once a branch reaches ``L[0]`` the path has grown
    and a new longest path is chosen. Ties go to the least vertex labels.
    """
    _require_forest(f)
    g = f
    steps: list[Step] = []
    for comp in f.components():
        while not _is_path_component(g, comp):
            path = _longest_path(g, comp)
            while True:
                on_path = set(path)
                p = next((i for i in range(1, len(path) - 1) if g.degree(path[i]) > 2), None)
                if p is None:
                    break
                v1, v2 = path[p], path[p - 1]
                v3 = min(w for w in g.neighbors(v1) if w not in on_path)
                s = step(g, v1, v2, v3)
                steps.append(s)
                g = s.target
                if p == 1:
                    break  # v3 now extends the path beyond L[0]
    return Route.from_steps(f, steps)


def route_to_star_form(f: Graph) -> Route:
    """Route from a forest to a labelled copy of ``ST_lambda``.

    In the first non-star component the least maximum-degree vertex ``c``
    repeatedly adopts a neighbour-of-neighbour: ``step(x, c, y)`` for the
    least neighbour ``x`` of ``c`` with another neighbour ``y``.
    """
    _require_forest(f)
    g = f
    steps: list[Step] = []
    for comp in f.components():
        while not _is_star_component(g, comp):
            c = max(comp, key=lambda v: (g.degree(v), -v))
            x = next(w for w in g.neighbors(c) if g.degree(w) >= 2)
            y = next(w for w in g.neighbors(x) if w != c)
            s = step(g, x, c, y)
            steps.append(s)
            g = s.target
    return Route.from_steps(f, steps)


def dnc_route(g: Graph, w: int, u: int) -> tuple[Route, tuple[Graph, Graph, Graph]]:
    """Move every neighbour of ``u`` that is not adjacent to ``w`` over to ``w``.

    Returns the route ``(H_0 = g, ..., H_k = G2)`` together with
    ``(G2, P', N')`` where ``P' = g - wu`` and ``N' = G2 - wu``, so that
    ``X(g) = X(G2) + X(P') - X(N')``.
    """
    if not (0 <= w < g.n and 0 <= u < g.n) or not g.has_edge(w, u):
        raise DomainError(f"({w},{u}) is not an edge")
    movers = [v for v in g.neighbors(u) if v != w and not g.has_edge(w, v)]
    steps = []
    cur = g
    for v in movers:
        s = step(cur, u, w, v)
        steps.append(s)
        cur = s.target
    route = Route.from_steps(g, steps)
    return route, (cur, g.modified(remove=[(w, u)]), cur.modified(remove=[(w, u)]))


def _dnc_star_move(g: Graph) -> tuple[int, int] | None:
    """The ``(w, u)`` pair of the next DNC move towards star form, if any."""
    for comp in g.components():
        if _is_star_component(g, comp):
            continue
        w = max(comp, key=lambda v: (g.degree(v), -v))
        u = next(x for x in g.neighbors(w) if g.degree(x) >= 2)
        return w, u
    return None


def route_to_star_form_dnc(f: Graph) -> Route:
    """Star form reached through whole DNC moves instead of single adoptions."""
    _require_forest(f)
    route = Route.trivial(f)
    while (move := _dnc_star_move(route.end)) is not None:
        route = route.concat(dnc_route(route.end, *move)[0])
    return route


class Routing(str, enum.Enum):
    PATH = "path"
    STAR = "star"
    DNC = "dnc"


_ROUTERS = {Routing.PATH: route_to_path_form, Routing.STAR: route_to_star_form, Routing.DNC: route_to_star_form_dnc}


def route_between_forests(f1: Graph, f2: Graph, via=Routing.PATH) -> Route:
    """Route from ``f1`` to a relabelled copy of ``f2`` through a common normal form.

    ``via`` picks the normal form (paths, or stars reached by adoptions or
    DNC moves). The second half is relabelled so the two halves meet exactly.
    """
    _require_forest(f1)
    _require_forest(f2)
    if part_of(f1) != part_of(f2):
        raise DomainError(f"no route exists: Part {part_of(f1)} != {part_of(f2)}")
    router = _ROUTERS[Routing(via)]
    r1 = router(f1)
    r2 = router(f2)
    r2 = r2.relabel(isomorphism(r2.end, r1.end))
    return r1.concat(r2.reversed())


def route_to_girth3(g: Graph) -> Route:
    """Slide one edge of a shortest cycle ``v1..vg`` until it closes a triangle.

    Graph ``i`` has ``v2v3`` replaced by ``v2 v_{i+2}``; the last one contains
    the triangle ``v1 v2 vg``. Takes ``g - 3`` steps.
    """
    cyc = shortest_cycle(g)
    if cyc is None:
        raise DomainError("graph is a forest; it has no cycle")
    steps = []
    cur = g
    length = len(cyc)
    v2 = cyc[1]
    for i in range(1, length - 2):
        # remove v2 v_{i+2}, add v2 v_{i+3} (1-based cycle indices)
        a, b = cyc[i + 1], cyc[i + 2]
        s = step(cur, a, b, v2)
        steps.append(s)
        cur = s.target
    return Route.from_steps(g, steps)


def _edge(e) -> tuple[int, int]:
    u, v = e
    return (min(u, v), max(u, v))


def triangle_split(g: Graph, e1, e2, e3) -> tuple[Graph, Graph, Graph]:
    """``(G - e1, G - e2, G - e1 - e2)`` for a triangle ``e1, e2, e3`` of ``g``."""
    e1, e2, e3 = _edge(e1), _edge(e2), _edge(e3)
    verts = set(e1) | set(e2) | set(e3)
    if len({e1, e2, e3}) != 3 or len(verts) != 3 or not all(e in g.edges for e in (e1, e2, e3)):
        raise DomainError(f"edges {e1}, {e2}, {e3} do not form a triangle of the graph")
    return g.modified(remove=[e1]), g.modified(remove=[e2]), g.modified(remove=[e1, e2])


# chromatic bases and expansions

@dataclass(frozen=True)
class ChromaticBasis:
    """One graph ``G_lam`` with ``Part(G_lam) = lam`` for every ``lam |- n``."""

    degree: int
    elements: tuple[tuple[Partition, Graph], ...]
    name: str = "custom"
    _index: Mapping = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        expected = enumerate_partitions(self.degree)
        ordered = tuple(sorted(((Partition(lam), g) for lam, g in self.elements), key=lambda t: sort_key(t[0])))
        if tuple(lam for lam, _ in ordered) != expected:
            raise DomainError(f"a chromatic basis needs exactly one graph per partition of {self.degree}")
        for lam, g in ordered:
            if g.n != self.degree:
                raise DomainError(f"basis graph for {lam} has {g.n} vertices, expected {self.degree}")
            if part_of(g) != lam:
                raise DomainError(f"basis graph for {lam} has Part {part_of(g)}")
        object.__setattr__(self, "elements", ordered)
        object.__setattr__(self, "_index", MappingProxyType(dict(ordered)))

    @classmethod
    def from_mapping(cls, degree: int, mapping: Mapping, name: str = "custom") -> "ChromaticBasis":
        return cls(degree, tuple((Partition(lam), g) for lam, g in mapping.items()), name)

    def element(self, lam) -> Graph:
        return self._index[Partition(lam)]

    @property
    def forest_basis(self) -> bool:
        return all(g.is_forest() for _, g in self.elements)


def star_basis(n: int) -> ChromaticBasis:
    return ChromaticBasis.from_mapping(n, {lam: generate_special("star", lam) for lam in enumerate_partitions(n)}, "star")


def path_basis(n: int) -> ChromaticBasis:
    return ChromaticBasis.from_mapping(n, {lam: generate_special("path", lam) for lam in enumerate_partitions(n)}, "path")


def load_basis_file(path: str | Path) -> ChromaticBasis:
    """Read a basis file with one ``lambda ; graph6`` line per partition."""
    from .graphio import decode_graph6

    mapping = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if ";" not in line:
            raise DomainError(f"{path}:{lineno}: expected 'lambda ; graph6'")
        lam_text, g6 = (t.strip() for t in line.split(";", 1))
        lam = Partition.parse(lam_text)
        if lam in mapping:
            raise DomainError(f"{path}:{lineno}: partition {lam} listed twice")
        mapping[lam] = decode_graph6(g6)
    if not mapping:
        raise DomainError(f"{path}: empty basis file")
    degree = next(iter(mapping)).weight
    return ChromaticBasis.from_mapping(degree, mapping, f"file:{path}")


def named_basis(name: str, n: int) -> ChromaticBasis:
    if name == "star":
        return star_basis(n)
    if name == "path":
        return path_basis(n)
    if name.startswith("file:"):
        basis = load_basis_file(name[5:])
        if basis.degree != n:
            raise DomainError(f"basis file has degree {basis.degree}, graph has {n} vertices")
        return basis
    raise DomainError(f"unknown basis {name!r}; use star, path or file:<path>")


@dataclass(frozen=True, eq=False)
class BasisExpansion:
    basis: ChromaticBasis
    coeffs: Mapping[Partition, Fraction]
    subject: Graph

    def __post_init__(self):
        clean = {Partition(k): Fraction(v) for k, v in self.coeffs.items() if v}
        object.__setattr__(self, "coeffs", MappingProxyType({k: clean[k] for k in sorted(clean, key=sort_key)}))

    def __getitem__(self, lam) -> Fraction:
        return self.coeffs.get(Partition(lam), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, BasisExpansion):
            return NotImplemented
        return self.basis == other.basis and dict(self.coeffs) == dict(other.coeffs)

    def reconstruct(self) -> MPoly:
        out = MPoly.zero(self.basis.degree)
        for lam, c in self.coeffs.items():
            out = out + c * csf(self.basis.element(lam))
        return out

    def verify(self) -> None:
        if self.reconstruct() != csf(self.subject):
            raise VerificationError("basis expansion does not reproduce the CSF of its subject")

    def to_json(self) -> dict:
        return {
            "basis": self.basis.name,
            "n": self.basis.degree,
            "coeffs": {str(lam): str(c) for lam, c in self.coeffs.items()},
        }



def _accumulate(out: dict, coeffs: Mapping, sign: int) -> None:
    for lam, c in coeffs.items():
        v = out.get(lam, 0) + sign * c
        if v:
            out[lam] = v
        else:
            out.pop(lam, None)


class _Expander:
    """Memoised recursive expansion for one (basis, routing) pair."""

    def __init__(self, basis: ChromaticBasis, routing: Routing):
        self.basis = basis
        self.routing = routing
        self.memo: dict[bytes, dict] = {}
        self.lock = threading.RLock()
        self.element_keys = {canonical_key(g): lam for lam, g in basis.elements}

    def expand(self, g: Graph) -> dict:
        key, perm = canonical_form(g)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        if len(self.memo) >= MAX_MEMO:
            raise ResourceGuardError(f"expansion memo exceeded {MAX_MEMO} entries")
        result = self._expand_canonical(g.relabel(perm), key)
        self.memo[key] = result
        return result

    def _expand_canonical(self, g: Graph, key: bytes) -> dict:
        lam = part_of(g)
        ones = Partition((1,) * g.n)
        if g.num_edges == 0:
            return {ones: 1}
        if self.element_keys.get(key) == lam:
            return {lam: 1}
        out: dict = {}
        if g.is_forest():
            if self.routing is Routing.DNC:
                return self._expand_forest_dnc(g, lam)
            route = route_between_forests(g, self.basis.element(lam), via=self.routing)
            out[lam] = 1
            self._add_march(out, route)
            return out
        if girth(g) > 3:
            route = route_to_girth3(g)
            self._add_march(out, route)
            g = route.end
        a, b, c = find_triangle(g)
        g23, g13, g3 = triangle_split(g, (a, b), (a, c), (b, c))
        _accumulate(out, self.expand(g23), 1)
        _accumulate(out, self.expand(g13), 1)
        _accumulate(out, self.expand(g3), -1)
        return out

    def _add_march(self, out: dict, route: Route) -> None:
        m = march(route)
        for p in m.positive:
            _accumulate(out, self.expand(p), 1)
        for q in m.negative:
            _accumulate(out, self.expand(q), -1)

    def _expand_forest_dnc(self, g: Graph, lam: Partition) -> dict:
        out: dict = {}
        move = _dnc_star_move(g)
        if move is not None:
            _, (g2, p, q) = dnc_route(g, *move)
            _accumulate(out, self.expand(g2), 1)
            _accumulate(out, self.expand(p), 1)
            _accumulate(out, self.expand(q), -1)
            return out
        # g is ST_lam but the basis element is not: walk the element to star form
        # and run its DNC relations backwards.
        out[lam] = 1
        h = self.basis.element(lam)
        while (move := _dnc_star_move(h)) is not None:
            _, (h2, p, q) = dnc_route(h, *move)
            _accumulate(out, self.expand(p), -1)
            _accumulate(out, self.expand(q), 1)
            h = h2
        return out


@lru_cache(maxsize=64)
def _expander(basis: ChromaticBasis, routing: Routing) -> _Expander:
    return _Expander(basis, routing)


def expand_in_forest_basis(g: Graph, basis: ChromaticBasis, strategy=Routing.PATH) -> BasisExpansion:
    """Coefficients of ``X(g)`` in a forest basis, via routes and triangle splits."""
    if not basis.forest_basis:
        raise DomainError("route expansion needs a forest basis; use expand_via_linear_solve")
    if g.n != basis.degree:
        raise DomainError(f"graph has {g.n} vertices, basis has degree {basis.degree}")
    expander = _expander(basis, Routing(strategy))
    with expander.lock:
        coeffs = dict(expander.expand(g))
    return BasisExpansion(basis, coeffs, g)


def expand_via_linear_solve(g: Graph, basis: ChromaticBasis) -> BasisExpansion:
    if g.n != basis.degree:
        raise DomainError(f"graph has {g.n} vertices, basis has degree {basis.degree}")
    parts = enumerate_partitions(basis.degree)
    rows = [[csf(h)[mu] for mu in parts] for _, h in basis.elements]
    target = [csf(g)[mu] for mu in parts]
    sol = solve_left(rows, target)
    if sol is None:
        raise NotABasisError("the basis CSFs are linearly dependent; this assignment is not a basis")
    return BasisExpansion(basis, {lam: c for (lam, _), c in zip(basis.elements, sol)}, g)


def truncate_expansion(x: BasisExpansion, mu, k: int) -> BasisExpansion:
    """Keep the coefficients with ``len(lam) <= len(mu) + k``."""
    mu = Partition(mu)
    if part_of(x.subject) != mu:
        raise DomainError(f"mu={mu} is not Part of the expansion's subject ({part_of(x.subject)})")
    limit = len(mu) + k
    return BasisExpansion(x.basis, {lam: c for lam, c in x.coeffs.items() if len(lam) <= limit}, x.subject)

"""U-polynomials, truncated expansions, corner numbers and the X/U comparison."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping

from . import kernels
from .errors import DomainError, check_limit
from .graphs import Graph, part_of
from .partitions import Partition, enumerate_partitions, sort_key
from .routes import (
    BasisExpansion,
    ChromaticBasis,
    expand_in_forest_basis,
    expand_via_linear_solve,
    truncate_expansion,
)

MAX_FOREST_EDGES = 24
MAX_GENERAL_EDGES = 20


class UPoly:
    """``sum_lam c_lam x_lam`` with non-negative integer coefficients.

    Kept separate from ``MPoly``: ``x_lam`` is a product of power-like
    variables, not a monomial symmetric function.
    """

    __slots__ = ("degree", "_coeffs")

    def __init__(self, degree: int, coeffs: Mapping | None = None):
        acc: dict[Partition, int] = {}
        for lam, c in (coeffs or {}).items():
            lam = Partition(lam)
            if lam.weight != degree:
                raise DomainError(f"x_{lam} has degree {lam.weight}, expected {degree}")
            acc[lam] = acc.get(lam, 0) + int(c)
        self.degree = degree
        self._coeffs = {k: acc[k] for k in sorted(acc, key=sort_key) if acc[k]}

    @property
    def coeffs(self) -> Mapping[Partition, int]:
        return MappingProxyType(self._coeffs)

    def __getitem__(self, lam) -> int:
        return self._coeffs.get(Partition(lam), 0)

    def __iter__(self):
        return iter(self._coeffs.items())

    def __eq__(self, other):
        if not isinstance(other, UPoly):
            return NotImplemented
        return self.degree == other.degree and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.degree, tuple(self._coeffs.items())))

    def _combine(self, other: "UPoly", sign: int) -> "UPoly":
        if self.degree != other.degree:
            raise DomainError("degree mismatch")
        out = dict(self._coeffs)
        for lam, c in other:
            out[lam] = out.get(lam, 0) + sign * c
        return UPoly(self.degree, out)

    # differences of U-polynomials can go negative; that is fine for identities
    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __repr__(self):
        terms = " + ".join(f"{c}*x[{lam}]" for lam, c in self._coeffs.items()) or "0"
        return f"UPoly({self.degree}, {terms})"

    def total_mass(self) -> int:
        return sum(self._coeffs.values())

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "basis": "x_lambda",
            "coeffs": {str(lam): str(c) for lam, c in self._coeffs.items()},
        }


class UPolyXY:
    """Two-variable ``U_G``: map ``(lam, power of (y - 1)) -> integer``."""

    __slots__ = ("degree", "_terms")

    def __init__(self, degree: int, terms: Mapping):
        clean = {(Partition(lam), int(p)): int(c) for (lam, p), c in terms.items() if c}
        self.degree = degree
        self._terms = {k: clean[k] for k in sorted(clean, key=lambda t: (sort_key(t[0]), t[1]))}

    @property
    def terms(self) -> Mapping[tuple[Partition, int], int]:
        return MappingProxyType(self._terms)

    def __getitem__(self, key) -> int:
        lam, p = key
        return self._terms.get((Partition(lam), p), 0)

    def __eq__(self, other):
        if not isinstance(other, UPolyXY):
            return NotImplemented
        return self.degree == other.degree and self._terms == other._terms

    def __hash__(self):
        return hash((self.degree, tuple(self._terms.items())))

    def __repr__(self):
        return f"UPolyXY({self.degree}, {self._terms})"

    def forest_part(self) -> UPoly:
        """The ``(y - 1)^0`` slice, which is all of ``U`` for a forest."""
        return UPoly(self.degree, {lam: c for (lam, p), c in self._terms.items() if p == 0})

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "basis": "x_lambda",
            "terms": [
                {"lambda": str(lam), "y_power": str(p), "coeff": str(c)} for (lam, p), c in self._terms.items()
            ],
        }


def _census(g: Graph, max_size: int) -> dict:
    raw = kernels.edge_subset_census(g.n, g.sorted_edges(), max_size)
    return {(nullity, Partition(sizes)): c for (nullity, sizes), c in raw.items()}


def u_polynomial_forest(f: Graph) -> UPoly:
    if not f.is_forest():
        raise DomainError("u_polynomial_forest needs a forest")
    check_limit("u_polynomial_forest edges", f.num_edges, MAX_FOREST_EDGES)
    return UPoly(f.n, {lam: c for (_, lam), c in _census(f, f.num_edges).items()})


def restricted_u(f: Graph, k: int) -> UPoly:
    """U restricted to edge subsets with at most ``k`` edges."""
    if not f.is_forest():
        raise DomainError("restricted_u needs a forest")
    if k < 0:
        raise DomainError(f"k must be non-negative: {k}")
    check_limit("restricted_u edges", f.num_edges, MAX_FOREST_EDGES)
    return UPoly(f.n, {lam: c for (_, lam), c in _census(f, min(k, f.num_edges)).items()})


def u_polynomial_general(g: Graph) -> UPolyXY:
    """Edge-subset expansion; the ``y - 1`` exponent is the nullity ``|A| - n + k(V, A)``."""
    check_limit("u_polynomial_general edges", g.num_edges, MAX_GENERAL_EDGES)
    return UPolyXY(g.n, {(lam, p): c for (p, lam), c in _census(g, g.num_edges).items()})


# corner numbers

class _Infinite:
    """Corner number of a forest whose expansion is exactly its basis element."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"

    def __str__(self):
        return "infinite"

    def __reduce__(self):
        return (_Infinite, ())

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("csflab.INFINITE")

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self


INFINITE = _Infinite()


def _check_forest_basis_for(f: Graph, basis: ChromaticBasis) -> Partition:
    if not f.is_forest():
        raise DomainError("corner numbers are defined for forests")
    if f.n != basis.degree:
        raise DomainError(f"forest has {f.n} vertices, basis has degree {basis.degree}")
    mu = part_of(f)
    if not basis.element(mu).is_forest():
        raise DomainError(f"basis element for {mu} is not a forest")
    return mu


def _corner_from_expansion(x: BasisExpansion, mu: Partition):
    unit = {mu: Fraction(1)}
    if dict(x.coeffs) == unit:
        return INFINITE
    k = 1
    while dict(truncate_expansion(x, mu, k).coeffs) == unit:
        k += 1
    return k


def corner_number(f: Graph, basis: ChromaticBasis):
    """Least ``k >= 1`` whose level-``k`` truncation differs from the unit vector, or ``INFINITE``."""
    mu = _check_forest_basis_for(f, basis)
    return _corner_from_expansion(_expansion(f, basis), mu)


def _expansion(f: Graph, basis: ChromaticBasis) -> BasisExpansion:
    if basis.forest_basis:
        return expand_in_forest_basis(f, basis)
    return expand_via_linear_solve(f, basis)


@dataclass(frozen=True)
class UEquivRow:
    lam: Partition
    x_coeff: Fraction
    u_difference: int
    in_literal_range: bool  # len(lam) <= corner
    in_level_range: bool  # len(lam) <= len(mu) + corner

    @property
    def equal(self) -> bool:
        return self.x_coeff == self.u_difference


@dataclass(frozen=True)
class UEquivReport:
    forest: Graph
    basis_name: str
    mu: Partition
    corner: object
    rows: tuple[UEquivRow, ...]
    mu_x_coeff: Fraction
    mu_u_difference: int

    @property
    def mu_row_ok(self) -> bool:
        return self.mu_x_coeff == 1 and self.mu_u_difference == 0

    def mismatches(self, reading: str = "level") -> list[UEquivRow]:
        attr = {"literal": "in_literal_range", "level": "in_level_range"}[reading]
        return [r for r in self.rows if getattr(r, attr) and not r.equal]

    @property
    def ok(self) -> bool:
        return self.mu_row_ok and not self.mismatches("literal") and not self.mismatches("level")

    def lines(self) -> list[str]:
        out = [f"mu={self.mu} corner={self.corner} basis={self.basis_name}"]
        out.append(f"  [{self.mu}] X={self.mu_x_coeff} U-diff={self.mu_u_difference} ok={self.mu_row_ok}")
        for r in self.rows:
            tags = ",".join(t for t, on in (("literal", r.in_literal_range), ("level", r.in_level_range)) if on)
            out.append(f"  [{r.lam}] X={r.x_coeff} U-diff={r.u_difference} equal={r.equal} range={tags}")
        return out


def verify_theorem_u_equiv(f1: Graph, basis: ChromaticBasis) -> UEquivReport:
    """Compare ``[lam]X_{F1,B}`` with ``[lam]U_{F1} - [lam]U_{F2}``, ``F2 = B_mu``.

    Rows cover every ``lam != mu`` in the wider (level) range
    ``len(lam) <= len(mu) + corner``; each row records whether it also lies
    in the literal range ``len(lam) <= corner``. An infinite corner licenses
    every partition.
    """
    mu = _check_forest_basis_for(f1, basis)
    f2 = basis.element(mu)
    x = _expansion(f1, basis)
    corner = _corner_from_expansion(x, mu)
    u1, u2 = u_polynomial_forest(f1), u_polynomial_forest(f2)
    rows = []
    for lam in enumerate_partitions(f1.n):
        if lam == mu:
            continue
        literal = corner is INFINITE or len(lam) <= corner
        level = corner is INFINITE or len(lam) <= len(mu) + corner
        if level:
            rows.append(UEquivRow(lam, x[lam], u1[lam] - u2[lam], literal, level))
    return UEquivReport(f1, basis.name, mu, corner, tuple(rows), x[mu], u1[mu] - u2[mu])

"""Exhaustive and seeded verification suites, shared by the CLI and the tests."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .graphs import enumerate_graphs, generate_special, part_of
from .partitions import Partition, enumerate_partitions, is_refinement, reduced_form
from .reconstruct import exact_rank, k_lambda_family, lambda_matrix, reconstruct_coefficient
from .routes import (
    ChromaticBasis,
    Routing,
    march_identity_residual,
    path_basis,
    random_route,
    route_between_forests,
    route_to_girth3,
    star_basis,
    step,
    valid_witnesses,
    expand_in_forest_basis,
    expand_via_linear_solve,
)
from .symmetric import csf, stable_partition_census
from .upolynomial import u_polynomial_forest, verify_theorem_u_equiv

SUITES = ("step", "march", "expansion", "upoly", "corner", "theorem4", "ranks")
DEFAULT_N = {"step": 7, "march": 7, "expansion": 6, "upoly": 7, "corner": 7, "theorem4": 5, "ranks": 8}


@dataclass
class SuiteResult:
    suite: str
    label: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        self.failures.append(message)

    def summary(self) -> str:
        status = "OK" if self.ok else "FAILED"
        return f"{self.label}={self.checked}, identities={status}, failures={len(self.failures)}"


def suite_step(n_max: int = 7) -> SuiteResult:
    """Step identity and step conservation for every valid step on every forest."""
    res = SuiteResult("step", "steps")
    for n in range(1, n_max + 1):
        for f in enumerate_graphs(n, "forests"):
            lam = part_of(f)
            for w in valid_witnesses(f):
                s = step(f, *w)
                res.checked += 1
                if csf(s.source) != csf(s.target) + csf(s.positive) - csf(s.negative):
                    res.fail(f"step identity fails on {f} witness {w}")
                if part_of(s.target) != lam or s.target.num_edges != f.num_edges:
                    res.fail(f"step does not conserve Part/edges on {f} witness {w}")
                for r in (s.positive, s.negative):
                    if r.num_edges != f.num_edges - 1 or len(part_of(r)) != len(lam) + 1:
                        res.fail(f"remainder shape wrong on {f} witness {w}")
    return res


def suite_march(n_max: int = 7, count: int = 1000, seed: int = 0) -> SuiteResult:
    """March identity on seeded random routes, plus every routing construction."""
    res = SuiteResult("march", "routes")
    rng = random.Random(seed)
    pool = [g for n in range(3, n_max + 1) for g in enumerate_graphs(n) if valid_witnesses(g)]
    for _ in range(count):
        g = rng.choice(pool)
        route = random_route(g, rng.randint(1, 8), rng)
        res.checked += 1
        route.validate()
        if not march_identity_residual(route).is_zero():
            res.fail(f"march identity fails on a route from {g}")
    for n in range(1, min(n_max, 6) + 1):
        forests = enumerate_graphs(n, "forests")
        for f in forests:
            for via in Routing:
                route = route_between_forests(f, generate_special("path", part_of(f)), via)
                res.checked += 1
                route.validate()
                if not march_identity_residual(route).is_zero():
                    res.fail(f"march identity fails on {via.value} routing of {f}")
        for g in enumerate_graphs(n):
            if not g.is_forest():
                route = route_to_girth3(g)
                res.checked += 1
                if not march_identity_residual(route).is_zero():
                    res.fail(f"march identity fails on girth-3 routing of {g}")
    return res


def suite_expansion(n_max: int = 6) -> SuiteResult:
    """Reconstruction identity, strategy agreement, and the support / leading-one corollaries."""
    res = SuiteResult("expansion", "graphs")
    for n in range(1, n_max + 1):
        bases = (star_basis(n), path_basis(n))
        for g in enumerate_graphs(n):
            res.checked += 1
            lam = part_of(g)
            for b in bases:
                solved = expand_via_linear_solve(g, b)
                for strategy in Routing:
                    x = expand_in_forest_basis(g, b, strategy)
                    if x.reconstruct() != csf(g):
                        res.fail(f"{b.name}/{strategy.value}: expansion of {g} does not reproduce its CSF")
                    if x != solved:
                        res.fail(f"{b.name}/{strategy.value}: route and linear-solve disagree on {g}")
                for mu in solved.coeffs:
                    if not is_refinement(mu, lam):
                        res.fail(f"{b.name}: [{mu}] nonzero for {g} but {mu} does not refine {lam}")
                if g.is_forest() and solved[lam] != 1:
                    res.fail(f"{b.name}: leading coefficient of forest {g} is {solved[lam]}")
    return res


def suite_upoly(n_max: int = 7, csf_equiv_n: int | None = None) -> SuiteResult:
    """U-step relation on every step of every forest, and X = U classes on forests (up to n_max + 1)."""
    csf_equiv_n = n_max + 1 if csf_equiv_n is None else csf_equiv_n
    res = SuiteResult("upoly", "steps")
    for n in range(1, n_max + 1):
        for f in enumerate_graphs(n, "forests"):
            u = u_polynomial_forest(f)
            if u.total_mass() != 2 ** f.num_edges:
                res.fail(f"U mass of {f} is not 2^|E|")
            for w in valid_witnesses(f):
                s = step(f, *w)
                res.checked += 1
                rhs = u_polynomial_forest(s.target) + u_polynomial_forest(s.positive) - u_polynomial_forest(s.negative)
                if u != rhs:
                    res.fail(f"U-step relation fails on {f} witness {w}")
    mismatch = _x_u_class_mismatch(csf_equiv_n)
    if mismatch:
        res.fail(mismatch)
    res.notes.append(f"csf and U classes coincide on forests n<={csf_equiv_n}" if not mismatch else mismatch)
    return res


def _x_u_class_mismatch(n_max: int) -> str | None:
    for n in range(1, n_max + 1):
        by_x: dict = {}
        by_u: dict = {}
        for i, f in enumerate(enumerate_graphs(n, "forests")):
            by_x.setdefault(csf(f), set()).add(i)
            by_u.setdefault(u_polynomial_forest(f), set()).add(i)
        if sorted(map(sorted, by_x.values())) != sorted(map(sorted, by_u.values())):
            return f"csf classes and U classes differ among forests on {n} vertices"
    return None


def _custom_tree_bases(n: int):
    """Star bases with the ``(n)`` element swapped for each tree in turn."""
    stars = {lam: generate_special("star", lam) for lam in enumerate_partitions(n)}
    for t in enumerate_graphs(n, "trees"):
        yield ChromaticBasis.from_mapping(n, {**stars, Partition((n,)): t}, "custom")


def suite_corner(n_max: int = 7, tree_pairs_n: int = 7) -> SuiteResult:
    """The X/U comparison report for every forest in the star and path bases.

    Also compares every ordered pair of trees on up to ``tree_pairs_n``
    vertices through custom bases, which is where corner numbers above 1 occur.
    """
    res = SuiteResult("corner", "forests")
    corners: dict = {}

    def check(f, b):
        rep = verify_theorem_u_equiv(f, b)
        res.checked += 1
        corners[str(rep.corner)] = corners.get(str(rep.corner), 0) + 1
        if not rep.mu_row_ok:
            res.fail(f"{b.name}: mu-row check fails for {f}")
        for reading in ("literal", "level"):
            for row in rep.mismatches(reading):
                res.fail(
                    f"{b.name}: {reading} range mismatch for {f} at [{row.lam}]: "
                    f"X={row.x_coeff} U-diff={row.u_difference} (corner {rep.corner})"
                )

    for n in range(1, n_max + 1):
        for b in (star_basis(n), path_basis(n)):
            for f in enumerate_graphs(n, "forests"):
                check(f, b)
    for n in range(2, min(n_max, tree_pairs_n) + 1):
        for b in _custom_tree_bases(n):
            for f in enumerate_graphs(n, "trees"):
                check(f, b)
    res.notes.append("corner numbers seen: " + ", ".join(f"{k}:{v}" for k, v in sorted(corners.items())))
    return res


def suite_theorem4(n: int = 5) -> SuiteResult:
    """Reconstruction formula for every graph on exactly ``n`` vertices, every k, every k-reducible partition."""
    res = SuiteResult("theorem4", "graphs")
    for g in enumerate_graphs(n):
        res.checked += 1
        census = stable_partition_census(g)
        for k in range(1, n + 1):
            for lam in enumerate_partitions(n):
                if reduced_form(lam).weight > k:
                    continue
                got = reconstruct_coefficient(g, lam, k)
                if got != census.get(lam, 0):
                    res.fail(f"{g}: k={k} lam={lam} reconstructs {got}, census {census.get(lam, 0)}")
    return res


def suite_ranks(n_max: int = 8) -> SuiteResult:
    res = SuiteResult("ranks", "matrices")
    for n in range(1, n_max + 1):
        p = len(enumerate_partitions(n))
        m = lambda_matrix(k_lambda_family(n))
        res.checked += 1
        if not m.is_upper_triangular() or any(m.entries[i][i] != 1 for i in range(p)):
            res.fail(f"K_lambda matrix for n={n} is not unit upper-triangular")
        if exact_rank(m) != p:
            res.fail(f"K_lambda rank for n={n} is {exact_rank(m)}, expected {p}")
        if n <= 7:
            res.checked += 1
            r = exact_rank(lambda_matrix(enumerate_graphs(n, "forests")))
            if r != p:
                res.fail(f"forest rank for n={n} is {r}, expected {p}")
        if n >= 5:
            res.checked += 1
            r = exact_rank(lambda_matrix(enumerate_graphs(n, "trees")))
            if r != p - n + 1:
                res.fail(f"tree rank for n={n} is {r}, expected {p - n + 1}")
            res.notes.append(f"trees n={n}: rank {r}")
    return res


def run_suite(name: str, n: int | None = None, count: int = 1000, seed: int = 0) -> SuiteResult:
    n = DEFAULT_N[name] if n is None else n
    if name == "march":
        return suite_march(n, count, seed)
    return {
        "step": suite_step,
        "expansion": suite_expansion,
        "upoly": suite_upoly,
        "corner": suite_corner,
        "theorem4": suite_theorem4,
        "ranks": suite_ranks,
    }[name](n)


"""Acceptance criteria, one test each.

Every test records a single PASS/FAIL line (shown in the pytest terminal
summary) with the measured runtime against its limit. Caches are cleared
first so timings are cold. Run directly with ``python tests/test_acceptance.py``
to print the lines without pytest.
"""

from __future__ import annotations

import itertools
import random
import time

import acceptance_log
from csflab import (
    Graph,
    Partition,
    StepError,
    canonical_key,
    csf,
    csf_coloring_oracle,
    decode_graph6,
    encode_graph6,
    enumerate_graphs,
    expand_in_forest_basis,
    expand_via_linear_solve,
    path_graph,
    specialize_ones,
    star_basis,
    step,
)
from csflab import graphs as graphs_mod
from csflab import routes as routes_mod
from csflab import symmetric as symmetric_mod
from csflab.routes import march_identity_residual, random_route, valid_witnesses
from csflab.upolynomial import verify_theorem_u_equiv
from csflab.verify import suite_expansion, suite_ranks, suite_theorem4, suite_upoly, _x_u_class_mismatch
from oracles import brute_isomorphic, chromatic_deletion_contraction, partition_count, poly_eval


def _cold():
    symmetric_mod.csf.cache_clear()
    symmetric_mod.stable_partition_census.cache_clear()
    graphs_mod.canonical_form.cache_clear()
    graphs_mod._classes.cache_clear()
    routes_mod._expander.cache_clear()


class Criterion:
    def __init__(self, number: int, title: str, limit: float):
        self.number, self.title, self.limit = number, title, limit

    def __enter__(self):
        _cold()
        self.failures: list[str] = []
        self.detail = ""
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        if exc is not None:
            self.failures.append(f"exception {exc_type.__name__}: {exc}")
        if elapsed > self.limit:
            self.failures.append(f"runtime {elapsed:.1f}s exceeds {self.limit:.0f}s")
        status = "PASS" if not self.failures else "FAIL"
        line = f"{status} criterion {self.number:>2}: {self.title}: {self.detail} [{elapsed:.1f}s, limit {self.limit:.0f}s]"
        if self.failures:
            line += " :: " + "; ".join(self.failures[:3])
        acceptance_log.LINES.append(line)
        print(line)
        if exc is None:
            assert not self.failures, line
        return False


def test_c01_oracle_equivalence():
    with Criterion(1, "csf equals the colouring oracle for every graph n<=5", 10) as c:
        count = 0
        for n in range(1, 6):
            for g in enumerate_graphs(n):
                count += 1
                if csf(g) != csf_coloring_oracle(g):
                    c.failures.append(f"mismatch on {encode_graph6(g)}")
        c.detail = f"{count} classes, exact equality"
        assert count == 1 + 2 + 4 + 11 + 34


def test_c02_chromatic_specialisation():
    with Criterion(2, "X_G(1^k) equals deletion-contraction chi_G(k), n=6", 60) as c:
        graphs = enumerate_graphs(6)
        for g in graphs:
            chi = chromatic_deletion_contraction(g)
            f = csf(g)
            for k in range(7):
                if specialize_ones(f, k) != poly_eval(chi, k):
                    c.failures.append(f"{encode_graph6(g)} at k={k}")
        c.detail = f"{len(graphs)} classes x k=0..6"
        assert len(graphs) == 156


def test_c03_step_and_march_identities():
    with Criterion(3, "step identity on all forest triples n<=7; march identity on 1000 routes", 120) as c:
        steps = rejected = 0
        for n in range(3, 8):
            for f in enumerate_graphs(n, "forests"):
                for v1, v2, v3 in itertools.permutations(range(n), 3):
                    valid = f.has_edge(v1, v2) and f.has_edge(v1, v3) and not f.has_edge(v2, v3)
                    try:
                        s = step(f, v1, v2, v3)
                    except StepError:
                        rejected += 1
                        if valid:
                            c.failures.append(f"valid witness rejected on {encode_graph6(f)}")
                        continue
                    if not valid:
                        c.failures.append(f"invalid witness accepted on {encode_graph6(f)}")
                    steps += 1
                    if csf(s.source) != csf(s.target) + csf(s.positive) - csf(s.negative):
                        c.failures.append(f"step identity fails on {encode_graph6(f)} {(v1, v2, v3)}")
        rng = random.Random(2024)
        pool = [g for n in range(3, 8) for g in enumerate_graphs(n) if valid_witnesses(g)]
        for _ in range(1000):
            route = random_route(rng.choice(pool), rng.randint(1, 10), rng)
            route.validate()
            if not march_identity_residual(route).is_zero():
                c.failures.append(f"march identity fails from {encode_graph6(route.start)}")
        c.detail = f"{steps} valid steps, {rejected} rejected triples, 1000 routes (seed 2024)"


def test_c04_expansion_correctness():
    with Criterion(4, "expansions n<=6 in star/path bases: identity, strategies = linear solve, support, leading 1", 300) as c:
        res = suite_expansion(6)
        c.failures.extend(res.failures)
        c.detail = f"{res.checked} graphs x 2 bases x 3 strategies"


def test_c05_golden_value():
    with Criterion(5, "expand(P4, star basis) = {(4):1, (3,1):-1, (2,2):1}", 60) as c:
        want = {Partition((4,)): 1, Partition((3, 1)): -1, Partition((2, 2)): 1}
        routed = dict(expand_in_forest_basis(path_graph(4), star_basis(4)).coeffs)
        solved = dict(expand_via_linear_solve(path_graph(4), star_basis(4)).coeffs)
        if routed != want:
            c.failures.append(f"route expansion gave {routed}")
        if solved != want:
            c.failures.append(f"linear solve gave {solved}")
        c.detail = "route expansion and linear solve both exact"


def test_c06_u_step_relation():
    with Criterion(6, "U-step relation on every step of every forest n<=7", 60) as c:
        res = suite_upoly(7, csf_equiv_n=0)
        c.failures.extend(res.failures)
        c.detail = f"{res.checked} steps"


def test_c07_theorem_u_equiv():
    with Criterion(7, "X/U comparison for all forests n<=7 in the star basis, both range readings", 300) as c:
        count = 0
        for n in range(1, 8):
            b = star_basis(n)
            for f in enumerate_graphs(n, "forests"):
                count += 1
                rep = verify_theorem_u_equiv(f, b)
                if not rep.mu_row_ok:
                    c.failures.append(f"mu row fails for {encode_graph6(f)}")
                for reading in ("literal", "level"):
                    for row in rep.mismatches(reading):
                        c.failures.append(
                            f"{reading} counterexample {encode_graph6(f)} [{row.lam}] X={row.x_coeff} U={row.u_difference}"
                        )
        c.detail = f"{count} forests, mu-row checked, 0 mismatches required under literal and level readings"


def test_c08_x_equals_u_classes():
    with Criterion(8, "csf-equality classes equal U-equality classes, forests n<=8", 300) as c:
        mismatch = _x_u_class_mismatch(8)
        if mismatch:
            c.failures.append(mismatch)
        c.detail = f"{sum(len(enumerate_graphs(n, 'forests')) for n in range(1, 9))} forests"


def test_c09_reconstruction_theorem():
    with Criterion(9, "reconstruction formula for all graphs n<=6, all k, all k-reducible lambda", 600) as c:
        count = 0
        for n in range(1, 7):
            res = suite_theorem4(n)
            count += res.checked
            c.failures.extend(res.failures)
        c.detail = f"{count} graphs, exact"


def test_c10_ranks():
    with Criterion(10, "K_lambda unit upper-triangular rank p(n) n<=8; forests p(n) n<=7; trees p(n)-n+1 n=5..8", 300) as c:
        res = suite_ranks(8)
        c.failures.extend(res.failures)
        expected = [partition_count(n) - n + 1 for n in (5, 6, 7, 8)]
        if expected != [3, 6, 9, 15]:
            c.failures.append(f"partition oracle gives tree ranks {expected}")
        c.detail = f"{res.checked} matrices, tree ranks {expected}"


def test_c11_graph6_and_canonical_form():
    with Criterion(11, "graph6 round trip n<=7; canonical key vs brute-force isomorphism on 10000 pairs", 120) as c:
        total = 0
        for n in range(0, 8):
            for g in enumerate_graphs(n):
                total += 1
                if canonical_key(decode_graph6(encode_graph6(g))) != canonical_key(g):
                    c.failures.append(f"round trip changes class of {encode_graph6(g)}")
        rng = random.Random(11)
        iso = 0
        for _ in range(10_000):
            n = rng.randint(1, 8)
            pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
            g = Graph(n, [e for e in pairs if rng.random() < 0.5])
            if rng.random() < 0.5:
                perm = list(range(n))
                rng.shuffle(perm)
                h = g.relabel(perm)
            else:
                # same edge count and degree sequence is common here: the hard case
                h = Graph(n, rng.sample(pairs, g.num_edges))
            same = brute_isomorphic(g, h)
            iso += same
            if (canonical_key(g) == canonical_key(h)) != same:
                c.failures.append(f"disagreement on {encode_graph6(g)} / {encode_graph6(h)}")
        c.detail = f"{total} graphs round-tripped, 10000 pairs ({iso} isomorphic)"


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_c"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)

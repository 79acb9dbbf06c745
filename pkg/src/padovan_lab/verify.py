"""Verification suites: every closed form checked against an independent computation.

Each ``check_*`` function returns a list of :class:`Check` records, one per
parameter case.  ``run_suite`` groups them under the suite names used by the
``verify`` command.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from . import closed_forms as cf
from .closed_forms import FamilyParams
from .graph_core import (
    LabeledGraph,
    automorphism_group,
    build_graph,
    check_isomorphism,
    compose,
    cube_polynomial_bruteforce,
    degree_histogram,
    diameter,
    distance_matrix,
    is_connected,
    median_triples,
    permutation_from_map,
    shape_name,
)
from .isomorphisms import alpha, beta, fundamental_branch
from .partitions import (
    WeakPartition,
    conjugate,
    entrywise_median,
    hamming,
    hypercube_embedding,
    partition_distance,
    tau,
)
from .words import edge_to_c_word, enumerate_c_words, enumerate_padovan_words


@dataclass
class Check:
    suite: str
    name: str
    params: str
    expected: object
    actual: object
    passed: bool | None = None

    def __post_init__(self):
        if self.passed is None:
            self.passed = self.expected == self.actual

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.suite:<7} {self.name:<28} {self.params:<22} expected={self.expected} actual={self.actual}"


@dataclass
class VerificationReport:
    suite: str
    checks: list[Check] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"{verdict}: suite {self.suite}: {len(self.checks)} checks, {len(self.failures)} failed"


@lru_cache(maxsize=None)
def _graph(family: str, p: int, q: int) -> LabeledGraph:
    return build_graph(family, FamilyParams.from_pq(p, q))


@lru_cache(maxsize=None)
def _brute_cubes(p: int, q: int) -> cf.CubePolynomial:
    return cube_polynomial_bruteforce(_graph("padovan", p, q))


def _pq(params: FamilyParams) -> str:
    return f"p={params.p} q={params.q}"


def _nk(params: FamilyParams) -> str:
    return f"n={params.n} k={params.k}"


# --- counts ------------------------------------------------------------------


def check_sequence(max_n: int) -> list[Check]:
    out = []
    for n in range(1, max_n + 1):
        target = cf.padovan_number(n + 2)
        out.append(Check("order", "words(n) = P(n+2)", f"n={n}", target, len(enumerate_padovan_words(n))))
        kmin, kmax = cf.weight_range(n)
        closed = sum(cf.vertex_count(FamilyParams.from_nk(n, k)) for k in range(kmin, kmax + 1))
        out.append(Check("order", "sum_k |V| formula = P(n+2)", f"n={n}", target, closed))
    return out


def check_order(max_n: int) -> list[Check]:
    return [
        Check("order", "|V| = C(n-k-1, 2n-3k-2)", _nk(params), cf.vertex_count(params),
              len(enumerate_padovan_words(params.n, params.k)))
        for params in cf.valid_params(max_n)
    ]


def check_size(max_pq: int) -> list[Check]:
    out = []
    for params in cf.pq_grid(max_pq):
        p, q = params.p, params.q
        g = _graph("ab", p, q)
        out.append(Check("size", "|E| = q C(p+q-1, p-1)", _pq(params), cf.edge_count(params), g.size))
        out.append(Check("size", "|E| in (n,k) form", _nk(params), cf.edge_count_nk(params.n, params.k), g.size))
        images = {edge_to_c_word(g.vertices[i], g.vertices[j]) for i, j in g.edges()}
        expected = set(enumerate_c_words(p, q))
        out.append(Check("size", "edges <-> c-words", _pq(params), len(expected), len(images),
                         passed=images == expected and len(images) == g.size))
    return out


def check_degrees(max_pq: int) -> list[Check]:
    out = []
    for params in cf.pq_grid(max_pq):
        p, q = params.p, params.q
        if p + q == 0:
            continue
        hist = degree_histogram(_graph("ab", p, q))
        out.append(Check("degree", "degree histogram", _pq(params), cf.degree_distribution(p, q), hist))
        out.append(Check("degree", "min/max degree", _pq(params),
                         (cf.min_degree(p, q), cf.max_degree(p, q)), (min(hist), max(hist))))
    return out


# --- isomorphisms ------------------------------------------------------------


def check_isomorphisms(max_n: int) -> list[Check]:
    out = []
    for params in cf.valid_params(max_n):
        phi = build_graph("padovan", params)
        a = build_graph("ab", params)
        pi = build_graph("partition", params)
        out.append(Check("iso", "alpha: Phi -> A", _nk(params), True, check_isomorphism(phi, a, alpha)))
        out.append(Check("iso", "beta: A -> Pi", _pq(params), True,
                         check_isomorphism(a, pi, lambda w: str(beta(w)))))
    return out


def decomposition_report(params: FamilyParams) -> dict[str, object]:
    """Split Phi^n_k by prefix and compare the pieces with the smaller graphs."""
    n, k = params.n, params.k
    g = build_graph("padovan", params)
    branches = {w: fundamental_branch(w) for w in g.vertices}
    left = {w for w, b in branches.items() if b.branch01 is not None}
    right = set(g.vertices) - left
    inside_left, inside_right, cross = set(), set(), set()
    for i, j in g.edges():
        u, v = g.vertices[i], g.vertices[j]
        if u in left and v in left:
            inside_left.add(frozenset((branches[u].branch01, branches[v].branch01)))
        elif u in right and v in right:
            inside_right.add(frozenset((branches[u].branch011, branches[v].branch011)))
        else:
            cross.add(frozenset((u, v)))
    predicted_cross = {
        frozenset((w, b.partner)) for w, b in branches.items() if b.partner is not None and b.partner in branches
    }
    sub_left = build_graph("padovan", FamilyParams.from_nk(n - 2, k - 1, strict=False))
    sub_right = build_graph("padovan", FamilyParams.from_nk(n - 3, k - 2, strict=False))
    return {
        "left_matches": {branches[w].branch01 for w in left} == set(sub_left.vertices)
        and inside_left == sub_left.label_edges(),
        "right_matches": {branches[w].branch011 for w in right} == set(sub_right.vertices)
        and inside_right == sub_right.label_edges(),
        "cross_matches": cross == predicted_cross,
        "cross_count": len(cross),
        "sizes": (len(left), len(right)),
    }


def check_decomposition(max_n: int) -> list[Check]:
    out = []
    for params in cf.valid_params(max_n):
        if params.n < 6:
            continue
        rep = decomposition_report(params)
        out.append(Check("iso", "01/011 halves and cross pairs", _nk(params), (True, True, True),
                         (rep["left_matches"], rep["right_matches"], rep["cross_matches"])))
        expected = cf.vertex_count(FamilyParams.from_nk(params.n - 5, params.k - 3, strict=False))
        out.append(Check("iso", "cross edges = |V(n-5,k-3)|", _nk(params), expected, rep["cross_count"]))
    return out


def check_connected(max_n: int) -> list[Check]:
    return [
        Check("iso", "connected", _nk(params), True, is_connected(build_graph("padovan", params)))
        for params in cf.valid_params(max_n)
    ]


# --- metric ----------------------------------------------------------------------


def check_metric(max_pq: int) -> list[Check]:
    out = []
    for params in cf.pq_grid(max_pq):
        g = _graph("partition", params.p, params.q)
        dist = distance_matrix(g)
        parts = [WeakPartition.parse(v, params.p) for v in g.vertices]
        bad = sum(
            1
            for i in range(g.order)
            for j in range(g.order)
            if partition_distance(parts[i], parts[j]) != dist[i, j]
        )
        out.append(Check("metric", "L1 distance = BFS (bad pairs)", _pq(params), 0, bad))
        out.append(Check("metric", "diam(Pi) = pq", _pq(params), cf.diameter_formula(params), int(dist.max())))
        out.append(Check("metric", "diam(Phi) = pq", _nk(params), cf.diameter_formula(params),
                         diameter(_graph("padovan", params.p, params.q))))
    return out


def check_median(max_pq: int) -> list[Check]:
    out = []
    for params in cf.pq_grid(max_pq):
        g = _graph("partition", params.p, params.q)
        parts = [WeakPartition.parse(v, params.p) for v in g.vertices]
        codes = [hypercube_embedding(x) for x in parts]
        not_unique = wrong = not_majority = 0
        for u, v, w, ms in median_triples(g):
            if len(ms) != 1:
                not_unique += 1
                continue
            med = entrywise_median(parts[u], parts[v], parts[w])
            if str(med) != g.vertices[ms[0]]:
                wrong += 1
            majority = "".join(max(t, key=t.count) for t in zip(codes[u], codes[v], codes[w]))
            if hypercube_embedding(med) != majority:
                not_majority += 1
        out.append(Check("median", "unique median (bad triples)", _pq(params), 0, not_unique))
        out.append(Check("median", "median = entrywise median", _pq(params), 0, wrong))
        out.append(Check("median", "median code = majority", _pq(params), 0, not_majority))
        dist = distance_matrix(g)
        bad = sum(
            1
            for i in range(g.order)
            for j in range(i + 1, g.order)
            if hamming(codes[i], codes[j]) != dist[i, j]
        )
        out.append(Check("median", "embedding is isometric", _pq(params), 0, bad))
    return out


# --- cube polynomial ----------------------------------------------------------------


def check_cubes(max_pq: int) -> list[Check]:
    out = []
    Y, Z = 5 * max_pq + 1, 3 * max_pq
    series = cf.cube_generating_series(max_pq, Y, Z)
    for params in cf.pq_grid(max_pq):
        closed = cf.cube_polynomial_closed(params)
        out.append(Check("cubes", "closed = recurrence", _nk(params), closed, cf.cube_polynomial_recurrence(params)))
        out.append(Check("cubes", "closed = series slice", _nk(params), closed, series.slice_nk(params.n, params.k)))
        out.append(Check("cubes", "closed = brute force", _nk(params), closed, _brute_cubes(params.p, params.q)))
    stray = sum(
        1
        for n in range(Y + 1)
        for k in range(Z + 1)
        if series.slice_nk(n, k) and not FamilyParams.from_nk(n, k, strict=False).valid
    )
    out.append(Check("cubes", "series vanishes off family", f"y<={Y} z<={Z}", 0, stray))
    spots = [
        ("padovan", FamilyParams.from_nk(11, 6), (6, 6, 1)),
        ("padovan", FamilyParams.from_nk(15, 9), (5, 4)),
        ("ab", FamilyParams.from_pq(4, 3), (35, 60, 30, 4)),
    ]
    for family, params, expected in spots:
        out.append(Check("cubes", f"spot value {family}", _nk(params), expected,
                         cube_polynomial_bruteforce(build_graph(family, params))))
    return out


def check_largest_cubes(max_pq: int) -> list[Check]:
    out = []
    for params in cf.pq_grid(max_pq):
        poly = _brute_cubes(params.p, params.q)
        out.append(Check("cubes", "largest cube (dim, count)", _pq(params),
                         cf.largest_cube(params.p, params.q), (len(poly) - 1, poly[-1])))
    return out


# --- automorphisms --------------------------------------------------------------


def expected_group_order(p: int, q: int) -> int:
    if min(p, q) == 0:
        return 1
    if p == q and p >= 2:
        return 4
    return 2


def check_automorphisms(max_pq: int) -> list[Check]:
    out = []
    for params in cf.pq_grid(max_pq):
        p, q = params.p, params.q
        g = _graph("partition", p, q)
        group = automorphism_group(g)
        members = set(group)
        out.append(Check("aut", "|Aut(Pi)|", _pq(params), expected_group_order(p, q), len(group)))
        degrees_kept = all(g.degree(perm[i]) == g.degree(i) for perm in group for i in range(g.order))
        out.append(Check("aut", "automorphisms keep degrees", _pq(params), True, degrees_kept))
        t = permutation_from_map(g, lambda v: str(tau(WeakPartition.parse(v, p))))
        out.append(Check("aut", "tau in Aut", _pq(params), True, t in members))
        if p == q:
            r = permutation_from_map(g, lambda v: str(conjugate(WeakPartition.parse(v, p))))
            identity = tuple(range(g.order))
            generated = {identity, t, r, compose(t, r)}
            if p >= 2:
                out.append(Check("aut", "{id,tau,rho,tau.rho} = Aut", _pq(params), True,
                                 len(generated) == 4 and generated == members))
                klein = all(compose(x, x) == identity for x in group)
                out.append(Check("aut", "Aut is Klein four", _pq(params), True, klein and len(group) == 4))
            else:
                out.append(Check("aut", "rho in Aut", _pq(params), True, r in members))
    return out


# --- known small cases ---------------------------------------------------------------

# Known small graphs, transcribed by hand: vertex labels plus edges as index pairs.
GOLDEN_GRAPHS: dict[tuple[int, int], tuple[list[str], list[tuple[int, int]]]] = {
    (11, 5): (["01010101010"], []),
    (11, 6): (
        ["01101101010", "01101011010", "01101010110", "01011011010", "01011010110", "01010110110"],
        [(0, 1), (1, 2), (2, 4), (4, 5), (1, 3), (3, 4)],
    ),
    (15, 7): (["010101010101010"], []),
    (15, 8): (
        [
            "011011010101010", "011010110101010", "011010101101010", "011010101011010",
            "011010101010110", "010110110101010", "010110101101010", "010110101011010",
            "010110101010110", "010101101101010", "010101101011010", "010101101010110",
            "010101011011010", "010101011010110", "010101010110110",
        ],
        [
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 8), (8, 11), (11, 13), (13, 14),
            (5, 6), (6, 7), (7, 10), (10, 12), (1, 5), (6, 9), (9, 10), (12, 13),
            (2, 6), (10, 11), (3, 7), (7, 8),
        ],
    ),
    (15, 9): (
        ["011011011011010", "011011011010110", "011011010110110", "011010110110110", "010110110110110"],
        [(0, 1), (1, 2), (2, 3), (3, 4)],
    ),
}

SMALL_SHAPES: dict[int, set[str]] = {
    1: {"K1"}, 2: set(), 3: {"K1"}, 4: {"K1"}, 5: {"K1"},
    6: {"K2"}, 7: {"K1"}, 8: {"P3"}, 9: {"K1", "P3"}, 10: {"K1", "P4"},
}


def check_golden() -> list[Check]:
    out = []
    for (n, k), (labels, edges) in GOLDEN_GRAPHS.items():
        g = build_graph("padovan", FamilyParams.from_nk(n, k))
        params = f"n={n} k={k}"
        out.append(Check("golden", "vertex set", params, sorted(labels), sorted(g.vertices)))
        out.append(Check("golden", "|V|/|E|", params, (len(labels), len(edges)), (g.order, g.size)))
        drawn = {frozenset((labels[i], labels[j])) for i, j in edges}
        out.append(Check("golden", "edge set", params, True, drawn == g.label_edges()))
    for n, shapes in SMALL_SHAPES.items():
        kmin, kmax = cf.weight_range(n)
        built = {shape_name(build_graph("padovan", FamilyParams.from_nk(n, k))) for k in range(kmin, kmax + 1)}
        out.append(Check("golden", "small-case shapes", f"n={n}", sorted(shapes), sorted(built)))
    return out


# --- suites ------------------------------------------------------------------------


def suite_table(max_n: int, max_pq: int) -> dict[str, list[Callable[[], list[Check]]]]:
    return {
        "order": [lambda: check_sequence(max_n), lambda: check_order(max_n)],
        "size": [lambda: check_size(max_pq)],
        "degree": [lambda: check_degrees(max_pq)],
        "iso": [
            lambda: check_isomorphisms(max_n),
            lambda: check_decomposition(max_n),
            lambda: check_connected(max_n),
        ],
        "metric": [lambda: check_metric(max_pq)],
        "median": [lambda: check_median(max_pq)],
        "cubes": [lambda: check_cubes(max_pq), lambda: check_largest_cubes(max_pq)],
        "aut": [lambda: check_automorphisms(max_pq)],
        "golden": [check_golden],
    }


SUITES = ("order", "size", "degree", "iso", "metric", "median", "cubes", "aut", "golden")


def run_suite(suite: str, max_n: int = 14, max_pq: int = 4) -> VerificationReport:
    table = suite_table(max_n, max_pq)
    names = SUITES if suite == "all" else (suite,)
    if any(name not in table for name in names):
        raise ValueError(f"unknown suite {suite!r}")
    report = VerificationReport(suite)
    start = time.perf_counter()
    for name in names:
        for job in table[name]:
            report.checks.extend(job())
    report.elapsed = time.perf_counter() - start
    return report

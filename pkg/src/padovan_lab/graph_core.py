"""Labeled graphs and the brute-force oracles run against the closed forms.

Everything here works on :class:`LabeledGraph`, a small immutable
adjacency-list graph whose vertices are strings kept in a canonical order.
None of the routines know anything about Padovan words; they only see
vertices and edges.
"""

from __future__ import annotations

import os
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, combinations_with_replacement
from typing import Callable, Iterable, Iterator, Mapping

import numpy as np

from .closed_forms import CubePolynomial, FamilyParams, trim
from .errors import Disconnected, EmptyGraph, SizeLimit
from .partitions import enumerate_partitions, partition_neighbors
from .words import ab_neighbors, enumerate_ab_words, enumerate_padovan_words, padovan_neighbors

FAMILIES = ("padovan", "ab", "partition")

MEDIAN_MAX_VERTICES = 150
AUTOMORPHISM_MAX_VERTICES = 200
CUBE_MAX_VERTICES = 2000
NAIVE_CUBE_MAX_VERTICES = 12

VertexPermutation = tuple[int, ...]


def size_bound(default: int, explicit: int | None = None) -> int:
    """Resolve a brute-force vertex bound: argument, then environment, then default."""
    if explicit is not None:
        return explicit
    env = os.environ.get("PADOVAN_LAB_MAX_VERTICES")
    if env:
        return int(env)
    return default


@dataclass(frozen=True)
class LabeledGraph:
    vertices: tuple[str, ...]
    adjacency: tuple[tuple[int, ...], ...]
    family: str = "adhoc"
    params: FamilyParams | None = field(default=None, compare=False)

    def __post_init__(self):
        n = len(self.vertices)
        if len(self.adjacency) != n:
            raise ValueError("adjacency must have one row per vertex")
        if len(set(self.vertices)) != n:
            raise ValueError("vertex labels must be unique")
        for i, row in enumerate(self.adjacency):
            for j in row:
                if not 0 <= j < n or j == i:
                    raise ValueError(f"bad neighbour index {j} for vertex {i}")
                if i not in self.adjacency[j]:
                    raise ValueError(f"edge {i}-{j} is not symmetric")

    @classmethod
    def from_edges(
        cls,
        vertices: Iterable[str],
        edges: Iterable[tuple[int, int]],
        family: str = "adhoc",
        params: FamilyParams | None = None,
    ) -> "LabeledGraph":
        vertices = tuple(vertices)
        nbrs: list[set[int]] = [set() for _ in vertices]
        for i, j in edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        return cls(vertices, tuple(tuple(sorted(s)) for s in nbrs), family, params)

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(row) for row in self.adjacency)

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.adjacency) for j in row if i < j]

    def label_edges(self) -> set[frozenset[str]]:
        return {frozenset((self.vertices[i], self.vertices[j])) for i, j in self.edges()}

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.neighbor_sets[i]

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])


def _family_vertices(family: str, params: FamilyParams):
    if family == "padovan":
        return enumerate_padovan_words(params.n, params.k), padovan_neighbors
    if family == "ab":
        return enumerate_ab_words(params.p, params.q), ab_neighbors
    if family == "partition":
        return enumerate_partitions(params.p, params.q), partition_neighbors
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def build_graph(family: str, params: FamilyParams) -> LabeledGraph:
    """Build Phi^n_k, A_{p,q} or Pi_{p,q}; an inadmissible family gives the empty graph."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if not params.valid:
        return LabeledGraph((), (), family, params)
    items, neighbors = _family_vertices(family, params)
    labels = tuple(str(x) for x in items)
    index = {label: i for i, label in enumerate(labels)}
    adjacency = tuple(tuple(sorted(index[str(y)] for y in neighbors(x))) for x in items)
    return LabeledGraph(labels, adjacency, family, params)


def complete_graph(m: int) -> LabeledGraph:
    return LabeledGraph.from_edges([str(i) for i in range(m)], combinations(range(m), 2))


# --- metrics ---------------------------------------------------------------


def bfs_distances(g: LabeledGraph, source: int) -> list[int]:
    """Distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * g.order
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def is_connected(g: LabeledGraph) -> bool:
    return g.order == 0 or min(bfs_distances(g, 0)) >= 0


def distance_matrix(g: LabeledGraph) -> np.ndarray:
    if g.order == 0:
        raise EmptyGraph("distance on a graph without vertices")
    rows = [bfs_distances(g, s) for s in range(g.order)]
    if min(rows[0]) < 0:
        raise Disconnected(f"{g.family} graph with {g.order} vertices is disconnected")
    return np.array(rows, dtype=np.int64)


def distance(g: LabeledGraph, u: str, v: str) -> int:
    if g.order == 0:
        raise EmptyGraph("distance on a graph without vertices")
    d = bfs_distances(g, g.index[u])[g.index[v]]
    if d < 0:
        raise Disconnected(f"{u} and {v} lie in different components")
    return d


def diameter(g: LabeledGraph) -> int:
    return int(distance_matrix(g).max())


def degree_histogram(g: LabeledGraph) -> dict[int, int]:
    return dict(sorted(Counter(len(row) for row in g.adjacency).items()))


# --- medians -----------------------------------------------------------------


def _as_bits(mask_row: np.ndarray) -> int:
    return int.from_bytes(np.packbits(mask_row, bitorder="little").tobytes(), "little")


def interval_bitsets(g: LabeledGraph, dist: np.ndarray | None = None) -> list[list[int]]:
    """``I[u][v]`` has bit m set iff m lies on some shortest u,v-path."""
    if dist is None:
        dist = distance_matrix(g)
    out = []
    for u in range(g.order):
        # on_path[v, m] == d(u,m) + d(m,v) == d(u,v)
        on_path = (dist[u][None, :] + dist) == dist[u][:, None]
        out.append([_as_bits(row) for row in on_path])
    return out


def _bit_indices(bits: int) -> list[int]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


def median_of(g: LabeledGraph, u: str, v: str, w: str) -> str | None:
    """The unique vertex on geodesics between each pair of u, v, w, or None."""
    dist = distance_matrix(g)
    a, b, c = g.index[u], g.index[v], g.index[w]
    common = [
        m
        for m in range(g.order)
        if dist[a, m] + dist[m, b] == dist[a, b]
        and dist[a, m] + dist[m, c] == dist[a, c]
        and dist[b, m] + dist[m, c] == dist[b, c]
    ]
    return g.vertices[common[0]] if len(common) == 1 else None


def median_triples(
    g: LabeledGraph, max_vertices: int | None = None
) -> Iterator[tuple[int, int, int, list[int]]]:
    """Every triple u <= v <= w with the list of its median candidates, lazily.

    The size bound is checked before the generator is returned.
    """
    bound = size_bound(MEDIAN_MAX_VERTICES, max_vertices)
    if g.order > bound:
        raise SizeLimit(f"triple check on {g.order} vertices exceeds bound {bound}")
    intervals = interval_bitsets(g)
    return (
        (u, v, w, _bit_indices(intervals[u][v] & intervals[u][w] & intervals[v][w]))
        for u, v, w in combinations_with_replacement(range(g.order), 3)
    )


def is_median_graph(g: LabeledGraph, max_vertices: int | None = None) -> bool:
    if g.order == 0:
        raise EmptyGraph("median check on a graph without vertices")
    if not is_connected(g):
        return False
    return all(len(ms) == 1 for *_, ms in median_triples(g, max_vertices))


# --- induced hypercubes ---------------------------------------------------


def _masks_by_weight(d: int) -> list[int]:
    return sorted(range(1 << d), key=lambda m: (bin(m).count("1"), m))


def _cubes_at(g: LabeledGraph, v: int, units: tuple[int, ...], order: list[int]) -> Iterator[frozenset[int]]:
    """Induced cubes whose minimum vertex is ``v`` and whose edges at ``v`` go to ``units``."""
    nbrs = g.neighbor_sets
    d = len(units)
    image: dict[int, int] = {0: v}
    for i, u in enumerate(units):
        image[1 << i] = u
    used = {v, *units}
    # units must be pairwise non-adjacent for the cube to be induced
    for a, b in combinations(units, 2):
        if b in nbrs[a]:
            return
    rest = [m for m in order if bin(m).count("1") >= 2]

    def extend(pos: int) -> Iterator[frozenset[int]]:
        if pos == len(rest):
            yield frozenset(image.values())
            return
        mask = rest[pos]
        below = [image[mask ^ (1 << i)] for i in range(d) if mask >> i & 1]
        candidates = nbrs[below[0]].intersection(*(nbrs[x] for x in below[1:]))
        below_set = set(below)
        for c in sorted(candidates):
            if c <= v or c in used:
                continue
            # c must see exactly the cube neighbours placed so far
            if (nbrs[c] & used) != below_set:
                continue
            image[mask] = c
            used.add(c)
            yield from extend(pos + 1)
            used.discard(c)
            del image[mask]

    yield from extend(0)


def cube_polynomial_bruteforce(g: LabeledGraph, max_vertices: int | None = None) -> CubePolynomial:
    """Count induced d-cubes for every d by growing them from their minimum vertex.

    For a cube with minimum vertex v, the cube neighbours of v form a subset
    of the higher-indexed neighbours of v; the remaining corners are filled
    in by increasing Hamming weight, each as a common neighbour of the
    corners directly below it.  Distinct vertex sets are collected so that
    different fillings of the same cube are counted once.
    """
    bound = size_bound(CUBE_MAX_VERTICES, max_vertices)
    if g.order > bound:
        raise SizeLimit(f"cube count on {g.order} vertices exceeds bound {bound}")
    counts = [g.order]
    if g.order == 0:
        return ()
    d = 1
    while True:
        order = _masks_by_weight(d)
        found: set[frozenset[int]] = set()
        for v in range(g.order):
            higher = [u for u in g.adjacency[v] if u > v]
            for units in combinations(higher, d):
                found.update(_cubes_at(g, v, units, order))
        if not found:
            break
        counts.append(len(found))
        d += 1
    return trim(counts)


def _is_hypercube(g: LabeledGraph, subset: tuple[int, ...], d: int) -> bool:
    """Check that ``subset`` induces Q_d by labelling vertices with coordinate sets.

    Fix an origin and its d neighbours as unit vectors; in Q_d a vertex is
    then named by the units it is closer to than to the origin.  The subset
    is a cube iff this naming is a bijection onto all d-bit vectors that
    turns edges into Hamming-distance-1 pairs and vice versa.
    """
    members = set(subset)
    sub = {u: g.neighbor_sets[u] & members for u in subset}
    origin = subset[0]
    units = sorted(sub[origin])
    if len(units) != d:
        return False

    def bfs(s: int) -> dict[int, int]:
        dist = {s: 0}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in sub[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    d0 = bfs(origin)
    if len(d0) != len(subset):
        return False
    du = [bfs(e) for e in units]
    code = {x: sum(1 << i for i, de in enumerate(du) if de[x] < d0[x]) for x in subset}
    if len(set(code.values())) != 1 << d:
        return False
    for x, y in combinations(subset, 2):
        if (y in sub[x]) != (bin(code[x] ^ code[y]).count("1") == 1):
            return False
    return True


def cube_polynomial_naive(g: LabeledGraph, max_vertices: int = NAIVE_CUBE_MAX_VERTICES) -> CubePolynomial:
    """Reference count over all vertex subsets; only for very small graphs."""
    if g.order > max_vertices:
        raise SizeLimit(f"naive cube count on {g.order} vertices exceeds bound {max_vertices}")
    if g.order == 0:
        return ()
    counts = [g.order, g.size]
    d = 2
    while 1 << d <= g.order:
        counts.append(sum(_is_hypercube(g, s, d) for s in combinations(range(g.order), 1 << d)))
        d += 1
    return trim(counts)


# --- automorphisms ---------------------------------------------------------


def refine_colors(g: LabeledGraph) -> list[int]:
    """Iterated degree refinement: split classes by the multiset of neighbour colours."""
    colors = [len(row) for row in g.adjacency]
    while True:
        sigs = [(colors[u], tuple(sorted(colors[v] for v in g.adjacency[u]))) for u in range(g.order)]
        relabel = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [relabel[s] for s in sigs]
        if len(relabel) == len(set(colors)):
            return new
        colors = new


def _search_order(g: LabeledGraph, colors: list[int]) -> list[tuple[int, int]]:
    """Vertices in BFS order, each paired with its BFS parent (-1 for roots)."""
    class_size = Counter(colors)
    seen = [False] * g.order
    out = []
    for root in sorted(range(g.order), key=lambda u: (class_size[colors[u]], u)):
        if seen[root]:
            continue
        seen[root] = True
        out.append((root, -1))
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in sorted(g.adjacency[u], key=lambda x: (class_size[colors[x]], x)):
                if not seen[v]:
                    seen[v] = True
                    out.append((v, u))
                    queue.append(v)
    return out


def automorphism_group(g: LabeledGraph, max_vertices: int | None = None) -> list[VertexPermutation]:
    """Every adjacency-preserving permutation, as image tuples, sorted."""
    bound = size_bound(AUTOMORPHISM_MAX_VERTICES, max_vertices)
    if g.order == 0:
        raise EmptyGraph("automorphisms of a graph without vertices")
    if g.order > bound:
        raise SizeLimit(f"automorphism search on {g.order} vertices exceeds bound {bound}")
    nbrs = g.neighbor_sets
    colors = refine_colors(g)
    by_color: dict[int, list[int]] = {}
    for u, c in enumerate(colors):
        by_color.setdefault(c, []).append(u)
    order = _search_order(g, colors)
    image = [-1] * g.order
    placed: list[int] = []
    used: set[int] = set()
    found: list[VertexPermutation] = []

    def consistent(u: int, c: int) -> bool:
        # same number of placed neighbours, and every placed neighbour maps next to c
        placed_nbrs = [w for w in nbrs[u] if image[w] >= 0]
        if sum(1 for x in nbrs[c] if x in used) != len(placed_nbrs):
            return False
        return all(image[w] in nbrs[c] for w in placed_nbrs)

    def extend(pos: int) -> None:
        if pos == len(order):
            found.append(tuple(image))
            return
        u, parent = order[pos]
        pool = nbrs[image[parent]] if parent >= 0 else by_color[colors[u]]
        for c in sorted(pool):
            if c in used or colors[c] != colors[u] or not consistent(u, c):
                continue
            image[u] = c
            used.add(c)
            extend(pos + 1)
            used.discard(c)
            image[u] = -1

    extend(0)
    group = sorted(found)
    _check_closure(group)
    return group


def compose(a: VertexPermutation, b: VertexPermutation) -> VertexPermutation:
    """``a`` after ``b``."""
    return tuple(a[b[i]] for i in range(len(b)))


def _check_closure(group: list[VertexPermutation]) -> None:
    members = set(group)
    identity = tuple(range(len(group[0]))) if group else ()
    if identity not in members:
        raise RuntimeError("automorphism search lost the identity")
    for a in group:
        for b in group:
            if compose(a, b) not in members:
                raise RuntimeError("automorphism search returned a set that is not a group")


def permutation_from_map(g: LabeledGraph, fn: Callable[[str], str]) -> VertexPermutation:
    return tuple(g.index[fn(v)] for v in g.vertices)


def is_automorphism(g: LabeledGraph, perm: VertexPermutation) -> bool:
    if sorted(perm) != list(range(g.order)):
        return False
    return all(g.has_edge(perm[i], perm[j]) for i, j in g.edges())


# --- isomorphism maps --------------------------------------------------------


def check_isomorphism(
    g1: LabeledGraph, g2: LabeledGraph, mapping: Callable[[str], str] | Mapping[str, str]
) -> bool:
    """True iff ``mapping`` is a bijection V(g1) -> V(g2) preserving edges and non-edges."""
    if g1.order != g2.order or g1.size != g2.size:
        return False
    fn = mapping.__getitem__ if isinstance(mapping, Mapping) else mapping
    try:
        images = [fn(v) for v in g1.vertices]
    except (KeyError, ValueError):
        return False
    images = [str(x) for x in images]
    if any(x not in g2.index for x in images) or len(set(images)) != g1.order:
        return False
    perm = [g2.index[x] for x in images]
    # equal edge counts plus edges-to-edges gives non-edges-to-non-edges
    return all(g2.has_edge(perm[i], perm[j]) for i, j in g1.edges())


# --- small shapes --------------------------------------------------------------


def shape_name(g: LabeledGraph) -> str:
    """Name small graphs the way tables of small cases do: K1, K2, P3, P4, ..."""
    if g.order == 0:
        return "empty"
    if g.order == 1:
        return "K1"
    if g.order == 2 and g.size == 1:
        return "K2"
    degs = sorted(g.degree(i) for i in range(g.order))
    if is_connected(g) and g.size == g.order - 1 and degs[-1] <= 2:
        return f"P{g.order}"
    return f"G(|V|={g.order},|E|={g.size})"

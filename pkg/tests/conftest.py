"""Brute-force oracles shared by the tests.

These deliberately avoid the package's own enumerators and neighbour rules:
words come from filtering every string of the right length, adjacency from
trying every swap or increment literally.
"""

import re
from collections import deque
from itertools import product

import pytest

PADOVAN_RE = re.compile(r"^0(?:1{1,2}0)*$")


def brute_padovan_words(n, k=None):
    out = []
    for bits in product("01", repeat=n):
        s = "".join(bits)
        if PADOVAN_RE.match(s) and (k is None or s.count("1") == k):
            out.append(s)
    return out


def brute_padovan_adjacent(u, v):
    """One 01 replaced by 10 (either direction) turns u into v."""
    if len(u) != len(v):
        return False
    diff = [i for i in range(len(u)) if u[i] != v[i]]
    return len(diff) == 2 and diff[1] == diff[0] + 1 and {u[diff[0]:diff[1] + 1], v[diff[0]:diff[1] + 1]} == {"01", "10"}


def brute_ab_words(p, q):
    return sorted({"".join(t) for t in product("ab", repeat=p + q) if t.count("a") == p})


def brute_bfs(vertices, adjacent):
    """All-pairs distances from an adjacency predicate, no shared code with the package."""
    nbrs = {v: [w for w in vertices if w != v and adjacent(v, w)] for v in vertices}
    dist = {}
    for s in vertices:
        seen = {s: 0}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in nbrs[x]:
                if y not in seen:
                    seen[y] = seen[x] + 1
                    queue.append(y)
        dist[s] = seen
    return dist


@pytest.fixture
def padovan_oracle():
    return brute_padovan_words

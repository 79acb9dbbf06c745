"""Weak partitions as vertices of Pi_{p,q}."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .errors import ContextMismatch, NotSquare

Leaf = Literal["zero", "full"]


@dataclass(frozen=True, order=True)
class WeakPartition:
    """``q`` non-increasing parts, each between 0 and ``p``.

    Zero parts count; ``q`` is the length of ``parts``.
    """

    parts: tuple[int, ...]
    p: int

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if self.p < 0:
            raise ValueError(f"p must be nonnegative, got {self.p}")
        if any(x < 0 or x > self.p for x in parts):
            raise ValueError(f"parts of {parts} must lie in [0, {self.p}]")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts of {parts} must be non-increasing")

    @property
    def q(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"

    @classmethod
    def parse(cls, label: str, p: int) -> "WeakPartition":
        body = label.strip().strip("()")
        parts = tuple(int(x) for x in body.split(",")) if body else ()
        return cls(parts, p)

    @classmethod
    def zero(cls, p: int, q: int) -> "WeakPartition":
        return cls((0,) * q, p)

    @classmethod
    def full(cls, p: int, q: int) -> "WeakPartition":
        return cls((p,) * q, p)


def enumerate_partitions(p: int, q: int) -> list[WeakPartition]:
    """Vertices of Pi_{p,q} in lexicographic order of their parts."""
    out: list[WeakPartition] = []

    def extend(prefix: tuple[int, ...], cap: int) -> None:
        if len(prefix) == q:
            out.append(WeakPartition(prefix, p))
            return
        for x in range(cap + 1):
            extend(prefix + (x,), x)

    extend((), p)
    return out


def _resorted(parts: list[int], p: int) -> WeakPartition:
    return WeakPartition(tuple(sorted(parts, reverse=True)), p)


def partition_neighbors(lam: WeakPartition) -> list[WeakPartition]:
    """Partitions differing from ``lam`` by one unit in one part.

    Incrementing a part that equals its left neighbour is read as the same
    multiset re-sorted, so (1,1) has the single upper neighbour (2,1).
    The result lists upper neighbours first, then lower ones, each in
    decreasing lexicographic order.
    """
    up, down = set(), set()
    parts = list(lam.parts)
    for i, x in enumerate(parts):
        if x < lam.p:
            bumped = parts.copy()
            bumped[i] += 1
            up.add(_resorted(bumped, lam.p))
        if x > 0:
            bumped = parts.copy()
            bumped[i] -= 1
            down.add(_resorted(bumped, lam.p))
    return sorted(up, reverse=True) + sorted(down, reverse=True)


def _check_context(lam: WeakPartition, mu: WeakPartition) -> None:
    if lam.p != mu.p or lam.q != mu.q:
        raise ContextMismatch(
            f"{lam} lives in Pi_{{{lam.p},{lam.q}}} but {mu} in Pi_{{{mu.p},{mu.q}}}"
        )


def partition_distance(lam: WeakPartition, mu: WeakPartition) -> int:
    _check_context(lam, mu)
    return sum(abs(a - b) for a, b in zip(lam, mu))


def entrywise_median(lam: WeakPartition, mu: WeakPartition, nu: WeakPartition) -> WeakPartition:
    _check_context(lam, mu)
    _check_context(lam, nu)
    return WeakPartition(tuple(sorted(t)[1] for t in zip(lam, mu, nu)), lam.p)


def hypercube_embedding(lam: WeakPartition) -> str:
    """Concatenate one block ``0^(p - part) 1^part`` per part; length p*q."""
    return "".join("0" * (lam.p - x) + "1" * x for x in lam)


def hamming(u: str, v: str) -> int:
    if len(u) != len(v):
        raise ValueError("words of different length")
    return sum(a != b for a, b in zip(u, v))


def tau(lam: WeakPartition) -> WeakPartition:
    """Complement every part in ``p`` and reverse."""
    return WeakPartition(tuple(lam.p - x for x in reversed(lam.parts)), lam.p)


def conjugate(lam: WeakPartition) -> WeakPartition:
    """Transpose the Ferrers diagram; only defined on Pi_{p,p}."""
    if lam.p != lam.q:
        raise NotSquare(f"conjugation needs p == q, got p={lam.p}, q={lam.q}")
    return WeakPartition(tuple(sum(1 for x in lam if x >= i) for i in range(1, lam.p + 1)), lam.p)


def leaf_of(lam: WeakPartition, leaf: Leaf) -> WeakPartition:
    if leaf == "zero":
        return WeakPartition.zero(lam.p, lam.q)
    if leaf == "full":
        return WeakPartition.full(lam.p, lam.q)
    raise ValueError(f"leaf must be 'zero' or 'full', got {leaf!r}")


def layer(lam: WeakPartition, leaf: Leaf = "zero") -> int:
    return partition_distance(lam, leaf_of(lam, leaf))


def is_lonely(lam: WeakPartition, leaf: Leaf = "zero") -> bool:
    """True iff exactly one neighbour of ``lam`` is strictly closer to ``leaf``."""
    target = leaf_of(lam, leaf)
    d = partition_distance(lam, target)
    closer = [mu for mu in partition_neighbors(lam) if partition_distance(mu, target) == d - 1]
    return len(closer) == 1

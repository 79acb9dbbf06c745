"""Explicit isomorphisms Phi^n_k -> A_{p,q} -> Pi_{p,q} and the fundamental decomposition."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseFailure, TooShort
from .partitions import WeakPartition
from .words import is_padovan_word


def alpha(w: str) -> str:
    """Read a Padovan word as blocks 011 -> b and 01 -> a, dropping the final 0.

    At each position 011 is tried before 01: taking 01 first would split
    0110 into 01 + 10, and the dangling 10 can never be parsed.
    """
    out = []
    i, n = 0, len(w)
    while i < n - 1:
        if w.startswith("011", i):
            out.append("b")
            i += 3
        elif w.startswith("01", i):
            out.append("a")
            i += 2
        else:
            raise ParseFailure(f"cannot parse {w!r} at position {i}")
    if i != n - 1 or w[-1] != "0":
        raise ParseFailure(f"{w!r} does not end with a lone 0")
    return "".join(out)


def alpha_inverse(w: str) -> str:
    if set(w) - {"a", "b"}:
        raise ParseFailure(f"not an ab-word: {w!r}")
    return "".join("011" if c == "b" else "01" for c in w) + "0"


def beta(w: str) -> WeakPartition:
    """Send the b at 1-based position i_m to the part (p + m) - i_m."""
    p = w.count("a")
    positions = [i for i, c in enumerate(w, start=1) if c == "b"]
    return WeakPartition(tuple(p + m - i for m, i in enumerate(positions, start=1)), p)


def beta_inverse(lam: WeakPartition) -> str:
    p, q = lam.p, lam.q
    letters = ["a"] * (p + q)
    for m, part in enumerate(lam.parts, start=1):
        letters[p + m - part - 1] = "b"
    return "".join(letters)


@dataclass(frozen=True)
class Branch:
    """Where a Padovan word sits in the fundamental decomposition.

    Exactly one of ``branch01`` / ``branch011`` is set: the word with its
    leading 01 or 011 removed.  ``partner`` is the neighbour across the two
    halves, present only for words starting 010110 or 011010.
    """

    word: str
    branch01: str | None
    branch011: str | None
    partner: str | None


def fundamental_branch(w: str) -> Branch:
    if len(w) < 3 or not is_padovan_word(w):
        raise TooShort(f"{w!r} is too short or not a Padovan word")
    partner = None
    if w.startswith("010110"):
        partner = "011010" + w[6:]
    elif w.startswith("011010"):
        partner = "010110" + w[6:]
    if w.startswith("010"):
        return Branch(w, w[2:], None, partner)
    return Branch(w, None, w[3:], partner)

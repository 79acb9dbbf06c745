"""Padovan words, {a,b}-words and the c-word encoding of edges.

Words are plain strings: Padovan words over ``"01"``, vertices of A_{p,q}
over ``"ab"``.  Every enumerator returns its words in lexicographic order,
which is the canonical vertex order used by the graph builders.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import NotAdjacent


def is_padovan_word(bits: str) -> bool:
    if not bits or set(bits) - {"0", "1"}:
        return False
    return bits[0] == "0" and bits[-1] == "0" and "00" not in bits and "111" not in bits


@lru_cache(maxsize=None)
def _completions(remaining: int, last: str, ones_run: int, need: int) -> bool:
    """Whether ``remaining`` more bits can finish a valid word with ``need`` more 1s."""
    if need < 0:
        return False
    if remaining == 0:
        return need == 0 and last == "0"
    for bit in "01":
        if bit == "0" and last == "0":
            continue
        if bit == "1" and ones_run == 2:
            continue
        run = ones_run + 1 if bit == "1" else 0
        if _completions(remaining - 1, bit, run, need - (bit == "1")):
            return True
    return False


def enumerate_padovan_words(n: int, k: int | None = None) -> list[str]:
    """All Padovan words of length ``n`` (with exactly ``k`` 1s if given), sorted.

    Backtracks over the automaton whose state is the last bit and the length
    of the trailing run of 1s; with ``k`` fixed, branches that cannot reach
    weight ``k`` are cut immediately.
    """
    if n < 1:
        return []
    if k is None:
        out = []
        for weight in range(n // 2, (2 * n - 2) // 3 + 1):
            out.extend(enumerate_padovan_words(n, weight))
        return sorted(out)

    out: list[str] = []
    buf = ["0"]

    def extend(last: str, ones_run: int, ones: int) -> None:
        remaining = n - len(buf)
        if remaining == 0:
            if ones == k and last == "0":
                out.append("".join(buf))
            return
        for bit in "01":
            if bit == "0" and last == "0":
                continue
            if bit == "1" and ones_run == 2:
                continue
            run = ones_run + 1 if bit == "1" else 0
            got = ones + (bit == "1")
            if not _completions(remaining - 1, bit, run, k - got):
                continue
            buf.append(bit)
            extend(bit, run, got)
            buf.pop()

    if _completions(n - 1, "0", 0, k):
        extend("0", 0, 0)
    return out


def padovan_neighbors(w: str) -> list[str]:
    """Words obtained from ``w`` by one 01 <-> 10 swap that stay Padovan.

    Inside a Padovan word such a swap can only turn a window 010110 into
    011010 or back, so only those windows are scanned.  Each candidate is
    re-validated anyway.
    """
    out = []
    for i in range(len(w) - 5):
        window = w[i : i + 6]
        if window == "010110":
            cand = w[:i] + "011010" + w[i + 6 :]
        elif window == "011010":
            cand = w[:i] + "010110" + w[i + 6 :]
        else:
            continue
        if is_padovan_word(cand):
            out.append(cand)
    return out


def is_ab_word(w: str, p: int | None = None, q: int | None = None) -> bool:
    if set(w) - {"a", "b"}:
        return False
    if p is not None and w.count("a") != p:
        return False
    if q is not None and w.count("b") != q:
        return False
    return True


def enumerate_ab_words(p: int, q: int) -> list[str]:
    """All words with ``p`` letters a and ``q`` letters b, lexicographic (a < b)."""
    if p < 0 or q < 0:
        return []
    out: list[str] = []

    def extend(prefix: str, a: int, b: int) -> None:
        if a == 0 and b == 0:
            out.append(prefix)
            return
        if a:
            extend(prefix + "a", a - 1, b)
        if b:
            extend(prefix + "b", a, b - 1)

    extend("", p, q)
    return out


def ab_neighbors(w: str) -> list[str]:
    out = []
    for i in range(len(w) - 1):
        if w[i] != w[i + 1]:
            out.append(w[:i] + w[i + 1] + w[i] + w[i + 2 :])
    return out


def edge_to_c_word(u: str, v: str) -> str:
    """Encode the edge ``x ab y ~ x ba y`` as ``x c y``."""
    diff = [i for i, (s, t) in enumerate(zip(u, v)) if s != t]
    if (
        len(u) != len(v)
        or len(diff) != 2
        or diff[1] != diff[0] + 1
        or {u[diff[0] : diff[0] + 2], v[diff[0] : diff[0] + 2]} != {"ab", "ba"}
    ):
        raise NotAdjacent(f"{u!r} and {v!r} do not differ by one ab/ba transposition")
    i = diff[0]
    return u[:i] + "c" + u[i + 2 :]


def c_word_to_edge(w: str) -> tuple[str, str]:
    """Inverse of :func:`edge_to_c_word`; the ab-endpoint comes first."""
    if w.count("c") != 1 or set(w) - {"a", "b", "c"}:
        raise ValueError(f"not a c-word: {w!r}")
    i = w.index("c")
    return w[:i] + "ab" + w[i + 1 :], w[:i] + "ba" + w[i + 1 :]


def enumerate_c_words(p: int, q: int) -> list[str]:
    """Words with p-1 letters a, q-1 letters b and one c, sorted."""
    if p < 1 or q < 1:
        return []
    words = set()
    for base in enumerate_ab_words(p - 1, q - 1):
        for i in range(len(base) + 1):
            words.add(base[:i] + "c" + base[i:])
    return sorted(words)

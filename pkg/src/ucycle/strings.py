"""Primitives for strings over the integer alphabet {1..k}.

Strings are plain tuples of ints. Symbols start at 1, so the weight of a
length-n string is always between n and k*n.
"""

from __future__ import annotations

Symbols = tuple[int, ...]


def validate_symbols(s: Symbols, k: int) -> None:
    """Raise ValueError unless s is a non-empty string over {1..k}."""
    if k < 1:
        raise ValueError(f"alphabet size must be at least 1, got {k}")
    if len(s) == 0:
        raise ValueError("string must be non-empty")
    for x in s:
        if not 1 <= x <= k:
            raise ValueError(f"symbol {x} outside alphabet 1..{k}")


def weight(s: Symbols) -> int:
    """Sum of the symbols."""
    return sum(s)


def complement(s: Symbols, k: int) -> Symbols:
    """Map every symbol x to k-x+1 (an involution)."""
    return tuple(k - x + 1 for x in s)


def is_necklace(s: Symbols) -> bool:
    """True iff s is lexicographically <= every rotation of itself.

    Direct O(n^2) comparison against all n rotations.
    """
    n = len(s)
    for shift in range(1, n):
        for i in range(n):
            a = s[i]
            b = s[(i + shift) % n]
            if a < b:
                break
            if a > b:
                return False
        # rotation equal to s is fine
    return True


def aperiodic_prefix(s: Symbols) -> Symbols:
    """Shortest t with s = t^j; |t| always divides |s|."""
    n = len(s)
    for p in range(1, n + 1):
        if n % p == 0 and s[:p] * (n // p) == s:
            return s[:p]
    raise AssertionError("unreachable: s is its own period")


def pq_split(s: Symbols) -> tuple[Symbols, Symbols]:
    """Split s = p.q where q is the longest suffix such that q.p is a necklace.

    Every string has at least one rotation that is a necklace, so q is
    never empty. Tries suffixes longest-first.
    """
    n = len(s)
    for i in range(n):  # i = |p|
        if is_necklace(s[i:] + s[:i]):
            return s[:i], s[i:]
    raise ValueError("no rotation of the input is a necklace")


def border_array(s: Symbols) -> list[int]:
    """b[i] = length of the longest proper border of s[:i], for i in 0..len(s)."""
    n = len(s)
    b = [0] * (n + 1)
    for i in range(1, n):
        j = b[i]
        while j and s[i] != s[j]:
            j = b[j]
        b[i + 1] = j + 1 if s[i] == s[j] else 0
    return b

"""Difference-representation codecs for t-subsets of {1..n} and t-multisets
of {0..n-1}, and their cycle decoders.

A sorted subset maps to its first element followed by consecutive gaps,
landing in the strings of length t over {1..n-t+1} with weight <= n. A
sorted multiset maps the same way and then shifts every symbol up by one,
landing in the strings over {1..n} with weight <= n+t-1. Both cycles are
decoded through the weight-bounded machinery.
"""

from __future__ import annotations

from typing import Iterable

from .decode import rank_down, unrank_down
from .strings import Symbols, validate_symbols, weight


def subset_to_diff(elements: Iterable[int], n: int, t: int) -> Symbols:
    """Difference representative of a t-subset of {1..n}.

    Input order does not matter; duplicates are rejected.
    """
    elems = sorted(elements)
    if not 1 <= t <= n:
        raise ValueError(f"need 1 <= t <= n, got t={t} n={n}")
    if len(elems) != t:
        raise ValueError(f"expected {t} elements, got {len(elems)}")
    if len(set(elems)) != t:
        raise ValueError("subset elements must be distinct")
    if elems[0] < 1 or elems[-1] > n:
        raise ValueError(f"elements must lie in 1..{n}")
    return (elems[0],) + tuple(elems[i] - elems[i - 1] for i in range(1, t))


def diff_to_subset(d: Symbols, n: int, t: int) -> tuple[int, ...]:
    """Inverse of subset_to_diff: prefix sums of the gap string."""
    d = tuple(d)
    if not 1 <= t <= n:
        raise ValueError(f"need 1 <= t <= n, got t={t} n={n}")
    if len(d) != t:
        raise ValueError(f"expected a string of length {t}, got {len(d)}")
    validate_symbols(d, n - t + 1)
    if weight(d) > n:
        raise ValueError(f"gap string weight {weight(d)} exceeds n={n}")
    out = []
    acc = 0
    for x in d:
        acc += x
        out.append(acc)
    return tuple(out)


def multiset_to_diff(elements: Iterable[int], n: int, t: int) -> Symbols:
    """Shifted difference representative of a t-multiset of {0..n-1}."""
    elems = sorted(elements)
    if n < 1 or t < 1:
        raise ValueError(f"need n >= 1 and t >= 1, got n={n} t={t}")
    if len(elems) != t:
        raise ValueError(f"expected {t} elements, got {len(elems)}")
    if elems[0] < 0 or elems[-1] > n - 1:
        raise ValueError(f"elements must lie in 0..{n - 1}")
    gaps = (elems[0],) + tuple(elems[i] - elems[i - 1] for i in range(1, t))
    return tuple(g + 1 for g in gaps)


def diff_to_multiset(d: Symbols, n: int, t: int) -> tuple[int, ...]:
    """Inverse of multiset_to_diff."""
    d = tuple(d)
    if n < 1 or t < 1:
        raise ValueError(f"need n >= 1 and t >= 1, got n={n} t={t}")
    if len(d) != t:
        raise ValueError(f"expected a string of length {t}, got {len(d)}")
    validate_symbols(d, n)
    if weight(d) > n + t - 1:
        raise ValueError(f"string weight {weight(d)} exceeds n+t-1={n + t - 1}")
    out = []
    acc = 0
    for x in d:
        acc += x - 1
        out.append(acc)
    return tuple(out)


def subset_rank(elements: Iterable[int], n: int, t: int) -> int:
    """Rank of a subset's window in the universal cycle for t-subsets of {1..n}."""
    d = subset_to_diff(elements, n, t)
    return rank_down(d, t, n - t + 1, n)


def subset_unrank(r: int, n: int, t: int) -> tuple[int, ...]:
    """Subset whose difference representative starts at position r."""
    if not 1 <= t <= n:
        raise ValueError(f"need 1 <= t <= n, got t={t} n={n}")
    d = unrank_down(r, t, n - t + 1, n)
    return diff_to_subset(d, n, t)


def multiset_rank(elements: Iterable[int], n: int, t: int) -> int:
    """Rank of a multiset's window in the universal cycle for t-multisets of {0..n-1}."""
    d = multiset_to_diff(elements, n, t)
    return rank_down(d, t, n, n + t - 1)


def multiset_unrank(r: int, n: int, t: int) -> tuple[int, ...]:
    """Multiset whose shifted difference representative starts at position r."""
    if n < 1 or t < 1:
        raise ValueError(f"need n >= 1 and t >= 1, got n={n} t={t}")
    d = unrank_down(r, t, n, n + t - 1)
    return diff_to_multiset(d, n, t)

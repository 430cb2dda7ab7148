"""Ranking and unranking of the weight-bounded cycles.

Ranks are 1-based positions of length-n windows in the cyclic sequence.
The ``*_up`` functions decode the cycle over strings of weight >= w; the
``*_down`` functions decode the weight <= w cycle through the symbol-wise
complement.
"""

from __future__ import annotations

from .counting import decode_context, s_up
from .necklaces import first_necklace, next_necklace, smallest_necklace_with_prefix
from .strings import (
    Symbols,
    aperiodic_prefix,
    complement,
    is_necklace,
    pq_split,
    validate_symbols,
    weight,
)


def clamp_wmin(n: int, k: int, w: int) -> int:
    """Effective lower weight bound: anything below n is unconstrained."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    if w > k * n:
        raise ValueError(f"weight bound {w} exceeds the maximum weight {k * n}")
    return max(w, n)


def clamp_wmax(n: int, k: int, w: int) -> int:
    """Effective upper weight bound: anything above k*n is unconstrained."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    if w < n:
        raise ValueError(f"weight bound {w} is below the minimum weight {n}")
    return min(w, k * n)


def cycle_length_up(n: int, k: int, wmin: int = 0) -> int:
    """Length of the weight->=wmin cycle, i.e. the number of such strings."""
    return s_up(n, clamp_wmin(n, k, wmin), k)


def cycle_length_down(n: int, k: int, wmax: int) -> int:
    """Length of the weight-<=wmax cycle."""
    w = clamp_wmax(n, k, wmax)
    return s_up(n, k * n - w + n, k)


def _check_string(s: Symbols, n: int, k: int) -> Symbols:
    s = tuple(s)
    validate_symbols(s, k)
    if len(s) != n:
        raise ValueError(f"expected a string of length {n}, got {len(s)}")
    return s


def rank_up(s: Symbols, n: int, k: int, w: int = 0) -> int:
    """Position of s in the cycle over strings with weight >= w."""
    w = clamp_wmin(n, k, w)
    s = _check_string(s, n, k)
    if weight(s) < w:
        raise ValueError(f"string weight {weight(s)} is below the bound {w}")
    if w == k * n:
        return 1  # the cycle degenerates to the single symbol k
    total = s_up(n, w, k)
    alpha1 = first_necklace(n, k, w)
    # the last n windows straddle the k^n tail and the first necklace
    for j in range(n):
        if s == (k,) * (n - j) + alpha1[:j]:
            return total - (n - j) + 1
    p, q = pq_split(s)
    beta2 = _anchor_necklace(p, q, n, k)
    return decode_context(beta2, k).t_count(w) - len(p) + 1


def _anchor_necklace(p: Symbols, q: Symbols, n: int, k: int) -> Symbols:
    """The necklace whose block the q-part of the window reaches into.

    For s = p.q the string q.p is s's necklace. The window sits at a block
    junction: some block ends with p and the next blocks spell q, so the
    anchor is the cyclic successor of q.p among the necklaces with prefix q
    (those form a contiguous run of the necklace order). With p empty, s is
    a necklace and anchors its own block.
    """
    nu = q + p
    if not p:
        return nu
    succ = next_necklace(nu, k)
    if succ is not None and succ[: len(q)] == q:
        return succ
    return smallest_necklace_with_prefix(q, n, k)


def _necklace_rank(nu: Symbols, n: int, k: int, w: int, total: int) -> int:
    # rank_up restricted to necklaces: only k^n sits in the wraparound
    if nu == (k,) * n:
        return total - n + 1
    return decode_context(nu, k).t_count(w) + 1


def _smallest_neck(r: int, n: int, k: int, w: int, total: int) -> Symbols:
    # binary-search each symbol; candidate keeps a maximal tail of k's
    t: list[int] = []
    for i in range(1, n + 1):
        lo, hi = 1, k
        ti = k
        tail = (k,) * (n - i)
        while lo < hi:
            prev = ti
            v = (lo + hi) // 2
            cand = tuple(t) + (v,) + tail
            if (
                is_necklace(cand)
                and weight(cand) >= w
                and _necklace_rank(cand, n, k, w, total) >= r
            ):
                ti = v
                hi = v
            else:
                ti = prev
                lo = v + 1
        t.append(ti)
    return tuple(t)


def smallest_neck(r: int, n: int, k: int, w: int = 0) -> Symbols:
    """Smallest necklace of the weight->=w order whose rank is >= r."""
    w = clamp_wmin(n, k, w)
    total = s_up(n, w, k)
    if not 1 <= r <= total - n + 1:
        raise ValueError(f"rank {r} outside [1, {total - n + 1}]")
    return _smallest_neck(r, n, k, w, total)


def unrank_up(r: int, n: int, k: int, w: int = 0) -> Symbols:
    """The length-n window starting at position r of the weight->=w cycle."""
    w = clamp_wmin(n, k, w)
    total = s_up(n, w, k)
    if not 1 <= r <= total:
        raise ValueError(f"rank {r} outside [1, {total}]")
    if w == k * n:
        return (k,) * n
    if r > total - n + 1:
        # wraparound: k's from the tail, then the head of the first necklace
        j = r - (total - n + 1)
        return (k,) * (n - j) + first_necklace(n, k, w)[:j]
    g1 = _smallest_neck(r, n, k, w, total)
    r1 = _necklace_rank(g1, n, k, w, total)
    if r1 == r:
        return g1
    g2 = _smallest_neck(max(r1 - n, 1), n, k, w, total)
    d = r1 - r
    assert 0 < d < n
    # consecutive necklaces: at most one may be periodic
    assert aperiodic_prefix(g1) == g1 or aperiodic_prefix(g2) == g2
    return g2[n - d :] + g1[: n - d]


def rank_down(s: Symbols, n: int, k: int, w: int) -> int:
    """Position of s in the cycle over strings with weight <= w."""
    w = clamp_wmax(n, k, w)
    s = _check_string(s, n, k)
    if weight(s) > w:
        raise ValueError(f"string weight {weight(s)} is above the bound {w}")
    return rank_up(complement(s, k), n, k, k * n - w + n)


def unrank_down(r: int, n: int, k: int, w: int) -> Symbols:
    """The window at position r of the weight-<=w cycle."""
    w = clamp_wmax(n, k, w)
    return complement(unrank_up(r, n, k, k * n - w + n), k)

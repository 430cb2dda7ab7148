"""Navigation of the lexicographic necklace order and its weight-filtered
subsequence: first element, successors, and smallest completion of a prefix.
"""

from __future__ import annotations

from .strings import Symbols, border_array, is_necklace, validate_symbols, weight


def first_necklace(n: int, k: int, w: int = 0) -> Symbols:
    """Smallest necklace of length n over {1..k} with weight at least w.

    w below n acts as "unconstrained"; w above k*n is rejected (no string
    is that heavy).
    """
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    if w > k * n:
        raise ValueError(f"weight bound {w} exceeds the maximum weight {k * n}")
    w = max(w, n)
    if w == k * n:
        return (k,) * n
    # closed form: fill a maximal tail of k's, one adjusting symbol, ones in front
    j = (w - n) // (k - 1)
    x = w - (n - j - 1) - k * j
    return (1,) * (n - j - 1) + (x,) + (k,) * j


def increment_last_nonmax(alpha: Symbols, k: int) -> Symbols:
    """Bump the last non-k symbol of a necklace; the result is again a necklace
    and one unit heavier.
    """
    for j in range(len(alpha) - 1, -1, -1):
        if alpha[j] != k:
            return alpha[:j] + (alpha[j] + 1,) + (k,) * (len(alpha) - j - 1)
    raise ValueError("every symbol is already maximal")


def weighted_successor_geq(alpha: Symbols, k: int, w: int) -> Symbols:
    """Smallest necklace with weight >= w that is >= alpha.

    Repeatedly applies increment_last_nonmax, which raises the weight by one
    per step while staying inside the necklace order.
    """
    if w > k * len(alpha):
        raise ValueError(f"weight bound {w} exceeds the maximum weight {k * len(alpha)}")
    while weight(alpha) < w:
        alpha = increment_last_nonmax(alpha, k)
    return alpha


def _successor_state(t: Symbols, k: int) -> Symbols | None:
    """One step of the necklace-successor scan: bump the last sub-k symbol and
    repeat the resulting prefix periodically to full length.
    """
    n = len(t)
    j = n - 1
    while j >= 0 and t[j] == k:
        j -= 1
    if j < 0:
        return None
    head = t[:j] + (t[j] + 1,)
    m = j + 1
    return tuple(head[i % m] for i in range(n))


def next_necklace(alpha: Symbols, k: int) -> Symbols | None:
    """Successor of alpha among all length-n necklaces, or None past k^n."""
    t = _successor_state(alpha, k)
    while t is not None and not is_necklace(t):
        t = _successor_state(t, k)
    return t


def smallest_necklace_with_prefix(q: Symbols, n: int, k: int) -> Symbols:
    """Lexicographically smallest length-n necklace having q as a prefix.

    Extends q periodically by its shortest period (the minimal string with
    prefix q that can still start a necklace), then advances with the
    successor scan until a necklace appears. Raises ValueError when no
    length-n necklace has prefix q.
    """
    q = tuple(q)
    validate_symbols(q, k)
    if len(q) > n:
        raise ValueError(f"prefix longer than n={n}")
    p = len(q) - border_array(q)[len(q)]
    ext = list(q)
    for i in range(len(q), n):
        ext.append(ext[i - p])
    t: Symbols | None = tuple(ext)
    while t is not None and not is_necklace(t):
        t = _successor_state(t, k)
    if t is None or t[: len(q)] != q:
        raise ValueError(f"no necklace of length {n} has prefix {q}")
    return t

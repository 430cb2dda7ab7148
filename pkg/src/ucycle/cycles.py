"""Construction of the cycles by necklace concatenation, plus the linear-scan
rank oracle used for cross-checking the algebraic decoder.
"""

from __future__ import annotations

from typing import Iterator

from .counting import s_up
from .decode import clamp_wmax, clamp_wmin
from .necklaces import first_necklace, next_necklace, weighted_successor_geq
from .strings import Symbols, aperiodic_prefix, validate_symbols


def iter_necklaces(n: int, k: int, wmin: int = 0) -> Iterator[Symbols]:
    """Necklaces with weight >= wmin in lexicographic order."""
    w = clamp_wmin(n, k, wmin)
    alpha = first_necklace(n, k, w)
    last = (k,) * n
    while True:
        yield alpha
        if alpha == last:
            return
        nxt = next_necklace(alpha, k)
        alpha = weighted_successor_geq(nxt, k, w)


def list_necklaces(n: int, k: int, wmin: int = 0) -> list[Symbols]:
    return list(iter_necklaces(n, k, wmin))


def generate_up(n: int, k: int, wmin: int = 0) -> Iterator[int]:
    """Stream the cycle over weight->=wmin strings: concatenated aperiodic
    prefixes of the filtered necklaces, in order."""
    for alpha in iter_necklaces(n, k, wmin):
        yield from aperiodic_prefix(alpha)


def generate_down(n: int, k: int, wmax: int) -> Iterator[int]:
    """Stream the cycle over weight-<=wmax strings (complement of an up cycle)."""
    w = clamp_wmax(n, k, wmax)
    for x in generate_up(n, k, k * n - w + n):
        yield k - x + 1


def brute_rank(s: Symbols, n: int, k: int, wmin: int = 0, down_wmax: int | None = None) -> int:
    """Rank by linear scan of the materialized cycle. Testing oracle; O(cycle).

    With ``down_wmax`` set, scans the weight-<=down_wmax cycle instead of the
    weight->=wmin one.
    """
    s = tuple(s)
    validate_symbols(s, k)
    if len(s) != n:
        raise ValueError(f"expected a string of length {n}, got {len(s)}")
    if down_wmax is not None:
        seq = tuple(generate_down(n, k, down_wmax))
    else:
        seq = tuple(generate_up(n, k, wmin))
    total = len(seq)
    for r in range(total):
        if all(seq[(r + i) % total] == s[i] for i in range(n)):
            return r + 1
    raise ValueError(f"{s} is not a window of the cycle")


def cycle_length(n: int, k: int, wmin: int = 0) -> int:
    """Total symbols emitted by generate_up; equals the number of windows."""
    return s_up(n, clamp_wmin(n, k, wmin), k)

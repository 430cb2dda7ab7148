"""Exhaustive verification grid.

Every check rebuilds the ground truth from first principles: cycles are
re-derived as window multisets, ranks come from the window's position in a
linear scan, and every table is recomputed by direct enumeration of all
strings. The algebraic decoder must agree everywhere.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from itertools import product
from typing import Callable

from .counting import decode_context, s_up
from .cycles import generate_up
from .decode import rank_up, unrank_up
from .strings import Symbols


def _min_rotation(s: Symbols) -> Symbols:
    return min(s[i:] + s[:i] for i in range(len(s)))


def _windows(seq: Symbols, n: int) -> list[Symbols]:
    total = len(seq)
    return [tuple(seq[(i + d) % total] for d in range(n)) for i in range(total)]


def check_cycle(n: int, k: int, w: int) -> list[str]:
    """Window multiset of the generated cycle == all weight->=w strings, once each."""
    failures = []
    seq = tuple(generate_up(n, k, w))
    expected_len = s_up(n, w, k)
    if len(seq) != expected_len:
        failures.append(f"cycle({n},{k},{w}): length {len(seq)} != {expected_len}")
        return failures
    windows = _windows(seq, n)
    if len(set(windows)) != len(windows):
        failures.append(f"cycle({n},{k},{w}): repeated window")
    expected = {s for s in product(range(1, k + 1), repeat=n) if sum(s) >= w}
    if set(windows) != expected:
        failures.append(f"cycle({n},{k},{w}): window set mismatch")
    return failures


def check_decode(n: int, k: int, w: int) -> list[str]:
    """rank agrees with the scan position of every window; unrank inverts it."""
    failures = []
    seq = tuple(generate_up(n, k, w))
    windows = _windows(seq, n)
    for idx, s in enumerate(windows, start=1):
        r = rank_up(s, n, k, w)
        if r != idx:
            failures.append(f"rank({n},{k},{w}): {s} -> {r}, scan says {idx}")
        u = unrank_up(idx, n, k, w)
        if u != s:
            failures.append(f"unrank({n},{k},{w}): {idx} -> {u}, scan says {s}")
    return failures


def _brute_suffix_tables(alpha: Symbols, k: int):
    """cnt[t][(j0, wt)] over all length-t strings whose suffixes all exceed alpha;
    j0 is the longest pinned prefix of alpha the string carries."""
    n = len(alpha)
    tables: list[dict[tuple[int, int], int]] = [dict() for _ in range(n + 1)]
    tables[0][(0, 0)] = 1  # empty string: no suffixes to violate
    for t in range(1, n + 1):
        acc = tables[t]
        for s in product(range(1, k + 1), repeat=t):
            if all(s[i:] > alpha for i in range(t)):
                j0 = 0
                while j0 < t and j0 < n and s[j0] == alpha[j0]:
                    j0 += 1
                key = (j0, sum(s))
                acc[key] = acc.get(key, 0) + 1
    return tables


def check_counting_tables(n: int, k: int, w: int, alpha: Symbols) -> list[str]:
    """B, P and A against direct enumeration, for one necklace."""
    failures = []
    ctx = decode_context(alpha, k)
    tables = _brute_suffix_tables(alpha, k)
    cap = k * n
    for t in range(n + 1):
        for j in range(t + 1):
            bw = [0] * (cap + 2)
            pw = [0] * (cap + 2)
            for (j0, wt), c in tables[t].items():
                if j0 >= j:
                    pw[wt] += c
            for wt in range(cap, -1, -1):
                bw[wt] = bw[wt + 1] + pw[wt]
            for v in range(cap + 1):
                if ctx.b_count(t, j, v) != bw[v]:
                    failures.append(f"B({n},{k}) alpha={alpha}: B({t},{j},{v}) != {bw[v]}")
                if ctx.p_count(t, j, v) != pw[v]:
                    failures.append(f"P({n},{k}) alpha={alpha}: P({t},{j},{v}) != {pw[v]}")
    # partition cells: classify each counted string by its first low rotation
    cells: dict[tuple[int, int], int] = {}
    total = 0
    for s in product(range(1, k + 1), repeat=n):
        if sum(s) < w or _min_rotation(s) >= alpha:
            continue
        total += 1
        for t in range(1, n + 1):
            rot = s[t - 1 :] + s[: t - 1]
            if rot < alpha:
                j0 = 0
                while j0 < n and rot[j0] == alpha[j0]:
                    j0 += 1
                cells[(t, j0)] = cells.get((t, j0), 0) + 1
                break
    for t in range(1, n + 1):
        for j in range(n + 1):
            got = ctx.a_count(t, j, w)
            want = cells.get((t, j), 0)
            if got != want:
                failures.append(f"A({n},{k},{w}) alpha={alpha}: A({t},{j}) {got} != {want}")
    if ctx.t_count(w) != total:
        failures.append(f"T({n},{k},{w}) alpha={alpha}: {ctx.t_count(w)} != {total}")
    return failures


def check_counting(n: int, k: int, w: int, deep_alphas: int | None = None) -> list[str]:
    """t_count against enumeration for every necklace; B/P/A cells for a sample.

    ``deep_alphas`` caps how many necklaces get the full table comparison
    (None means all of them).
    """
    failures = []
    all_necks: list[Symbols] = []
    heavy_necks: list[Symbols] = []
    for s in product(range(1, k + 1), repeat=n):
        m = _min_rotation(s)
        if m == s:
            all_necks.append(s)
        if sum(s) >= w:
            heavy_necks.append(m)
    heavy_necks.sort()
    for alpha in all_necks:
        want = bisect_left(heavy_necks, alpha)
        got = decode_context(alpha, k).t_count(w)
        if got != want:
            failures.append(f"T({n},{k},{w}) alpha={alpha}: {got} != {want}")
    sample = all_necks
    if deep_alphas is not None and len(sample) > deep_alphas:
        step = max(1, len(sample) // deep_alphas)
        sample = sample[::step][:deep_alphas]
    for alpha in sample:
        failures.extend(check_counting_tables(n, k, w, alpha))
    return failures


@dataclass
class GridReport:
    cells: int = 0
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def run_grid(
    nmax: int = 5,
    kmax: int = 4,
    deep_nmax: int = 4,
    deep_alphas: int = 3,
    progress: Callable[[str], None] | None = None,
) -> GridReport:
    """Verify every cell (n, k, w) with n <= nmax, 2 <= k <= kmax, n <= w <= k*n.

    Cells with n <= deep_nmax compare the B/P/A tables for every necklace;
    larger cells sample ``deep_alphas`` necklaces per cell. Cycle, decode and
    t_count checks are always exhaustive.
    """
    report = GridReport()
    for n in range(1, nmax + 1):
        for k in range(2, kmax + 1):
            for w in range(n, k * n + 1):
                if progress:
                    progress(f"n={n} k={k} w={w}")
                failures = check_cycle(n, k, w)
                failures += check_decode(n, k, w)
                failures += check_counting(
                    n, k, w, None if n <= deep_nmax else deep_alphas
                )
                report.cells += 1
                report.checks += 3
                report.failures.extend(failures)
    return report

"""Enumeration machinery behind decoding.

Everything here is exact integer counting. ``s_up`` counts strings by a
weight lower bound; ``DecodeContext`` holds, for one fixed necklace alpha,
the suffix-constrained tables

  B(t,j,w): length-t strings with prefix alpha[:j], every non-empty suffix
            lexicographically greater than alpha, and weight >= w
  P(t,j,w): the same with weight exactly w

plus the partition counts A(t,j) that sum to the rank offset T(w) -- the
number of weight->=w strings whose necklace precedes alpha. Suffixes shorter
than alpha compare against it by the usual lexicographic rule (a proper
prefix of alpha is smaller than alpha).

Tables are filled bottom-up in the constructor using cumulative rows, so a
context costs O(n^2 * k*n) table cells and O(1) work per cell; after
construction a context is immutable and safe to share between threads.
"""

from __future__ import annotations

from functools import lru_cache

from .strings import Symbols, border_array, is_necklace, validate_symbols


def s_up(n: int, w: int, k: int) -> int:
    """Number of length-n strings over {1..k} with weight at least w."""
    if n < 0:
        raise ValueError("length must be non-negative")
    if k < 1:
        raise ValueError("alphabet size must be at least 1")
    if w <= n:
        return k**n
    if w > k * n:
        return 0
    return _s_up(n, w, k)


@lru_cache(maxsize=None)
def _s_up(n: int, w: int, k: int) -> int:
    # invariant from s_up: 0 < n and n < w <= k*n
    total = 0
    m = n - 1
    for j in range(1, k + 1):
        wj = w - j
        if wj <= m:
            total += k**m
        elif wj <= k * m:
            total += _s_up(m, wj, k)
    return total


@lru_cache(maxsize=None)
def _s_cumrow(m: int, k: int) -> tuple[int, ...]:
    # c[v] = sum_{u=0..v} s_up(m,u,k) for v in 0..k*m
    acc = 0
    out = []
    for u in range(k * m + 1):
        acc += s_up(m, u, k)
        out.append(acc)
    return tuple(out)


def _s_sum_range(m: int, k: int, lo: int, hi: int) -> int:
    # sum_{v=lo..hi} s_up(m,v,k); v < 0 contributes k^m, v > k*m contributes 0
    if hi < lo:
        return 0
    total = 0
    if lo < 0:
        total += (min(hi, -1) - lo + 1) * k**m
        lo = 0
    top = k * m
    if hi < 0 or lo > top:
        return total
    hi = min(hi, top)
    if hi >= lo:
        c = _s_cumrow(m, k)
        total += c[hi] - (c[lo - 1] if lo else 0)
    return total


def _cumsum(row: list[int]) -> list[int]:
    out = []
    acc = 0
    for v in row:
        acc += v
        out.append(acc)
    return out


class DecodeContext:
    """Memoized B/P/A/T tables for one necklace over {1..k}.

    The weight axis of B is clamped at zero: index 0 stands for "any bound
    <= 0", which every string satisfies. P has no such bucket (an exact
    weight below 1 is unreachable for non-empty strings).
    """

    def __init__(self, alpha: Symbols, k: int):
        alpha = tuple(alpha)
        validate_symbols(alpha, k)
        if not is_necklace(alpha):
            raise ValueError(f"{alpha} is not a necklace")
        self.alpha = alpha
        self.k = k
        self.n = len(alpha)
        self.wcap = k * self.n
        pw = [0]
        for x in alpha:
            pw.append(pw[-1] + x)
        self._pw = pw  # pw[j] = weight of alpha[:j]
        self._border = border_array(alpha)
        self._t_by_w: dict[int, int] = {}
        self._fill()

    def _fill(self) -> None:
        n, k = self.n, self.k
        a = self.alpha
        pw = self._pw
        width = self.wcap + 1

        row0 = [0] * width
        row0[0] = 1  # the empty string
        B: list[list[list[int]]] = [[row0]]
        P: list[list[list[int]]] = [[row0[:]]]
        bcum = [_cumsum(B[0][0])]
        pcum = [_cumsum(P[0][0])]
        for t in range(1, n + 1):
            rows_b: list[list[int]] = [[]] * (t + 1)
            rows_p: list[list[int]] = [[]] * (t + 1)
            # prefix alpha[:t] itself never qualifies (its full suffix is <= alpha)
            rows_b[t] = [0] * width
            rows_p[t] = [0] * width
            for j in range(t - 1, -1, -1):
                aj = a[j]  # symbol following the pinned prefix
                base = pw[j]
                m = t - j - 1
                next_b = rows_b[j + 1]
                next_p = rows_p[j + 1]
                low_bc = bcum[m]
                low_pc = pcum[m]
                bucket = B[m][0][0]
                row_b = [0] * width
                row_p = [0] * width
                for w in range(width):
                    # symbols x in (aj, k] free the suffix constraint; the rest
                    # of the string then only owes weight w - pw[j] - x
                    lo = w - base - k
                    hi = w - base - aj - 1
                    sb = next_b[w]
                    sp = next_p[w]
                    if hi >= lo:
                        if lo < 0:
                            sb += (min(hi, -1) - lo + 1) * bucket
                            lo = 0
                        if hi >= lo:
                            below = low_bc[lo - 1] if lo else 0
                            sb += low_bc[hi] - below
                            below = low_pc[lo - 1] if lo else 0
                            sp += low_pc[hi] - below
                    row_b[w] = sb
                    row_p[w] = sp
                rows_b[j] = row_b
                rows_p[j] = row_p
            B.append(rows_b)
            P.append(rows_p)
            bcum.append(_cumsum(rows_b[0]))
            pcum.append(_cumsum(rows_p[0]))
        self._b = B
        self._p = P
        self._bcum = bcum

    def _check_tj(self, t: int, j: int) -> None:
        if not 0 <= j <= t <= self.n:
            raise ValueError(f"need 0 <= j <= t <= {self.n}, got t={t} j={j}")

    def b_count(self, t: int, j: int, w: int) -> int:
        """Strings of length t, prefix alpha[:j], all suffixes > alpha, weight >= w."""
        self._check_tj(t, j)
        if w > self.wcap:
            return 0
        return self._b[t][j][max(w, 0)]

    def p_count(self, t: int, j: int, w: int) -> int:
        """Same constraint set as b_count but with weight exactly w."""
        self._check_tj(t, j)
        if w < 0 or w > self.wcap:
            return 0
        return self._p[t][j][w]

    def z_border(self, t: int, j: int) -> int:
        """Longest suffix of alpha[n-t+1 .. j-1] equal to a prefix of alpha.

        Applies when a counted string wraps (t + j > n); the overlap piece is
        a suffix of alpha[:j], so its matches against the front of alpha are
        exactly the borders of alpha[:j], capped at the overlap length.
        """
        n = self.n
        if t + j <= n or j >= n:
            raise ValueError("z is defined only for t + j > n and j < n")
        qlen = t + j - n - 1
        if qlen <= 0:
            return 0
        z = self._border[j]
        while z > qlen:
            z = self._border[z]
        return z

    def _b0_sum(self, m: int, lo: int, hi: int) -> int:
        # sum of b_count(m, 0, v) over v in [lo, hi]; v <= 0 hits the bucket
        if hi < lo:
            return 0
        total = 0
        if lo < 0:
            total += (min(hi, -1) - lo + 1) * self._b[m][0][0]
            lo = 0
        if hi >= lo:
            c = self._bcum[m]
            below = c[lo - 1] if lo else 0
            total += c[hi] - below
        return total

    def a_count(self, t: int, j: int, w: int) -> int:
        """Size of the (t,j) cell of the partition counted by t_count(w).

        Cell (t,j) holds the weight->=w strings whose rotation by t-1 is the
        first one below alpha and agrees with alpha on exactly j leading
        symbols.
        """
        n, k, a, pw = self.n, self.k, self.alpha, self._pw
        if not 1 <= t <= n:
            raise ValueError(f"need 1 <= t <= {n}, got {t}")
        if not 0 <= j <= n:
            raise ValueError(f"need 0 <= j <= {n}, got {j}")
        if j == n:
            return 0
        if w > self.wcap:
            return 0
        aj = a[j]  # bound for the symbol written after the matched prefix
        if t + j <= n:
            # rotation lies inside the string: free head of length t-1,
            # pinned prefix, one small symbol, then an unconstrained tail
            if aj == 1:
                return 0
            m = n - t - j
            prow = self._p[t - 1][0]
            base = w - pw[j]
            total = 0
            for wp in range(t - 1, k * (t - 1) + 1):
                c = prow[wp]
                if c:
                    v = base - wp
                    total += c * _s_sum_range(m, k, v - (aj - 1), v - 1)
            return total
        # wrapping rotation: the overlap borrows a suffix of alpha[:j]
        z = self.z_border(t, j)
        az = a[z]
        if aj <= az:
            return 0
        total = self.b_count(n - j + z, z + 1, w - pw[j - z])
        base = w - pw[j]
        total += self._b0_sum(n - j - 1, base - (aj - 1), base - (az + 1))
        return total

    def t_count(self, w: int) -> int:
        """Number of weight->=w strings whose necklace precedes alpha.

        Equals the length of the cycle prefix that lies before alpha's block,
        whenever alpha belongs to the weight-filtered necklace order.
        """
        if w > self.wcap:
            return 0
        w = max(w, 0)
        cached = self._t_by_w.get(w)
        if cached is None:
            n = self.n
            cached = 0
            for t in range(1, n + 1):
                for j in range(n):
                    cached += self.a_count(t, j, w)
            self._t_by_w[w] = cached
        return cached

    def table_cells(self) -> int:
        """Total number of stored table entries (space accounting)."""
        cells = 0
        for table in (self._b, self._p):
            for rows in table:
                for row in rows:
                    cells += len(row)
        return cells


@lru_cache(maxsize=4096)
def decode_context(alpha: Symbols, k: int) -> DecodeContext:
    """Shared, cached context per (alpha, k); alpha must be a tuple."""
    return DecodeContext(alpha, k)


def clear_caches() -> None:
    """Drop all memoized tables (mostly for long test runs)."""
    decode_context.cache_clear()
    _s_up.cache_clear()
    _s_cumrow.cache_clear()

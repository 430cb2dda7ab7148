"""Shared brute-force oracles. Everything here enumerates from definitions and
never calls into the algebraic paths it is used to check."""

from itertools import product


def all_strings(n, k):
    return list(product(range(1, k + 1), repeat=n))


def min_rotation(s):
    return min(s[i:] + s[:i] for i in range(len(s)))


def brute_necklaces(n, k, wmin=0):
    return [s for s in all_strings(n, k) if s == min_rotation(s) and sum(s) >= wmin]


def brute_is_necklace(s):
    return s == min_rotation(s)


def cyclic_windows(seq, n):
    total = len(seq)
    return [tuple(seq[(i + d) % total] for d in range(n)) for i in range(total)]


def suffixes_all_exceed(s, alpha):
    return all(s[i:] > alpha for i in range(len(s)))


def brute_b(alpha, k, t, j, w):
    """Direct enumeration of the weight->=w suffix-constrained prefix count."""
    if t == 0:
        return 1 if (j == 0 and w <= 0) else 0
    count = 0
    for s in all_strings(t, k):
        if s[:j] == alpha[:j] and sum(s) >= w and suffixes_all_exceed(s, alpha):
            count += 1
    return count


def brute_p(alpha, k, t, j, w):
    if t == 0:
        return 1 if (j == 0 and w == 0) else 0
    count = 0
    for s in all_strings(t, k):
        if s[:j] == alpha[:j] and sum(s) == w and suffixes_all_exceed(s, alpha):
            count += 1
    return count


def brute_t(alpha, n, k, w):
    return sum(
        1
        for s in all_strings(n, k)
        if sum(s) >= w and min_rotation(s) < alpha
    )


def brute_a_cells(alpha, n, k, w):
    """Classify each counted string by (first low rotation, prefix agreement)."""
    cells = {}
    for s in all_strings(n, k):
        if sum(s) < w or min_rotation(s) >= alpha:
            continue
        for t in range(1, n + 1):
            rot = s[t - 1 :] + s[: t - 1]
            if rot < alpha:
                j = 0
                while j < n and rot[j] == alpha[j]:
                    j += 1
                cells[(t, j)] = cells.get((t, j), 0) + 1
                break
    return cells

"""Brute-force reference implementations.

Nothing here imports the package's kernels; every value is recomputed from
plain Python sets and ``itertools``.
"""

from itertools import combinations, combinations_with_replacement, product


def naive_sumset(A, h):
    return sorted({sum(t) for t in product(A, repeat=h)})


def naive_ell(A, h):
    S = set(naive_sumset(A, h))
    if 0 not in S:
        return None
    n = 0
    while n + 1 in S:
        n += 1
    return n


def naive_ell_sharp(A, h):
    S = set(naive_sumset(A, h))
    best = None
    for c in sorted(S):
        if c - 1 in S:
            continue
        n = 0
        while c + n + 1 in S:
            n += 1
        if n >= 1 and (best is None or n > best[0]):
            best = (n, c)
    return best


def brute_spectrum_nonneg(h, k, top):
    """ell over every A with 0 in A, |A| <= k, A inside [0, top]."""
    vals = set()
    for size in range(k):
        for rest in combinations(range(1, top + 1), size):
            vals.add(naive_ell((0,) + rest, h))
    return sorted(vals)


def brute_n(h, k, top):
    return max(brute_spectrum_nonneg(h, k, top))


def brute_count_bases(h, n):
    universe = list(range(n + 1))
    total = 0
    for bits in range(1, 1 << (n + 1)):
        A = [x for x in universe if bits >> x & 1]
        S = set(naive_sumset(A, h)) if len(A) ** h <= 10**6 else None
        if all(x in S for x in universe):
            total += 1
    return total


def brute_k_dual(h, n):
    for k in range(1, n + 2):
        for A in combinations(range(n + 1), k):
            S = set(naive_sumset(A, h))
            if all(x in S for x in range(n + 1)):
                return k, A
    raise AssertionError


def brute_min_gap_multisets(A, hs):
    """Smallest |u - v| over distinct (size, multiset) pairs with sizes in hs."""
    A = sorted(A)
    entries = []
    for h in hs:
        for t in combinations_with_replacement(range(len(A)), h):
            entries.append(((h, t), sum(A[i] for i in t)))
    best = None
    for (k1, s1), (k2, s2) in combinations(entries, 2):
        g = abs(s1 - s2)
        if best is None or g < best:
            best = g
    return best


def brute_min_gap_subsets(A):
    A = sorted(A)
    sums = []
    for r in range(len(A) + 1):
        for t in combinations(A, r):
            sums.append(sum(t))
    best = None
    for a, b in combinations(sums, 2):
        g = abs(a - b)
        if best is None or g < best:
            best = g
    return best

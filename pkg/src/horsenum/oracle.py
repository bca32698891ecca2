"""Brute-force enumerators used as ground truth.

Nothing in here calls the closed forms in the rest of the package; every
count is obtained by walking the combinatorial objects themselves.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb, gcd, lcm
from typing import Iterator

from .errors import DomainError

MAX_WEAK_N = 9
MAX_CYCLE_N = 9
MAX_PARTITION_N = 12

RELATIVE_STRONG = "relative_strong"
PRESCRIBED = "prescribed"


@dataclass(frozen=True)
class WeakOrdering:
    """Ordered set partition of {0, ..., n-1}; earlier blocks finish earlier."""

    blocks: tuple[frozenset[int], ...]

    @classmethod
    def from_ranks(cls, ranks: tuple[int, ...]) -> WeakOrdering:
        k = max(ranks) + 1 if ranks else 0
        blocks: list[set[int]] = [set() for _ in range(k)]
        for element, rank in enumerate(ranks):
            blocks[rank].add(element)
        return cls(tuple(frozenset(b) for b in blocks))

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def ranks(self) -> tuple[int, ...]:
        out = [0] * self.n
        for i, block in enumerate(self.blocks):
            for element in block:
                out[element] = i
        return tuple(out)


def _rank_tuples(n: int) -> Iterator[tuple[int, ...]]:
    # Recursive block insertion: element i joins one of the k existing blocks
    # or opens a new block in one of the k+1 gaps.
    def insert(i: int, ranks: tuple[int, ...], k: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield ranks
            return
        for j in range(k):
            yield from insert(i + 1, ranks + (j,), k)
        for gap in range(k + 1):
            shifted = tuple(x + (x >= gap) for x in ranks)
            yield from insert(i + 1, shifted + (gap,), k + 1)

    return insert(0, (), 0)


def enumerate_weak_orderings(n: int) -> Iterator[WeakOrdering]:
    """Yield every weak ordering of ``n`` elements exactly once."""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    if n > MAX_WEAK_N:
        raise DomainError(f"enumeration capped at n <= {MAX_WEAK_N}, got {n}")
    for ranks in _rank_tuples(n):
        yield WeakOrdering.from_ranks(ranks)


def _distinct_prefix(ranks: tuple[int, ...]) -> int:
    seen = set()
    for i, x in enumerate(ranks):
        if x in seen:
            return i
        seen.add(x)
    return len(ranks)


def _increasing_prefix(ranks: tuple[int, ...]) -> int:
    for i in range(1, len(ranks)):
        if ranks[i] <= ranks[i - 1]:
            return i
    return len(ranks)


@lru_cache(maxsize=None)
def _rigging_profile(n: int) -> tuple[Counter, Counter]:
    # One pass over all orderings of n elements.  For each ordering record the
    # longest prefix 0..d-1 of pairwise untied elements, and the longest prefix
    # whose blocks appear in increasing order; count_rigged reads both off.
    distinct: Counter = Counter()
    increasing: Counter = Counter()
    for ranks in _rank_tuples(n):
        distinct[_distinct_prefix(ranks)] += 1
        increasing[_increasing_prefix(ranks)] += 1
    return distinct, increasing


def count_weak_orderings(n: int) -> int:
    if n > MAX_WEAK_N:
        raise DomainError(f"enumeration capped at n <= {MAX_WEAK_N}, got {n}")
    return sum(_rigging_profile(n)[0].values())


def count_rigged(n: int, r: int, mode: str = RELATIVE_STRONG) -> int:
    """Count weak orderings of ``n`` elements with elements 0..r-1 rigged.

    ``relative_strong`` requires the marked elements to sit in distinct
    blocks; ``prescribed`` further requires block(0) < block(1) < ... .
    """
    if mode not in (RELATIVE_STRONG, PRESCRIBED):
        raise ValueError(f"unknown mode {mode!r}")
    if not 0 <= r <= n:
        raise DomainError(f"need 0 <= r <= n, got r={r}, n={n}")
    if n > MAX_WEAK_N:
        raise DomainError(f"enumeration capped at n <= {MAX_WEAK_N}, got {n}")
    distinct, increasing = _rigging_profile(n)
    hist = distinct if mode == RELATIVE_STRONG else increasing
    return sum(c for d, c in hist.items() if d >= r)


@lru_cache(maxsize=None)
def _cycle_histogram(n: int) -> Counter:
    hist: Counter = Counter()
    for perm in itertools.permutations(range(n)):
        seen = [False] * n
        cycles = 0
        for start in range(n):
            if not seen[start]:
                cycles += 1
                j = start
                while not seen[j]:
                    seen[j] = True
                    j = perm[j]
        hist[cycles] += 1
    return hist


def count_cycles_signed(n: int, k: int) -> int:
    """Signed count of permutations of ``n`` elements with exactly ``k`` cycles."""
    if n < 0 or k < 0:
        raise DomainError("n and k must be nonnegative")
    if n > MAX_CYCLE_N:
        raise DomainError(f"enumeration capped at n <= {MAX_CYCLE_N}, got {n}")
    return (-1) ** ((n - k) % 2) * _cycle_histogram(n)[k]


def enumerate_set_partitions(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield unordered set partitions of {0..n-1} as tuples of sorted blocks."""
    if n > MAX_PARTITION_N:
        raise DomainError(f"enumeration capped at n <= {MAX_PARTITION_N}, got {n}")
    for rgs, k in _restricted_growth(n):
        blocks: list[list[int]] = [[] for _ in range(k)]
        for element, b in enumerate(rgs):
            blocks[b].append(element)
        yield tuple(tuple(b) for b in blocks)


def _restricted_growth(n: int) -> Iterator[tuple[list[int], int]]:
    # Restricted growth strings a[0..n-1] with a[0] = 0, a[i] <= 1 + max(a[:i]),
    # paired with their block count.  The yielded list is reused.
    if n == 0:
        yield [], 0
        return
    a = [0] * n
    m = [0] * n  # m[i] = max(a[:i+1])
    while True:
        yield a, m[n - 1] + 1
        i = n - 1
        while i > 0 and a[i] > m[i - 1]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        m[i] = max(m[i - 1], a[i])
        for j in range(i + 1, n):
            a[j] = 0
            m[j] = m[i]


@lru_cache(maxsize=None)
def _block_histogram(n: int) -> Counter:
    hist: Counter = Counter()
    for _, k in _restricted_growth(n):
        hist[k] += 1
    return hist


def count_set_partitions(n: int, k: int) -> int:
    """Number of partitions of an ``n``-set into exactly ``k`` nonempty blocks."""
    if n < 0 or k < 0:
        raise DomainError("n and k must be nonnegative")
    if n > MAX_PARTITION_N:
        raise DomainError(f"enumeration capped at n <= {MAX_PARTITION_N}, got {n}")
    return _block_histogram(n)[k]


@lru_cache(maxsize=None)
def _lemma_profile(n_plus_1: int) -> Counter:
    # Keyed by (d, e): d = untied prefix length among the first n elements,
    # e = first old element tied with the new element (n if none).
    n = n_plus_1 - 1
    hist: Counter = Counter()
    for ranks in _rank_tuples(n_plus_1):
        old, new = ranks[:n], ranks[n]
        e = next((i for i, x in enumerate(old) if x == new), n)
        hist[_distinct_prefix(old), e] += 1
    return hist


def verify_counting_lemma(n: int, m: int) -> bool:
    """Check G(n+1) - m*G(n) against direct enumeration.

    G(j) counts weak orderings of j elements whose first m elements are
    pairwise untied.  The left side counts orderings of n+1 elements with the
    first m untied and the added element n tied with none of them.
    """
    if not 0 <= m <= n:
        raise DomainError(f"need 0 <= m <= n, got m={m}, n={n}")
    if n + 1 > MAX_WEAK_N:
        raise DomainError(f"enumeration capped at n+1 <= {MAX_WEAK_N}")
    direct = sum(c for (d, e), c in _lemma_profile(n + 1).items() if d >= m and e >= m)
    g_next = count_rigged(n + 1, m, RELATIVE_STRONG)
    g_here = count_rigged(n, m, RELATIVE_STRONG)
    return direct == g_next - m * g_here


# Classical recurrences, kept independent of the closed forms they check.

def fubini_by_binomial_recurrence(N: int) -> list[int]:
    """F(0..N-1) from F(n) = sum_{k=1..n} C(n,k) F(n-k)."""
    out = [1]
    for n in range(1, N):
        out.append(sum(comb(n, k) * out[n - k] for k in range(1, n + 1)))
    return out[:N]


def stirling_first_by_recurrence(N: int) -> list[list[int]]:
    """Rows 0..N-1 of s(n,k) from s(n+1,k) = s(n,k-1) - n s(n,k)."""
    rows = [[1] + [0] * (N - 1)]
    for n in range(N - 1):
        prev = rows[-1]
        rows.append([(prev[k - 1] if k else 0) - n * prev[k] for k in range(N)])
    return rows[:N]


def stirling_second_by_recurrence(N: int) -> list[list[int]]:
    """Rows 0..N-1 of S(n,k) from S(n+1,k) = k S(n,k) + S(n,k-1)."""
    rows = [[1] + [0] * (N - 1)]
    for _ in range(N - 1):
        prev = rows[-1]
        rows.append([k * prev[k] + (prev[k - 1] if k else 0) for k in range(N)])
    return rows[:N]


def group_exponent(K: int) -> int:
    """Exponent of (Z/KZ)^x as the lcm of multiplicative orders, by brute force."""
    exp = 1
    for b in range(1, K):
        if gcd(b, K) != 1:
            continue
        order, x = 1, b % K
        while x != 1 % K:
            x = x * b % K
            order += 1
        exp = lcm(exp, order)
    return exp


def totient_by_count(K: int) -> int:
    return sum(1 for a in range(1, K + 1) if gcd(a, K) == 1)

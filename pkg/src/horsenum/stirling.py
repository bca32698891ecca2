"""Stirling numbers of both kinds and their lower-triangular matrices.

s(n, k) is read off the expansion of the falling factorial
x(x-1)...(x-n+1) = sum_k s(n, k) x**k, and S(n, k) comes from the explicit
alternating sum (1/k!) sum_t (-1)**(k-t) C(k, t) t**n.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator, Optional, Sequence

from .errors import DomainError, InexactDivisionError

FIRST_SIGNED = "first_signed"
SECOND = "second"
KINDS = (FIRST_SIGNED, SECOND)


def _poly_times_linear(coeffs: Sequence[int], c: int, modulus: Optional[int] = None) -> list[int]:
    # (sum a_k x^k) * (x - c)
    out = [0] * (len(coeffs) + 1)
    for k, a in enumerate(coeffs):
        out[k + 1] += a
        out[k] -= c * a
    if modulus is not None:
        out = [v % modulus for v in out]
    return out


_falling_rows: list[tuple[int, ...]] = [(1,)]
_falling_lock = threading.Lock()


def falling_factorial_coefficients(r: int) -> tuple[int, ...]:
    """Coefficients [s(r,0), ..., s(r,r)] of x(x-1)...(x-r+1)."""
    if r < 0:
        raise DomainError(f"r must be nonnegative, got {r}")
    if r >= len(_falling_rows):
        with _falling_lock:
            while len(_falling_rows) <= r:
                m = len(_falling_rows) - 1
                _falling_rows.append(tuple(_poly_times_linear(_falling_rows[m], m)))
    return _falling_rows[r]


def stirling_first_signed(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise DomainError("n and k must be nonnegative")
    if k > n:
        return 0
    return falling_factorial_coefficients(n)[k]


@lru_cache(maxsize=1024)
def stirling_second_row(n: int) -> tuple[int, ...]:
    """[S(n,0), ..., S(n,n)] from the explicit alternating sum.

    The powers t**n are shared across the row; each entry is still
    (1/k!) sum_t (-1)**(k-t) C(k,t) t**n with the division checked.
    """
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    # 0**0 == 1 in Python, which gives S(0, 0) = 1.
    powers = [t**n for t in range(n + 1)]
    row = []
    binom = [1]  # C(k, t) for t = 0..k
    for k in range(n + 1):
        if k:
            binom = [1] + [binom[t - 1] + binom[t] for t in range(1, k)] + [1]
        total = sum(binom[t] * powers[t] if (k - t) % 2 == 0 else -binom[t] * powers[t]
                    for t in range(k + 1))
        q, rem = divmod(total, factorial(k))
        if rem:
            raise InexactDivisionError(f"k! does not divide the sum for S({n},{k})")
        row.append(q)
    return tuple(row)


def stirling_second(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise DomainError("n and k must be nonnegative")
    if k > n:
        return 0
    return stirling_second_row(n)[k]


@dataclass(frozen=True)
class TriangularMatrix:
    """Square lower-triangular integer matrix (a truncation of s-hat or S-hat)."""

    entries: tuple[tuple[int, ...], ...]
    kind: Optional[str] = None

    def __post_init__(self):
        N = len(self.entries)
        if N < 1 or any(len(row) != N for row in self.entries):
            raise ValueError("entries must be a nonempty square array")
        for n, row in enumerate(self.entries):
            if any(row[k] for k in range(n + 1, N)):
                raise ValueError(f"row {n} has entries above the diagonal")

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, idx: tuple[int, int]) -> int:
        n, k = idx
        return self.entries[n][k]

    @classmethod
    def identity(cls, N: int) -> TriangularMatrix:
        return cls(tuple(tuple(int(n == k) for k in range(N)) for n in range(N)))

    def matvec(self, vec: Sequence[int]) -> list[int]:
        if len(vec) != self.size:
            raise DomainError(f"vector length {len(vec)} != matrix size {self.size}")
        return [sum(row[k] * vec[k] for k in range(n + 1)) for n, row in enumerate(self.entries)]

    def is_identity(self) -> bool:
        return self.entries == TriangularMatrix.identity(self.size).entries


def stirling_matrix(kind: str, N: int) -> TriangularMatrix:
    """Rows and columns 0..N-1 of s-hat (``first_signed``) or S-hat (``second``)."""
    if N < 1:
        raise DomainError(f"N must be positive, got {N}")
    if kind == FIRST_SIGNED:
        entry = stirling_first_signed
    elif kind == SECOND:
        entry = stirling_second
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return TriangularMatrix(tuple(tuple(entry(n, k) for k in range(N)) for n in range(N)), kind)


def matrix_product(A: TriangularMatrix, B: TriangularMatrix) -> TriangularMatrix:
    if A.size != B.size:
        raise DomainError(f"size mismatch: {A.size} vs {B.size}")
    N = A.size
    a, b = A.entries, B.entries
    # Lower-triangular: only k <= j <= n contributes to entry (n, k).
    rows = tuple(
        tuple(sum(a[n][j] * b[j][k] for j in range(k, n + 1)) if k <= n else 0 for k in range(N))
        for n in range(N)
    )
    return TriangularMatrix(rows)


def stirling_rows_mod(kind: str, N: int, modulus: int) -> Iterator[list[int]]:
    """Yield rows 0..N-1 of s-hat or S-hat reduced mod ``modulus``, each of length N.

    Works entirely in residues, so it scales to sizes where the exact entries
    would be thousands of digits long.
    """
    if kind == FIRST_SIGNED:
        row = [1 % modulus]
        for n in range(N):
            yield row + [0] * (N - len(row))
            row = _poly_times_linear(row, n, modulus)
    elif kind == SECOND:
        # The explicit sum needs a division by k!, which has no inverse mod m,
        # so the residue path uses S(n+1,k) = k S(n,k) + S(n,k-1).
        row = [1 % modulus] + [0] * (N - 1)
        for _ in range(N):
            yield list(row)
            row = [(k * row[k] + (row[k - 1] if k else 0)) % modulus for k in range(N)]
    else:
        raise ValueError(f"unknown kind {kind!r}")

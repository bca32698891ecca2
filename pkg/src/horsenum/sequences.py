"""Exact factorials, Fubini, r-Fubini and r-horse numbers.

F(n) is produced by the lower-triangular transform F = S-hat . f, where
f holds the factorials; F_r(n) = sum_{j=0..r} s(r, r-j) F(n-j); and
H_r(n) = F_r(n) / r!.
"""
from __future__ import annotations

import threading
from math import factorial
from typing import Callable, Iterable, Optional

from .errors import DomainError, InexactDivisionError
from .shift import apply, falling_factorial_operator
from .stirling import FIRST_SIGNED, SECOND, stirling_first_signed, stirling_matrix, stirling_second_row

FACTORIAL = "factorial"
FUBINI = "fubini"
FUBINI_R = "fubini_r"
HORSE_R = "horse_r"


class BigSequence:
    """Append-only cache of exact sequence terms.

    ``start`` is the first defined index (r for the rigged sequences); indexing
    below it raises DomainError, and indexing past the computed prefix extends
    the cache.  Existing entries are never rewritten.
    """

    def __init__(
        self,
        kind: str,
        term: Callable[[int, list[int]], int],
        r: Optional[int] = None,
        start: int = 0,
        values: Iterable[int] = (),
    ):
        self.kind = kind
        self.r = r
        self.start = start
        self._term = term
        self._values: list[int] = list(values)
        self._lock = threading.Lock()

    @property
    def identity(self) -> str:
        return self.kind if self.r is None else f"{self.kind}({self.r})"

    @property
    def values(self) -> list[int]:
        """Computed terms; values[i] is the term at index start + i."""
        return list(self._values)

    def __len__(self) -> int:
        return self.start + len(self._values)

    def extend(self, N: int) -> BigSequence:
        """Make sure every index below N is computed."""
        if N > len(self):
            with self._lock:
                while len(self) < N:
                    self._values.append(self._term(len(self), self._values))
        return self

    def __getitem__(self, n: int) -> int:
        if n < self.start:
            raise DomainError(f"{self.identity} is undefined at n={n} < {self.start}")
        self.extend(n + 1)
        return self._values[n - self.start]

    def prefix(self, N: int) -> BigSequence:
        """A new sequence holding exactly the indices below N."""
        self.extend(N)
        return BigSequence(self.kind, self._term, self.r, self.start,
                           self._values[: max(N - self.start, 0)])

    def __repr__(self):
        return f"BigSequence({self.identity}, {self.values!r})"


def _factorial_term(n: int, prev: list[int]) -> int:
    return prev[-1] * n if n else 1


_factorials = BigSequence(FACTORIAL, _factorial_term)


def _fubini_term(n: int, prev: list[int]) -> int:
    # Row n of S-hat applied to the factorial vector.
    return sum(S * _factorials[k] for k, S in enumerate(stirling_second_row(n)))


_fubini = BigSequence(FUBINI, _fubini_term)


def _check_N(N: int) -> None:
    if N < 1:
        raise DomainError(f"N must be positive, got {N}")


def factorials(N: int) -> BigSequence:
    _check_N(N)
    return _factorials.prefix(N)


def fubini(N: int) -> BigSequence:
    """F(0), ..., F(N-1) computed as S-hat . f."""
    _check_N(N)
    return _fubini.prefix(N)


def fubini_alternating(N: int) -> BigSequence:
    """F(0), ..., F(N-1) from F(n) = n! - sum_{j=1..n} s(n, n-j) F(n-j)."""
    _check_N(N)

    def term(n: int, prev: list[int]) -> int:
        return factorial(n) - sum(stirling_first_signed(n, n - j) * prev[n - j] for j in range(1, n + 1))

    return BigSequence(FUBINI, term).extend(N)


def _check_rigging(n: int, r: int) -> None:
    if r < 0:
        raise DomainError(f"r must be nonnegative, got {r}")
    if n < r:
        raise DomainError(f"need n >= r, got n={n}, r={r}")


def fubini_r(n: int, r: int) -> int:
    """Weak orderings of n elements with r marked elements pairwise untied."""
    _check_rigging(n, r)
    return sum(stirling_first_signed(r, r - j) * _fubini[n - j] for j in range(r + 1))


def fubini_r_by_operator(n: int, r: int) -> int:
    """F_r(n) as (E)_r E**(-r) applied to the Fubini sequence."""
    _check_rigging(n, r)
    return apply(falling_factorial_operator(r), _fubini, n)


def horse_r(n: int, r: int) -> int:
    """Weak orderings of n elements with r marked elements in a fixed strict order."""
    q, rem = divmod(fubini_r(n, r), factorial(r))
    if rem:
        raise InexactDivisionError(f"{r}! does not divide F_{r}({n})")
    return q


def fubini_r_sequence(r: int) -> BigSequence:
    _check_rigging(r, r)
    return BigSequence(FUBINI_R, lambda n, _: fubini_r(n, r), r=r, start=r)


def horse_r_sequence(r: int) -> BigSequence:
    _check_rigging(r, r)
    return BigSequence(HORSE_R, lambda n, _: horse_r(n, r), r=r, start=r)


def _fixed_length(n: int, prev: list[int]) -> int:
    raise DomainError(f"transformed sequence has only {n} terms")


def _transform(kind: str, seq: BigSequence | list[int], N: int, out_kind: str) -> BigSequence:
    _check_N(N)
    vec = seq.values if isinstance(seq, BigSequence) else list(seq)
    if len(vec) != N:
        raise DomainError(f"sequence has {len(vec)} terms, expected {N}")
    return BigSequence(out_kind, _fixed_length, values=stirling_matrix(kind, N).matvec(vec))


def transform_strong_to_weak(f: BigSequence | list[int], N: int) -> BigSequence:
    """S-hat(N) . f; maps factorials to Fubini numbers."""
    return _transform(SECOND, f, N, FUBINI)


def transform_weak_to_strong(F: BigSequence | list[int], N: int) -> BigSequence:
    """s-hat(N) . F; maps Fubini numbers to factorials."""
    return _transform(FIRST_SIGNED, F, N, FACTORIAL)

"""Finite polynomials in the shift operator E and its inverse.

An operator sum_j c_j E**j acts on a sequence C by
(sum_j c_j E**j) C(n) = sum_j c_j C(n + j).
"""
from __future__ import annotations

from collections import defaultdict
from typing import Mapping, Sequence

from .errors import DomainError


class ShiftPolynomial:
    """Immutable sparse map offset -> coefficient, zero coefficients dropped."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        items = (terms or {}).items()
        self._terms = tuple(sorted((int(j), int(c)) for j, c in items if c != 0))

    @classmethod
    def identity(cls) -> ShiftPolynomial:
        return cls({0: 1})

    @classmethod
    def zero(cls) -> ShiftPolynomial:
        return cls()

    @classmethod
    def shift(cls, m: int) -> ShiftPolynomial:
        """E**m; negative m gives the left shift."""
        return cls({m: 1})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def coefficient(self, offset: int) -> int:
        return self.terms.get(offset, 0)

    def __eq__(self, other):
        if not isinstance(other, ShiftPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __repr__(self):
        return f"ShiftPolynomial({self.terms})"

    def __add__(self, other: ShiftPolynomial) -> ShiftPolynomial:
        acc = defaultdict(int, self._terms)
        for j, c in other._terms:
            acc[j] += c
        return ShiftPolynomial(acc)

    def __neg__(self) -> ShiftPolynomial:
        return ShiftPolynomial({j: -c for j, c in self._terms})

    def __sub__(self, other: ShiftPolynomial) -> ShiftPolynomial:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return ShiftPolynomial({j: c * other for j, c in self._terms})
        return compose(self, other)

    __rmul__ = __mul__

    def __call__(self, seq: Sequence[int], n: int) -> int:
        return apply(self, seq, n)


def compose(p: ShiftPolynomial, q: ShiftPolynomial) -> ShiftPolynomial:
    """Operator product: offsets add, coefficients multiply."""
    acc: dict[int, int] = defaultdict(int)
    for a, ca in p._terms:
        for b, cb in q._terms:
            acc[a + b] += ca * cb
    return ShiftPolynomial(acc)


def falling_factorial_operator(r: int) -> ShiftPolynomial:
    """E (E - I) (E - 2I) ... (E - (r-1)I) E**(-r)."""
    if r < 0:
        raise DomainError(f"r must be nonnegative, got {r}")
    E, I = ShiftPolynomial.shift(1), ShiftPolynomial.identity()
    op = I
    for m in range(r):
        op = compose(op, E - I * m)
    return compose(op, ShiftPolynomial.shift(-r))


def apply(p: ShiftPolynomial, seq: Sequence[int], n: int) -> int:
    """Evaluate (p C)(n) = sum_j coeff_j * C(n + j).

    Raises DomainError if any term would read a negative index; no zero
    padding is assumed below index 0.
    """
    total = 0
    for j, c in p._terms:
        idx = n + j
        if idx < 0:
            raise DomainError(f"operator reads index {idx} < 0 (n={n}, offset={j})")
        total += c * seq[idx]
    return total

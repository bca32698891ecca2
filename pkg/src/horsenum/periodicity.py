"""Residues of F(n) and F_r(n) modulo K, and their eventual period.

Modulo K every k! with k >= K vanishes, so

    F(n) = sum_k S(n,k) k!  ==  sum_{k<K} S(n,k) k!  (mod K).

Writing S(n,k) k! = sum_t (-1)**(k-t) C(k,t) t**n and swapping the sums gives
F(n) == sum_{t<K} c_t t**n (mod K) with c_t = sum_{k=t}^{K-1} (-1)**(k-t) C(k,t).
Each t**n is periodic with period dividing lambda(K) once n >= R, which is
what bounds both the period and the onset.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .errors import DomainError, TheoremViolation
from .number_theory import carmichael, divisors, max_prime_exponent
from .stirling import stirling_first_signed

# analyze() starts the period search this far past the proven onset bound so
# that the measured onset is a real measurement rather than the bound itself.
ONSET_PROBE = 8
WINDOW_SLACK = 16
_BLOCK_CELLS = 1 << 18


@dataclass(frozen=True)
class PeriodReport:
    modulus: int
    sequence_id: str
    onset: int
    period: int
    carmichael: int
    max_exponent: int
    onset_bound: int
    period_divides_carmichael: bool
    onset_within_bound: bool

    @property
    def bounds_hold(self) -> bool:
        return self.period_divides_carmichael and self.onset_within_bound

    def as_dict(self) -> dict:
        return asdict(self)


def _dtype_for(K: int):
    # Products of two residues must fit in int64.
    return np.int64 if K < (1 << 31) else object


def power_sum_weights(K: int) -> np.ndarray:
    """c_t = sum_{k=t}^{K-1} (-1)**(k-t) C(k, t) mod K, for t = 0..K-1."""
    dtype = _dtype_for(K)
    weights = np.zeros(K, dtype=dtype)
    row = np.zeros(K, dtype=dtype)  # C(k, t) mod K for t <= k
    row[0] = 1 % K
    signs = np.ones(K, dtype=dtype)  # (-1)**(k-t)
    signs[1::2] = -1
    for k in range(K):
        if k:
            row[1 : k + 1] = (row[1 : k + 1] + row[:k]) % K
        # (-1)**(k-t) = (-1)**k * (-1)**t
        weights[: k + 1] += (signs[: k + 1] if k % 2 == 0 else -signs[: k + 1]) * row[: k + 1]
        weights %= K
    return weights


def fubini_mod_sequence(K: int, N: int) -> list[int]:
    """F(n) mod K for 0 <= n < N, using residue arithmetic only."""
    if K < 1:
        raise DomainError(f"modulus must be positive, got {K}")
    if N < 1:
        raise DomainError(f"N must be positive, got {N}")
    if K == 1:
        return [0] * N
    dtype = _dtype_for(K)
    c = power_sum_weights(K)
    base = np.arange(K, dtype=dtype)
    block = max(1, min(N, _BLOCK_CELLS // K))

    # table[i, t] = t**i mod K for i < block (0**0 = 1).
    table = np.empty((block, K), dtype=dtype)
    table[0] = 1
    for i in range(1, block):
        table[i] = table[i - 1] * base % K
    step = table[-1] * base % K  # t**block

    out: list[int] = []
    start = np.ones(K, dtype=dtype)  # t**n0 for the current block
    for n0 in range(0, N, block):
        rows = min(block, N - n0)
        powers = start * table[:rows] % K
        out.extend(int(v) for v in (powers * c % K).sum(axis=1) % K)
        start = start * step % K
    return out


def fubini_r_mod_sequence(K: int, r: int, N: int) -> list[int]:
    """F_r(n) mod K for r <= n < N; entry i holds F_r(r + i) mod K."""
    if r < 0:
        raise DomainError(f"r must be nonnegative, got {r}")
    if N <= r:
        raise DomainError(f"need N > r, got N={N}, r={r}")
    dtype = _dtype_for(K)
    F = np.array(fubini_mod_sequence(K, N), dtype=dtype)
    total = np.zeros(N - r, dtype=dtype)
    for j in range(r + 1):
        coef = stirling_first_signed(r, r - j) % K
        if coef:
            total = (total + coef * F[r - j : N - j]) % K
    return [int(v) for v in total]


def detect_eventual_period(seq, lambda_K: int, onset_bound: int) -> tuple[int, int]:
    """Minimal (onset, period) of ``seq`` given that some period dividing
    ``lambda_K`` holds from ``onset_bound`` on.

    Raises TheoremViolation when no divisor of ``lambda_K`` works from
    ``onset_bound`` across the window.
    """
    need = onset_bound + 2 * lambda_K + WINDOW_SLACK
    if len(seq) < need:
        raise DomainError(f"window too short: {len(seq)} < {need}")
    arr = np.asarray(seq)
    for d in divisors(lambda_K):
        match = arr[:-d] == arr[d:]
        if match[onset_bound:].all():
            misses = np.flatnonzero(~match[:onset_bound])
            onset = int(misses[-1]) + 1 if misses.size else 0
            return onset, d
    raise TheoremViolation(
        f"no divisor of lambda={lambda_K} is a period from index {onset_bound}"
    )


def onset_bound_for(K: int, r: int) -> int:
    """R for the Fubini numbers, r - 1 + R for F_r with r > 0."""
    R = max_prime_exponent(K)
    return R if r == 0 else r - 1 + R


def analyze(K: int, r: int = 0) -> PeriodReport:
    """Measure the minimal eventual period and onset of F_r mod K."""
    if K < 2:
        raise DomainError(f"need K >= 2, got {K}")
    if r < 0:
        raise DomainError(f"r must be nonnegative, got {r}")
    lam = carmichael(K)
    R = max_prime_exponent(K)
    bound = onset_bound_for(K, r)
    probe = bound + ONSET_PROBE
    length = probe + 2 * lam + WINDOW_SLACK
    if r == 0:
        seq = fubini_mod_sequence(K, length)
        sequence_id = "fubini"
        onset, period = detect_eventual_period(seq, lam, probe)
    else:
        # Residues start at n = r; detection runs on relative indices.
        seq = fubini_r_mod_sequence(K, r, r + length)
        sequence_id = f"fubini_r({r})"
        onset, period = detect_eventual_period(seq, lam, probe - r)
        onset += r
    if r == 0 and K % 2 == 1 and period != lam:
        raise TheoremViolation(f"odd K={K}: period {period} != lambda(K) = {lam}")
    return PeriodReport(
        modulus=K,
        sequence_id=sequence_id,
        onset=onset,
        period=period,
        carmichael=lam,
        max_exponent=R,
        onset_bound=bound,
        period_divides_carmichael=lam % period == 0,
        onset_within_bound=onset <= bound,
    )

"""Exit criteria for the package, one test per criterion.

Each test reports a PASS/FAIL line (shown in the terminal summary) with the
elapsed time against the criterion's time budget.  Caches are cleared first so
the timings reflect a cold start.
"""
import time
from contextlib import contextmanager
from math import factorial

import pytest

from horsenum import oracle
from horsenum.number_theory import carmichael, max_prime_exponent, verify_exponent_properties
from horsenum.periodicity import analyze, fubini_mod_sequence
from horsenum.sequences import (
    factorials,
    fubini,
    fubini_alternating,
    fubini_r,
    horse_r,
    transform_strong_to_weak,
)
from horsenum.stirling import FIRST_SIGNED, SECOND, TriangularMatrix, matrix_product, stirling_matrix, stirling_second_row


def _cold():
    for fn in (oracle._rigging_profile, oracle._lemma_profile, oracle._cycle_histogram,
               oracle._block_histogram, stirling_second_row):
        fn.cache_clear()


@contextmanager
def criterion(log, number, title, budget):
    _cold()
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - start
        status = "PASS" if elapsed < budget else "FAIL (over time budget)"
        assert elapsed < budget, f"took {elapsed:.2f}s, budget {budget}s"
    finally:
        elapsed = time.perf_counter() - start
        log.append(f"[{status}] {number:>2}. {title} ({elapsed:.2f}s / {budget}s)")


def test_01_fubini_matches_enumeration(acceptance_log):
    with criterion(acceptance_log, 1, "F(n) equals ordered set partition count, n <= 8", 10):
        F = fubini(9)
        for n in range(9):
            assert F[n] == oracle.count_weak_orderings(n), n


def test_02_rigged_match_enumeration(acceptance_log):
    with criterion(acceptance_log, 2, "F_r and H_r equal rigged enumeration, r <= n <= 7; r! H_r = F_r", 10):
        for n in range(8):
            for r in range(n + 1):
                Fr, Hr = fubini_r(n, r), horse_r(n, r)
                assert Fr == oracle.count_rigged(n, r, oracle.RELATIVE_STRONG), (n, r)
                assert Hr == oracle.count_rigged(n, r, oracle.PRESCRIBED), (n, r)
                assert factorial(r) * Hr == Fr, (n, r)


def test_03_three_fubini_paths(acceptance_log):
    with criterion(acceptance_log, 3, "S-hat.f, alternating and binomial recurrences agree, n <= 120", 5):
        N = 121
        via_matrix = transform_strong_to_weak(factorials(N), N).values
        alternating = fubini_alternating(N).values
        binomial = oracle.fubini_by_binomial_recurrence(N)
        assert via_matrix == alternating == binomial


def test_04_stirling_inverse_pair(acceptance_log):
    with criterion(acceptance_log, 4, "s-hat(30) S-hat(30) = S-hat(30) s-hat(30) = I", 1):
        s_hat, S_hat = stirling_matrix(FIRST_SIGNED, 30), stirling_matrix(SECOND, 30)
        identity = TriangularMatrix.identity(30)
        assert matrix_product(s_hat, S_hat) == identity
        assert matrix_product(S_hat, s_hat) == identity


def test_05_counting_lemma(acceptance_log):
    with criterion(acceptance_log, 5, "G(n+1) - m G(n) counting lemma, m <= n <= 7", 30):
        for n in range(8):
            for m in range(n + 1):
                assert oracle.verify_counting_lemma(n, m), (n, m)


_fubini_reports: dict = {}


def _reports_up_to_200():
    if not _fubini_reports:
        _fubini_reports.update({K: analyze(K, 0) for K in range(2, 201)})
    return _fubini_reports


def test_06_period_upper_bound(acceptance_log):
    _fubini_reports.clear()
    with criterion(acceptance_log, 6, "F mod K: period | lambda(K), onset <= R, K in 2..200", 30):
        for K, rep in _reports_up_to_200().items():
            assert carmichael(K) % rep.period == 0, rep
            assert rep.onset <= max_prime_exponent(K), rep


def test_07_odd_modulus_exact(acceptance_log):
    # Shares the analysis run of criterion 6 when run in the same session.
    with criterion(acceptance_log, 7, "F mod K: period = lambda(K) for odd K in 3..199", 30):
        reports = _reports_up_to_200()
        for K in range(3, 200, 2):
            assert reports[K].period == carmichael(K), reports[K]


def test_08_rigged_period_bound(acceptance_log):
    with criterion(acceptance_log, 8, "F_r mod K: period | lambda(K), onset <= r-1+R, K <= 60, r <= 5", 60):
        for K in range(2, 61):
            for r in range(1, 6):
                rep = analyze(K, r)
                assert carmichael(K) % rep.period == 0, rep
                assert rep.onset <= r - 1 + max_prime_exponent(K), rep


def test_09_residue_path(acceptance_log):
    with criterion(acceptance_log, 9, "residue F(n) mod K equals big-integer F(n) mod K, K <= 30, N = 200", 5):
        F = fubini(200).values
        for K in range(1, 31):
            assert fubini_mod_sequence(K, 200) == [x % K for x in F], K


def test_10_carmichael(acceptance_log):
    with criterion(acceptance_log, 10, "lambda(K) = brute-force group exponent (K <= 500); exponent properties (K <= 2000)", 60):
        for K in range(2, 501):
            assert carmichael(K) == oracle.group_exponent(K), K
        for K in range(2, 2001):
            assert verify_exponent_properties(K), K


def test_11_residue_performance(acceptance_log):
    with criterion(acceptance_log, 11, "fubini_mod_sequence(97, 100000) in under 2 s", 2):
        seq = fubini_mod_sequence(97, 100_000)
    assert len(seq) == 100_000
    assert seq[:200] == [x % 97 for x in fubini(200).values]
    # Beyond the big-integer range, periodicity with lambda(97) = 96 from n = 1 on.
    assert all(seq[n] == seq[n + 96] for n in range(1, 100_000 - 96))


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))

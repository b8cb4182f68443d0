import math

import pytest

from gibonacci.gcdsum import (
    CaseRow,
    Footnote,
    LcmMode,
    Method,
    classify,
    gcd_sum,
    gcd_sum_bruteforce,
    gcd_sum_lcm,
    reduce_seed,
)
from gibonacci.pisano import pisano_period
from gibonacci.sequences import (
    FIBONACCI,
    LUCAS,
    Seed,
    fib,
    seed_invariants,
)

from conftest import naive_gib_terms

SEED_14 = Seed(1, 4)


class TestClosedFormula:
    @pytest.mark.parametrize(
        "seed,k,expected",
        [
            (FIBONACCI, 20, 55),
            (SEED_14, 5, 11),
            (FIBONACCI, 60, 832040),
            (Seed(3, 7), 1, 1),
        ],
    )
    def test_known_values(self, seed, k, expected):
        result = gcd_sum(seed, k)
        assert result.value == expected
        assert result.method is Method.CLOSED_GCD

    def test_coprime_seed_k1_is_always_1(self, grid25):
        for seed in grid25:
            assert gcd_sum(seed, 1).value == 1, seed

    def test_rejects_k0_and_degenerate_seed(self):
        with pytest.raises(ValueError):
            gcd_sum(FIBONACCI, 0)
        with pytest.raises(ValueError):
            gcd_sum(Seed(0, 0), 5)


class TestBruteForce:
    def test_seed_1_4_windows(self):
        result = gcd_sum_bruteforce(SEED_14, 5, num_windows=4)
        assert result.value == math.gcd(math.gcd(55, 88), math.gcd(143, 231)) == 11

    def test_fibonacci_k20_two_windows(self):
        # direct sums: F_1..F_20 = 17710 and F_2..F_21 = 28655, gcd 55
        f = naive_gib_terms(FIBONACCI, 0, 21)
        assert sum(f[i] for i in range(1, 21)) == 17710
        assert sum(f[i] for i in range(2, 22)) == 28655
        assert gcd_sum_bruteforce(FIBONACCI, 20, num_windows=2).value == 55

    def test_consecutive_fibs_coprime(self):
        assert gcd_sum_bruteforce(FIBONACCI, 1, num_windows=10).value == 1

    def test_independent_of_window_count(self, grid25):
        for seed in grid25:
            for k in (1, 2, 5, 12):
                values = {
                    gcd_sum_bruteforce(seed, k, n).value for n in (2, 3, 7, 10)
                }
                assert len(values) == 1, (seed, k)

    def test_rejects_single_window(self):
        with pytest.raises(ValueError):
            gcd_sum_bruteforce(FIBONACCI, 5, num_windows=1)


class TestLcmCharacterization:
    def test_fibonacci_k12(self):
        result = gcd_sum_lcm(FIBONACCI, 12)
        assert result.value == 8 == fib(6)
        assert pisano_period(FIBONACCI, 8) == 12

    def test_seed_1_4_k5(self):
        assert gcd_sum_lcm(SEED_14, 5).value == 11

    def test_bounded_scan_k1(self, grid25):
        for seed in grid25:
            result = gcd_sum_lcm(seed, 1, mode=LcmMode.BOUNDED_SCAN, bound=100)
            assert result.value == 1 and not result.partial, seed

    def test_bounded_scan_partial_flag(self):
        result = gcd_sum_lcm(FIBONACCI, 20, mode=LcmMode.BOUNDED_SCAN, bound=10)
        assert result.partial and result.value < 55
        full = gcd_sum_lcm(FIBONACCI, 20, mode=LcmMode.BOUNDED_SCAN, bound=55)
        assert full.value == 55 and not full.partial

    def test_bounded_scan_allows_noncoprime_seed(self):
        # value scales by the common factor; the scan must see that
        scaled = gcd_sum_lcm(Seed(2, 8), 5, mode=LcmMode.BOUNDED_SCAN, bound=50)
        base = gcd_sum(Seed(1, 4), 5).value
        assert scaled.value == 2 * base

    def test_divisor_verified_needs_coprime_seed(self):
        with pytest.raises(ValueError):
            gcd_sum_lcm(Seed(2, 4), 6)

    def test_agrees_with_closed_formula(self):
        for seed in (FIBONACCI, LUCAS, SEED_14):
            for k in range(1, 25):
                assert gcd_sum_lcm(seed, k).value == gcd_sum(seed, k).value


class TestReduceSeed:
    def test_examples(self):
        r = reduce_seed(Seed(2, 4))
        assert (r.d, r.reduced) == (2, Seed(1, 2))
        r = reduce_seed(FIBONACCI)
        assert (r.d, r.reduced) == (1, FIBONACCI)

    def test_scaling_contract(self):
        r = reduce_seed(Seed(3, 9))
        assert gcd_sum(Seed(3, 9), 6).value == r.d * gcd_sum(r.reduced, 6).value

    def test_scaling_over_factors(self, grid25):
        for seed in grid25[:10]:
            for d in range(1, 6):
                scaled = Seed(d * seed.g0, d * seed.g1)
                for k in (1, 4, 6, 9, 12):
                    assert gcd_sum(scaled, k).value == d * gcd_sum(seed, k).value


class TestClassify:
    def test_fibonacci_k20(self):
        c = classify(FIBONACCI, 20)
        assert c.case_row is CaseRow.ROW_048
        assert c.predicted == 55 == c.actual
        assert c.footnote is Footnote.DELTA_IS_1

    def test_lucas_k12(self):
        c = classify(LUCAS, 12)
        assert c.predicted == 40 == 5 * fib(6)
        assert c.footnote is Footnote.DELTA_IS_5

    def test_fibonacci_k6(self):
        c = classify(FIBONACCI, 6)
        assert c.case_row is CaseRow.ROW_2610
        assert c.predicted == 4 == c.actual

    def test_seed_1_4_k5_table_inapplicable(self):
        c = classify(SEED_14, 5)
        assert c.case_row is CaseRow.ROW_15711
        assert not c.table_applies
        assert c.footnote is Footnote.D_NOT_UNIT
        assert c.actual == 11

    def test_fibonacci_k9(self):
        c = classify(FIBONACCI, 9)
        assert c.case_row is CaseRow.ROW_39
        assert c.predicted == 2 == c.actual

    def test_rejects_noncoprime_seed(self):
        with pytest.raises(ValueError):
            classify(Seed(2, 4), 5)

    def test_predictions_match_over_grid(self, grid25):
        for seed in grid25:
            for k in range(1, 61):
                c = classify(seed, k)
                if c.table_applies:
                    assert c.predicted == c.actual, (seed, k)

    def test_row_048_dichotomy(self, grid25):
        # actual / F_{k/2} is exactly the delta parameter, 1 or 5
        for seed in grid25:
            delta = seed_invariants(seed).delta
            for k in (4, 8, 12, 24, 48):
                c = classify(seed, k)
                half = fib(k // 2)
                assert c.actual % half == 0
                assert c.actual // half == delta, (seed, k)


class TestDivisibilityBiconditional:
    def test_small_grid(self, grid25):
        # period mod m divides k <=> m divides the k-window GCD
        for seed in grid25[:10]:
            values = {k: gcd_sum(seed, k).value for k in range(1, 25)}
            for m in range(2, 31):
                p = pisano_period(seed, m)
                for k, v in values.items():
                    assert (k % p == 0) == (v % m == 0), (seed, m, k)

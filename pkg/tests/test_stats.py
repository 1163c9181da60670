import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from queryrefine.stats import paired_t_test, reg_inc_beta, summarize, t_cdf

TABLE_BASELINE = [0.16888, 0.20048, 0.18041, 0.45991, 0.34464]
TABLE_REFINED = [0.24619, 0.29034, 0.43898, 0.50654, 0.42653]


def cauchy_cdf(t):
    # Closed form for df=1
    return 0.5 + math.atan(t) / math.pi


def df2_cdf(t):
    # Closed form for df=2
    return 0.5 + t / (2 * math.sqrt(2) * math.sqrt(1 + t * t / 2))


class TestRegIncBeta:
    def test_boundaries(self):
        assert reg_inc_beta(2.5, 1.5, 0.0) == 0.0
        assert reg_inc_beta(2.5, 1.5, 1.0) == 1.0

    def test_uniform(self):
        assert reg_inc_beta(1, 1, 0.5) == pytest.approx(0.5, abs=1e-10)

    def test_integer_polynomial_expansion(self):
        # I_x(2,3) = 1 - (1-x)^3 (1+3x) for integer parameters
        assert reg_inc_beta(2, 3, 0.25) == pytest.approx(0.26171875, abs=1e-10)

    def test_symmetry_identity(self):
        for a, b, x in [(2.0, 3.5, 0.3), (0.5, 0.5, 0.7), (4.0, 1.0, 0.9)]:
            assert reg_inc_beta(a, b, x) == pytest.approx(
                1.0 - reg_inc_beta(b, a, 1.0 - x), abs=1e-10
            )

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            reg_inc_beta(2, 3, 1.5)
        with pytest.raises(ValueError):
            reg_inc_beta(0, 3, 0.5)


class TestTCdf:
    def test_at_zero(self):
        for df in (1, 2, 5, 30):
            assert t_cdf(0.0, df) == 0.5

    def test_cauchy_point(self):
        assert t_cdf(1.0, 1) == pytest.approx(0.75, abs=1e-12)

    def test_published_p_value_point(self):
        assert t_cdf(2.9444, 4) == pytest.approx(1 - 0.0422 / 2, abs=0.0003)

    def test_df1_closed_form_grid(self):
        t = -10.0
        while t <= 10.0:
            assert t_cdf(t, 1) == pytest.approx(cauchy_cdf(t), abs=1e-9)
            t += 0.01

    def test_df2_closed_form_grid(self):
        t = -10.0
        while t <= 10.0:
            assert t_cdf(t, 2) == pytest.approx(df2_cdf(t), abs=1e-9)
            t += 0.01

    @given(st.floats(-50, 50), st.integers(1, 100))
    def test_antisymmetry(self, t, df):
        assert t_cdf(-t, df) == pytest.approx(1.0 - t_cdf(t, df), abs=1e-12)

    def test_monotone_in_t(self):
        for df in (1, 3, 10):
            grid = [t_cdf(-5 + i * 0.25, df) for i in range(41)]
            assert all(a < b for a, b in zip(grid, grid[1:]))

    def test_invalid_df(self):
        with pytest.raises(ValueError):
            t_cdf(1.0, 0)


class TestPairedTTest:
    def test_published_table(self):
        result = paired_t_test(TABLE_BASELINE, TABLE_REFINED)
        assert result.t_stat == pytest.approx(-2.9444, abs=0.0005)
        assert result.p_two_tailed == pytest.approx(0.0422, abs=0.0005)
        assert result.df == 4

    def test_result_invariants(self):
        result = paired_t_test(TABLE_BASELINE, TABLE_REFINED)
        n = len(TABLE_BASELINE)
        assert result.t_stat == pytest.approx(
            result.mean_diff / (result.sd_diff / math.sqrt(n)), abs=1e-12
        )
        assert result.p_two_tailed == pytest.approx(
            2 * (1 - t_cdf(abs(result.t_stat), result.df)), abs=1e-9
        )

    def test_degenerate_zero_variance(self):
        with pytest.raises(ValueError, match="degenerate"):
            paired_t_test([1.0, 2.0, 3.0], [1.0, 2.0, 3.0])

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            paired_t_test([1.0, 2.0], [1.0])

    def test_too_few_pairs(self):
        with pytest.raises(ValueError):
            paired_t_test([1.0], [2.0])

    def test_hand_computed_df2_case(self):
        # diffs (-1, 0, -2): mean -1, sample SD 1, t = -sqrt(3)
        result = paired_t_test([1, 2, 3], [2, 2, 5])
        assert result.mean_diff == pytest.approx(-1.0, abs=1e-12)
        assert result.sd_diff == pytest.approx(1.0, abs=1e-12)
        assert result.t_stat == pytest.approx(-math.sqrt(3), abs=1e-12)
        assert result.df == 2
        expected_p = 2 * (1 - df2_cdf(math.sqrt(3)))
        assert result.p_two_tailed == pytest.approx(expected_p, abs=1e-9)
        assert result.p_two_tailed == pytest.approx(0.2254033, abs=1e-6)

    def test_swap_negates_t_and_keeps_p(self):
        forward = paired_t_test(TABLE_BASELINE, TABLE_REFINED)
        backward = paired_t_test(TABLE_REFINED, TABLE_BASELINE)
        assert backward.t_stat == -forward.t_stat
        assert backward.p_two_tailed == forward.p_two_tailed

    @given(st.floats(-5, 5))
    def test_shift_invariance(self, shift):
        shifted = paired_t_test(
            [b + shift for b in TABLE_BASELINE], [r + shift for r in TABLE_REFINED]
        )
        original = paired_t_test(TABLE_BASELINE, TABLE_REFINED)
        assert shifted.t_stat == pytest.approx(original.t_stat, rel=1e-9)


class TestSummarize:
    def test_single_value(self):
        summary = summarize([0.5])
        assert summary.mean == 0.5
        assert summary.sd is None
        assert summary.min == summary.max == 0.5

    def test_published_column_means(self):
        assert summarize(TABLE_BASELINE).mean == pytest.approx(0.270864, abs=1e-6)
        assert summarize(TABLE_REFINED).mean == pytest.approx(0.381716, abs=1e-6)

    def test_empty(self):
        with pytest.raises(ValueError):
            summarize([])

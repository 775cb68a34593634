import math
from fractions import Fraction as F

import pytest

from tmdesign import (
    Configuration,
    DomainError,
    PreconditionError,
    add_zero,
    base_roots,
    binom_alternating_sum,
    binomial_weighted_design,
    chebyshev_gauss_check,
    chebyshev_gauss_nodes,
    choose_epsilon,
    evaluate,
    is_symmetric,
    pad_with_antipodal_pairs,
    perturbed_interval_design,
    polygon_weighted_design,
    verify_interval_design,
    verify_weighted_design,
)


class TestBaseRoots:
    @pytest.mark.parametrize(
        "m,expected",
        [
            (1, [F(-1, 2), F(1, 2)]),
            (2, [F(-3, 4), F(-1, 4), F(1, 4), F(3, 4)]),
            (3, [F(-5, 6), F(-1, 2), F(-1, 6), F(1, 6), F(1, 2), F(5, 6)]),
        ],
    )
    def test_instances(self, m, expected):
        assert base_roots(m) == expected

    def test_invalid_m(self):
        with pytest.raises(DomainError):
            base_roots(0)


class TestChooseEpsilon:
    def test_valid_start_returned_unchanged(self):
        # x^2 - 1/4 + 3/16 = x^2 - 1/16 has roots +-1/4 inside (-1/2, 1/2)
        assert choose_epsilon(1, F(3, 16)) == F(3, 16)

    def test_halving_past_invalid_values(self):
        # 1/2 gives x^2 + 1/4 (no real roots), 1/4 gives x^2 (double root),
        # 1/8 gives x^2 - 1/8 with roots inside the window
        assert choose_epsilon(1, F(1, 2)) == F(1, 8)

    def test_m_two_skips_double_root(self):
        # at 1/16 the quartic becomes (x^2 - 5/16)^2; the next halving works.
        # Oracle for 1/32: x^2 = (5/8 +- sqrt(1/8))/2 gives |x| of about
        # 0.6995 and 0.3684, all four inside (-3/4, 3/4).
        hi = math.sqrt((0.625 + math.sqrt(0.125)) / 2)
        assert hi < 0.75
        assert choose_epsilon(2) == F(1, 32)

    def test_window_point_never_a_root(self):
        for m in (1, 2, 3):
            eps = choose_epsilon(m)
            from tmdesign import monic_from_roots

            g = monic_from_roots(base_roots(m)).plus_constant(eps)
            assert evaluate(g, F(1, 2 * m)) == eps


class TestPerturbedIntervalDesign:
    def test_m1_explicit_epsilon(self):
        result = perturbed_interval_design(1, F(3, 16))
        assert result.epsilon == F(3, 16)
        assert result.certificate == (0,)
        approx = [float(x) for x in result.points.points]
        assert approx[-1] == 1.0
        assert abs(approx[0] + 0.75) < 1e-11
        assert abs(approx[1] + 0.25) < 1e-11

    def test_first_residual_cancels_for_any_valid_epsilon(self):
        # (r - 1/2) + (-r - 1/2) + 1 = 0 independently of the roots
        for eps in (F(3, 16), F(1, 8), F(1, 64)):
            result = perturbed_interval_design(1, eps)
            assert result.certificate == (0,)

    def test_m2_shape_and_certificate(self):
        result = perturbed_interval_design(2)
        assert len(result.points.points) == 5
        assert result.certificate == (0, 0)
        assert F(1) in result.points.points
        assert F(-1) not in result.points.points
        assert not is_symmetric(result.points)[0]

    def test_float_verification_matches_certificate(self):
        precision = F(1, 10**12)
        for m in (1, 2, 3, 4):
            result = perturbed_interval_design(m, precision=precision)
            pts = [float(x) for x in result.points.points]
            for k in range(1, m + 1):
                residual = sum(x ** (2 * k - 1) for x in pts)
                assert abs(residual) <= 10 * float(precision)

    def test_verifies_as_interval_design(self):
        result = perturbed_interval_design(3)
        assert verify_interval_design(result.points, 3).verdict

    def test_invalid_epsilon_rejected(self):
        with pytest.raises(DomainError):
            perturbed_interval_design(1, F(1, 2))
        with pytest.raises(DomainError):
            perturbed_interval_design(1, F(-1, 16))

    def test_points_respect_interval_bounds(self):
        result = perturbed_interval_design(2)
        assert all(-1 < x <= 1 for x in result.points.points)


class TestPolygonWeightedDesign:
    def test_smallest_case(self):
        w = polygon_weighted_design(1)
        # cos(2*pi/3) = -1/2 with weight 2, plus 1 with weight 1
        assert abs(w.support[0] + 0.5) < 1e-15
        assert w.support[1] == 1.0
        assert w.weights == (2.0, 1.0)
        residual = 2 * w.support[0] + 1
        assert abs(residual) < 1e-15

    def test_pentagon_case_closed_forms(self):
        w = polygon_weighted_design(2)
        assert abs(w.support[0] - (math.sqrt(5) - 1) / 4) < 1e-15
        assert abs(w.support[1] + (math.sqrt(5) + 1) / 4) < 1e-15
        report = verify_weighted_design(w, 1)
        assert report.verdict
        assert abs(float(report.residuals[0])) <= 1e-15

    @pytest.mark.parametrize("n", [2, 3, 5, 8, 12, 20])
    def test_residuals_through_design_index(self, n):
        w = polygon_weighted_design(n)
        report = verify_weighted_design(w, n - 1)
        assert report.verdict
        assert all(abs(float(r)) <= 1e-12 for r in report.residuals)

    def test_support_size_exceeds_evenness_bound_by_one(self):
        # n+1 support points and index set T_n: one more than forces evenness
        n = 4
        w = polygon_weighted_design(n)
        assert len(w.support) == n + 1
        assert verify_weighted_design(w, n).verdict
        assert not is_symmetric(w)[0]


class TestBinomAlternatingSum:
    @pytest.mark.parametrize(
        "n,s,expected",
        [(2, 0, -3), (2, 1, 0), (3, 0, -10), (3, 1, 0), (3, 2, 0), (5, 0, -126)],
    )
    def test_closed_form_instances(self, n, s, expected):
        assert binom_alternating_sum(n, s) == expected

    def test_hypothesis_bound(self):
        with pytest.raises(PreconditionError):
            binom_alternating_sum(3, 3)

    def test_full_range(self):
        for n in range(1, 51):
            for s in range(n):
                expected = -math.comb(2 * n - 1, n - 1) if s == 0 else 0
                assert binom_alternating_sum(n, s) == expected


class TestBinomialWeightedDesign:
    def test_n2_instance(self):
        w = binomial_weighted_design(2)
        assert w.support == (F(2, 3), F(-1, 3))
        assert w.weights == (2, 4)
        assert verify_weighted_design(w, 1).residuals == (0,)

    def test_n3_instance(self):
        w = binomial_weighted_design(3)
        assert w.support == (F(1, 2), F(-1, 4), F(-3, 4))
        assert w.weights == (12, 15, 3)
        report = verify_weighted_design(w, 2)
        assert report.residuals == (0, 0)

    def test_n4_instance(self):
        w = binomial_weighted_design(4)
        assert len(w.support) == 4
        assert verify_weighted_design(w, 3).residuals == (0, 0, 0)

    @pytest.mark.parametrize("n", [2, 3, 5, 9, 16])
    def test_design_is_sharp(self, n):
        w = binomial_weighted_design(n)
        assert verify_weighted_design(w, n - 1).verdict
        report = verify_weighted_design(w, n)
        assert not report.verdict
        assert report.residuals[n - 1] != 0


class TestPadding:
    def test_pad_keeps_residuals(self):
        config = Configuration((F(1),))
        padded = pad_with_antipodal_pairs(config, [F(1, 2)])
        assert padded.points == (F(1), F(1, 2), F(-1, 2))
        assert verify_interval_design(padded, 1).residuals == (1,)

    def test_pad_perturbed_design(self):
        result = perturbed_interval_design(1)
        padded = pad_with_antipodal_pairs(result.points, [F(1, 3)])
        assert len(padded.points) == 5
        assert verify_interval_design(padded, 1).verdict

    def test_pad_zero_base(self):
        padded = pad_with_antipodal_pairs(Configuration((F(0),)), [F(1, 2), F(1, 4)])
        assert len(padded.points) == 5
        assert is_symmetric(padded)[0]

    def test_pad_rejects_out_of_range(self):
        with pytest.raises(DomainError):
            pad_with_antipodal_pairs(Configuration((F(0),)), [F(1)])

    def test_add_zero(self):
        config = Configuration((F(-3, 4), F(-1, 4), F(1)))
        bigger = add_zero(config)
        assert bigger.points == (F(-3, 4), F(-1, 4), F(1), F(0))
        assert verify_interval_design(bigger, 1).verdict
        assert not is_symmetric(bigger)[0]
        # multiset semantics: repeated zeros allowed
        assert add_zero(add_zero(config)).points.count(F(0)) == 2

    def test_exact_residual_invariance(self):
        base = Configuration((F(1), F(2, 3)))
        before = verify_interval_design(base, 2).residuals
        after = verify_interval_design(
            pad_with_antipodal_pairs(base, [F(1, 5), F(2, 7)]), 2
        ).residuals
        assert before == after


class TestChebyshevGauss:
    def test_n2_nodes_and_checks(self):
        report = chebyshev_gauss_check(2, 3)
        assert abs(report.nodes[0] - math.sqrt(2) / 2) < 1e-15
        assert report.nodes[1] == -report.nodes[0]
        by_s = {e.s: e for e in report.entries}
        assert by_s[1].node_mean == 0.0
        assert by_s[3].node_mean == 0.0
        assert by_s[2].target == F(1, 2)
        assert by_s[2].error <= 1e-15
        assert report.verdict

    def test_n1_single_zero_node(self):
        report = chebyshev_gauss_check(1, 1)
        assert report.nodes == (0.0,)
        assert report.entries[0].node_mean == 0.0

    def test_odd_moments_exactly_zero(self):
        for n in range(1, 11):
            report = chebyshev_gauss_check(n, 2 * n - 1)
            for e in report.entries:
                if e.s % 2 == 1:
                    assert e.node_mean == 0.0

    def test_degree_cap(self):
        with pytest.raises(DomainError, match="degree"):
            chebyshev_gauss_check(2, 4)

    def test_variant_nodes_flagged(self):
        report = chebyshev_gauss_check(2, 3)
        assert abs(report.variant_degree_one_mean + 0.5) < 1e-15
        assert not report.variant_degree_one_ok

    def test_node_mirror_symmetry(self):
        for n in (3, 4, 7, 10):
            nodes = chebyshev_gauss_nodes(n)
            assert all(nodes[k] == -nodes[n - 1 - k] for k in range(n))

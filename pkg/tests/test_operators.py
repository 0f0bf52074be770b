"""Operator core: basis, nodes, both operator variants, moments.

The heavyweight check here is the exact-rational cross-validation: the
production evaluation (regrouped in t = q/p) must reproduce a literal
term-by-term evaluation of the defining formulas carried out in Fraction
arithmetic on the identical double inputs.
"""

import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pqbernstein import (
    MAX_DEGREE,
    OperatorSpec,
    PQParams,
    TargetFunction,
    apply_operator,
    apply_operator_original,
    basis,
    builtin_function,
    moment_closed_form,
    nodes,
    operator_curve,
    pq_integer,
    second_moment_identity_check,
)

import oracles

ONE = builtin_function("monomial_0")
IDENT = builtin_function("monomial_1")
SQUARE = builtin_function("monomial_2")


def spec_strategy(n_max=50, p_min=0.1, ratio_max=0.995):
    return st.builds(
        lambda n, p, r: OperatorSpec(n, PQParams(p, r * p)),
        st.integers(min_value=1, max_value=n_max),
        st.floats(min_value=p_min, max_value=1.0),
        st.floats(min_value=0.05, max_value=ratio_max),
    )


class TestSpecValidation:
    def test_degree_bounds(self):
        params = PQParams(0.9, 0.8)
        OperatorSpec(1, params)
        OperatorSpec(MAX_DEGREE, params)
        with pytest.raises(ValueError):
            OperatorSpec(0, params)
        with pytest.raises(ValueError):
            OperatorSpec(MAX_DEGREE + 1, params)

    def test_x_outside_interval_rejected(self):
        spec = OperatorSpec(3, PQParams(0.9, 0.8))
        with pytest.raises(ValueError):
            basis(spec, -0.01)
        with pytest.raises(ValueError):
            apply_operator(spec, ONE, 1.01)


class TestBasis:
    def test_collapses_at_zero(self):
        spec = OperatorSpec(3, PQParams(0.85, 0.55))
        vals = basis(spec, 0.0).values
        assert list(vals) == [1.0, 0.0, 0.0, 0.0]

    def test_collapses_at_one(self):
        spec = OperatorSpec(3, PQParams(0.85, 0.55))
        vals = basis(spec, 1.0).values
        assert list(vals) == [0.0, 0.0, 0.0, 1.0]

    def test_frozen_entries_n2(self):
        # exact rational evaluation of the defining terms at double inputs
        vals = basis(OperatorSpec(2, PQParams(0.9, 0.6)), 0.5).values
        expected = (0.33333333333333337, 0.41666666666666663, 0.25)
        assert vals == pytest.approx(expected, abs=1e-15)

    def test_degree_one_is_parameter_free(self):
        # n = 1: basis is (1-x, x) whatever (p, q) are
        for p, q in ((0.3, 0.1), (0.99, 0.5)):
            vals = basis(OperatorSpec(1, PQParams(p, q)), 0.375).values
            assert vals == pytest.approx((0.625, 0.375), abs=0.0)

    @settings(max_examples=300, deadline=None)
    @given(spec_strategy(), st.floats(min_value=0.0, max_value=1.0))
    def test_partition_of_unity_and_positivity(self, spec, x):
        vals = basis(spec, x).values
        assert np.all(vals >= 0.0)
        assert abs(math.fsum(vals.tolist()) - 1.0) <= 1e-12

    def test_partition_at_degree_cap(self):
        for p, ratio in ((1.0, 0.999), (0.5, 0.9), (0.2, 0.5)):
            spec = OperatorSpec(MAX_DEGREE, PQParams(p, ratio * p))
            for x in (0.05, 0.5, 0.95):
                vals = basis(spec, x).values
                assert abs(math.fsum(vals.tolist()) - 1.0) <= 1e-12
                assert np.all(vals >= 0.0)

    def test_matches_exact_rational_terms(self):
        rng = random.Random(2024)
        for _ in range(25):
            n = rng.randint(1, 12)
            p = rng.uniform(0.2, 1.0)
            q = rng.uniform(0.1, 0.99) * p
            x = rng.random()
            exact = oracles.basis_terms_revised(n, Fraction(p), Fraction(q), Fraction(x))
            vals = basis(OperatorSpec(n, PQParams(p, q)), x).values
            for k in range(n + 1):
                assert abs(vals[k] - float(exact[k])) <= 1e-13

    def test_values_are_read_only(self):
        vals = basis(OperatorSpec(4, PQParams(0.9, 0.7)), 0.3).values
        with pytest.raises(ValueError):
            vals[0] = 2.0


class TestNodes:
    def test_endpoints(self):
        for n, p, q in ((1, 0.9, 0.5), (7, 0.6, 0.3), (40, 0.99, 0.98)):
            vals = nodes(OperatorSpec(n, PQParams(p, q))).values
            assert vals[0] == 0.0
            assert vals[-1] == 1.0

    def test_interior_value_n2(self):
        vals = nodes(OperatorSpec(2, PQParams(0.9, 0.5))).values
        assert vals[1] == pytest.approx(9.0 / 14.0, abs=1e-15)

    def test_strictly_increasing_on_lattice(self):
        for n in (1, 2, 5, 10, 25, 50):
            for p in (0.6, 0.8, 0.95, 0.999):
                for ratio in (0.5, 0.9, 0.99):
                    vals = nodes(OperatorSpec(n, PQParams(p, ratio * p))).values
                    assert np.all(np.diff(vals) > 0.0)

    @settings(max_examples=150, deadline=None)
    @given(spec_strategy(n_max=60, p_min=0.3))
    def test_gap_formula(self, spec):
        """Consecutive node gap equals p^{n-k-1} q^k / [n]."""
        vals = nodes(spec).values
        n, p, q = spec.n, spec.params.p, spec.params.q
        bn = pq_integer(n, spec.params)
        for k in range(n):
            expected = p ** (n - k - 1) * q**k / bn
            assert abs((vals[k + 1] - vals[k]) - expected) <= 1e-13

    def test_matches_exact_rational(self):
        for n, p, q in ((5, 0.7, 0.3), (9, 0.95, 0.9)):
            exact = oracles.nodes_revised(n, Fraction(p), Fraction(q))
            vals = nodes(OperatorSpec(n, PQParams(p, q))).values
            for k in range(n + 1):
                assert abs(vals[k] - float(exact[k])) <= 1e-14


class TestTargetFunctions:
    def test_polynomial_horner_matches_polyval(self):
        coeffs = (0.5, -1.25, 0.0, 2.0)
        f = TargetFunction.polynomial(coeffs)
        for x in np.linspace(0, 1, 17):
            assert f(x) == pytest.approx(
                float(np.polyval(coeffs[::-1], x)), rel=1e-14, abs=1e-14
            )

    def test_cubic_roots_vanishes_at_roots(self):
        f = builtin_function("cubic_roots")
        for r in (1.0 / 3.0, 0.5, 0.75):
            assert f(r) == pytest.approx(0.0, abs=1e-17)

    def test_unknown_name_lists_known(self):
        with pytest.raises(ValueError, match="monomial_1"):
            builtin_function("does_not_exist")

    def test_empty_polynomial_rejected(self):
        with pytest.raises(ValueError):
            TargetFunction.polynomial(())


class TestOperator:
    def test_reproduces_constants(self):
        spec = OperatorSpec(17, PQParams(0.93, 0.67))
        assert abs(apply_operator(spec, ONE, 0.37) - 1.0) <= 1e-12

    def test_reproduces_identity(self):
        spec = OperatorSpec(17, PQParams(0.93, 0.67))
        assert abs(apply_operator(spec, IDENT, 0.37) - 0.37) <= 1e-12

    def test_second_moment_spot_value(self):
        spec = OperatorSpec(2, PQParams(0.9, 0.6))
        assert apply_operator(spec, SQUARE, 0.5) == pytest.approx(0.4, abs=1e-15)

    @settings(max_examples=200, deadline=None)
    @given(spec_strategy(n_max=100), st.sampled_from([0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 1.0]))
    def test_moments_match_closed_form(self, spec, x):
        for m in range(3):
            mono = builtin_function(f"monomial_{m}")
            got = apply_operator(spec, mono, x)
            want = moment_closed_form(spec, m, x)
            assert abs(got - want) <= 1e-11

    def test_moment_order_validated(self):
        spec = OperatorSpec(4, PQParams(0.9, 0.7))
        with pytest.raises(ValueError):
            moment_closed_form(spec, 3, 0.5)

    def test_second_moment_closed_form_values(self):
        spec = OperatorSpec(2, PQParams(0.9, 0.6))
        assert moment_closed_form(spec, 0, 0.8) == 1.0
        assert moment_closed_form(spec, 2, 0.0) == 0.0
        assert moment_closed_form(spec, 2, 0.5) == pytest.approx(0.4, abs=1e-15)

    def test_endpoint_interpolation(self):
        f = builtin_function("exp")
        for n, p, ratio in ((1, 0.5, 0.5), (10, 0.95, 0.9), (150, 0.999, 0.99)):
            spec = OperatorSpec(n, PQParams(p, ratio * p))
            assert abs(apply_operator(spec, f, 0.0) - f(0.0)) <= 1e-13
            assert abs(apply_operator(spec, f, 1.0) - f(1.0)) <= 1e-13

    def test_linearity(self):
        rng = random.Random(99)
        spec = OperatorSpec(12, PQParams(0.9, 0.75))
        for _ in range(20):
            c = [rng.uniform(-2, 2) for _ in range(4)]
            d = [rng.uniform(-2, 2) for _ in range(4)]
            alpha, beta = rng.uniform(-3, 3), rng.uniform(-3, 3)
            f = TargetFunction.polynomial(c)
            g = TargetFunction.polynomial(d)
            combo = TargetFunction.polynomial(
                [alpha * ci + beta * di for ci, di in zip(c, d)]
            )
            x = rng.random()
            lhs = apply_operator(spec, combo, x)
            rhs = alpha * apply_operator(spec, f, x) + beta * apply_operator(spec, g, x)
            assert abs(lhs - rhs) <= 1e-12

    def test_positive_operator_preserves_order(self):
        """If f >= g on the nodes then B(f) >= B(g) - 1e-12 everywhere."""
        rng = random.Random(5)
        for _ in range(10):
            n = rng.randint(2, 30)
            p = rng.uniform(0.5, 1.0)
            spec = OperatorSpec(n, PQParams(p, rng.uniform(0.2, 0.95) * p))
            g = TargetFunction.polynomial([rng.uniform(-1, 1) for _ in range(3)])
            shift = rng.uniform(0.0, 0.5)
            f = TargetFunction.polynomial(
                [g.coefficients[0] + shift, *g.coefficients[1:]]
            )
            node_vals = nodes(spec).values
            assert all(f(t) >= g(t) for t in node_vals)
            for x in np.linspace(0, 1, 21):
                assert apply_operator(spec, f, x) >= apply_operator(spec, g, x) - 1e-12

    def test_matches_exact_rational_on_cubic(self):
        rng = random.Random(31)
        coeffs = (-0.125, 19.0 / 24.0, -19.0 / 12.0, 1.0)  # the roots-at-thirds cubic
        f = TargetFunction.polynomial(coeffs)
        f_exact = oracles.poly_exact(coeffs)
        for _ in range(15):
            n = rng.randint(1, 10)
            p = rng.uniform(0.3, 1.0)
            q = rng.uniform(0.2, 0.98) * p
            x = rng.random()
            want = oracles.apply_revised_exact(n, Fraction(p), Fraction(q), Fraction(x), f_exact)
            got = apply_operator(OperatorSpec(n, PQParams(p, q)), f, x)
            assert abs(got - float(want)) <= 1e-13

    def test_reduces_to_q_bernstein_at_p_one(self):
        rng = random.Random(17)
        f = builtin_function("cubic_roots")
        for _ in range(50):
            n = rng.randint(1, 30)
            q = rng.uniform(0.1, 0.98)
            x = rng.random()
            spec = OperatorSpec(n, PQParams(1.0, q))
            assert abs(
                apply_operator(spec, f, x) - oracles.q_bernstein(n, q, f, x)
            ) <= 1e-12

    def test_curve_matches_pointwise_application(self):
        spec = OperatorSpec(9, PQParams(0.92, 0.8))
        f = builtin_function("sin_pi")
        xs = np.linspace(0, 1, 13)
        curve = operator_curve(spec, f, xs)
        for x, v in zip(xs, curve):
            assert v == apply_operator(spec, f, float(x))


class TestOriginalOperator:
    def test_defect_at_zero(self):
        """Uncorrected operator applied to 1 at x=0 returns p^{n(n-1)/2}."""
        spec = OperatorSpec(2, PQParams(0.5, 0.25))
        assert apply_operator_original(spec, ONE, 0.0) == 0.5

    def test_no_defect_at_p_one(self):
        for q in (0.3, 0.8):
            spec = OperatorSpec(6, PQParams(1.0, q))
            for x in np.linspace(0, 1, 11):
                assert abs(apply_operator_original(spec, ONE, float(x)) - 1.0) <= 1e-12

    def test_exact_at_one(self):
        spec = OperatorSpec(3, PQParams(0.8, 0.5))
        assert apply_operator_original(spec, ONE, 1.0) == 1.0

    def test_defect_floor_on_lattice(self):
        """For p < 1 the partition failure is macroscopic: grid max of
        |B(1;x) - 1| clears 0.01 (1 - p)."""
        xs = np.linspace(0, 1, 101)
        for p in (0.5, 0.7, 0.9):
            for n in (2, 5, 10):
                spec = OperatorSpec(n, PQParams(p, 0.5 * p))
                dev = np.max(np.abs(operator_curve(spec, ONE, xs, original=True) - 1.0))
                assert dev > 0.01 * (1.0 - p)

    def test_matches_exact_rational(self):
        rng = random.Random(13)
        f_exact = oracles.poly_exact((0.0, 0.0, 1.0))
        for _ in range(15):
            n = rng.randint(1, 9)
            p = rng.uniform(0.4, 1.0)
            q = rng.uniform(0.2, 0.95) * p
            x = rng.random()
            want = oracles.apply_original_exact(n, Fraction(p), Fraction(q), Fraction(x), f_exact)
            got = apply_operator_original(OperatorSpec(n, PQParams(p, q)), SQUARE, x)
            assert abs(got - float(want)) <= 1e-13


class TestBracketIdentity:
    def test_exact_at_degree_one(self):
        assert second_moment_identity_check(OperatorSpec(1, PQParams(0.9, 0.2))) == 0.0

    def test_small_and_large_degree(self):
        spec3 = OperatorSpec(3, PQParams(0.9, 0.8))
        assert second_moment_identity_check(spec3) <= 1e-13 * pq_integer(3, spec3.params)
        spec50 = OperatorSpec(50, PQParams(0.99, 0.98))
        assert second_moment_identity_check(spec50) <= 1e-13 * pq_integer(50, spec50.params)

    @settings(max_examples=200, deadline=None)
    @given(spec_strategy(n_max=200, p_min=0.2))
    def test_residual_property(self, spec):
        assert second_moment_identity_check(spec) <= 1e-13 * pq_integer(
            spec.n, spec.params
        )

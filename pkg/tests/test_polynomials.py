"""Polynomials and Laurent expansions, including the inversion oracle."""

import random
from fractions import Fraction

import pytest

from fuchsian.polynomials import LaurentSeries, Polynomial, Z, laurent_expand
from fuchsian.scalars import ZERO, GaussianRational


def gr(re, im=0):
    return GaussianRational(Fraction(re), Fraction(im))


PSI_01 = Polynomial((0, -1, 1))  # z^2 - z


def test_eval_psi():
    assert PSI_01(2) == gr(2)


def test_eval_zero_polynomial():
    assert Polynomial.zero()(gr(7, 3)) == ZERO


def test_eval_g_of_example_a():
    g = Polynomial((-4, 4))
    assert g(1) == ZERO


def test_degree_markers():
    assert Polynomial.zero().degree == float("-inf")
    assert Polynomial((5,)).degree == 0
    assert Polynomial((0, 0, 1, 0, 0)).degree == 2  # trailing zeros trimmed
    assert Polynomial((0, 0, 1, 0, 0)).coeffs == (ZERO, ZERO, gr(1))


def test_derivative_examples():
    assert PSI_01.derivative() == Polynomial((-1, 2))
    assert Polynomial((3,)).derivative() == Polynomial.zero()
    assert Polynomial((0, 0, 0, 0, 1)).derivative(2) == Polynomial((0, 0, 12))
    with pytest.raises(ValueError):
        PSI_01.derivative(0)


def test_from_roots_examples():
    assert Polynomial.from_roots([0, 1]) == PSI_01
    assert Polynomial.from_roots([]) == Polynomial((1,))
    assert Polynomial.from_roots([0, 1, 2]) == Polynomial((0, 2, -3, 1))


def _random_poly(rng, max_degree=8):
    degree = rng.randint(0, max_degree)
    return Polynomial(
        [
            GaussianRational(
                Fraction(rng.randint(-5, 5), rng.randint(1, 3)),
                Fraction(rng.randint(-5, 5), rng.randint(1, 3)),
            )
            for _ in range(degree + 1)
        ]
    )


def test_from_roots_vanishes_at_roots():
    rng = random.Random(7)
    for _ in range(40):
        roots = [gr(rng.randint(-5, 5), rng.randint(-2, 2)) for _ in range(rng.randint(0, 6))]
        p = Polynomial.from_roots(roots)
        assert p.degree == len(roots)
        for r in roots:
            assert p(r) == ZERO


def test_derivative_linearity_and_product_rule():
    rng = random.Random(11)
    for _ in range(40):
        p, q = _random_poly(rng, 6), _random_poly(rng, 6)
        assert (p + q).derivative() == p.derivative() + q.derivative()
        assert (p * q).derivative() == p.derivative() * q + p * q.derivative()


def test_shift():
    rng = random.Random(13)
    for _ in range(30):
        p = _random_poly(rng, 7)
        a = gr(rng.randint(-4, 4), rng.randint(-2, 2))
        shifted = p.shift(a)
        for x in (gr(0), gr(1), gr(-2, 1)):
            assert shifted(x) == p(x + a)
    assert PSI_01.shift(0) == PSI_01


def test_laurent_simple_pole():
    series = laurent_expand(Polynomial((1,)), PSI_01, 0, 3)
    assert series.min_order == -1
    assert series.coeffs == (gr(-1), gr(-1), gr(-1))  # -1/z - 1 - z


def test_laurent_cancellation():
    num = Polynomial((0, -2, 2))  # 2z^2 - 2z
    den = PSI_01 * PSI_01
    series = laurent_expand(num, den, 0, 3)
    assert series.min_order == -1
    assert series.coeffs == (gr(-2), gr(-2), gr(-2))


def test_laurent_removable():
    series = laurent_expand(Polynomial((0, 0, 1)), Polynomial((0, 0, 1)), 0, 1)
    assert series.min_order == 0
    assert series.coeffs == (gr(1),)


def test_laurent_zero_numerator_and_errors():
    series = laurent_expand(Polynomial.zero(), PSI_01, 0, 4)
    assert series.is_zero
    assert series.coefficient(2) == ZERO
    with pytest.raises(ZeroDivisionError):
        laurent_expand(PSI_01, Polynomial.zero(), 0, 3)
    with pytest.raises(ValueError):
        laurent_expand(PSI_01, PSI_01, 0, 0)


def test_laurent_times_denominator_reproduces_numerator():
    # The defining property of the expansion, checked by exact convolution.
    rng = random.Random(17)
    for _ in range(30):
        num = _random_poly(rng, 8)
        den = _random_poly(rng, 8)
        if den.is_zero:
            continue
        a = gr(rng.randint(-3, 3), rng.randint(-1, 1))
        terms = 9
        series = laurent_expand(num, den, a, terms)
        if series.is_zero:
            assert num.is_zero
            continue
        den_local = den.shift(a).coeffs
        num_local = num.shift(a).padded(12)
        # (series * den) coefficient at order k, for orders covered by the window
        for k in range(series.min_order, series.min_order + terms):
            acc = ZERO
            for j, d_j in enumerate(den_local):
                order = k - j
                if series.min_order <= order <= series.max_order:
                    acc = acc + d_j * series.coefficient(order)
                # orders below the window contribute zero exactly
            if 0 <= k < len(num_local):
                assert acc == num_local[k]
            elif k < 0:
                assert acc == ZERO


def test_series_window_contract():
    series = LaurentSeries(gr(0), -1, (gr(1), gr(2), gr(3)))
    assert series.coefficient(-5) == ZERO
    assert series.coefficient(1) == gr(3)
    with pytest.raises(ValueError):
        series.coefficient(2)


def test_series_leading_normalization():
    series = LaurentSeries(gr(0), -2, (ZERO, gr(4), gr(5)))
    assert series.min_order == -1
    assert series.coeffs == (gr(4), gr(5))
    assert series.max_order == 0


def test_z_constant():
    assert Z(5) == gr(5)
    assert (Z * Z - Z) == PSI_01

import random
from fractions import Fraction

import pytest

from wheelmac import partitions as pt
from wheelmac.scalars import ParameterSpec, UniRatFunc
from wheelmac.symfunc import (MonomialExpansion, SymPoly,
                              eval_monomial_symmetric, m_to_monomials,
                              monomials_to_m, restrict_derivative,
                              sympoly_mul, wheel_substitute)


def test_m_to_monomials_examples():
    f = SymPoly.m((1,), 2)
    assert m_to_monomials(f).terms == {(1, 0): Fraction(1), (0, 1): Fraction(1)}
    f = SymPoly.m((1, 1), 2)
    assert m_to_monomials(f).terms == {(1, 1): Fraction(1)}
    f = SymPoly.m((2, 1), 3)
    assert len(m_to_monomials(f).terms) == 6


def test_monomials_to_m_examples():
    g = MonomialExpansion(2, {(1, 0): Fraction(1), (0, 1): Fraction(1)})
    assert monomials_to_m(g) == SymPoly.m((1,), 2)
    g = MonomialExpansion(2, {(2, 1): Fraction(1), (1, 2): Fraction(1)})
    assert monomials_to_m(g) == SymPoly.m((2, 1), 2)
    g = MonomialExpansion(2, {(2, 0): Fraction(1), (0, 1): Fraction(1)})
    with pytest.raises(ValueError, match="swapping x_1 and x_2"):
        monomials_to_m(g)


def _random_sympoly(rng, n, dmax):
    coeffs = {}
    for _ in range(rng.randint(1, 4)):
        d = rng.randint(0, dmax)
        plist = pt.enumerate_partitions(n, d)
        if plist:
            coeffs[rng.choice(plist)] = Fraction(rng.randint(-5, 5))
    return SymPoly(n, coeffs)


def test_roundtrip_random():
    rng = random.Random(11)
    for _ in range(60):
        n = rng.randint(1, 4)
        f = _random_sympoly(rng, n, 8)
        assert monomials_to_m(m_to_monomials(f)) == f


def test_mul_examples():
    m1 = SymPoly.m((1,), 2)
    assert sympoly_mul(m1, m1) == SymPoly(2, {(2,): Fraction(1),
                                              (1, 1): Fraction(2)})
    f = SymPoly(2, {(2,): Fraction(3), (1, 1): Fraction(-1)})
    assert sympoly_mul(f, SymPoly.m((), 2)) == f
    assert sympoly_mul(m1, SymPoly.m((1, 1), 2)) == SymPoly.m((2, 1), 2)


def test_mul_properties():
    rng = random.Random(23)
    for _ in range(20):
        n = rng.randint(1, 3)
        f, g, h = (_random_sympoly(rng, n, 4) for _ in range(3))
        assert sympoly_mul(f, g) == sympoly_mul(g, f)
        assert sympoly_mul(sympoly_mul(f, g), h) == sympoly_mul(f, sympoly_mul(g, h))
        if f and g:
            deg = lambda x: max(pt.size(lam) for lam in x.coeffs)
            assert deg(sympoly_mul(f, g)) == deg(f) + deg(g)


def test_wheel_substitute_examples():
    p = ParameterSpec(1, 2)
    one = UniRatFunc.one(1)
    u = UniRatFunc.u(1)
    f = SymPoly.m((1,), 2, one)
    out = wheel_substitute(f, (0,), p)
    assert out.terms == {(1,): one + u}
    # constants pass through
    const = SymPoly.m((), 2, one * 7)
    assert wheel_substitute(const, (1,), p).terms == {(0,): one * 7}
    # the kernel element a*m_(2) + b*m_(11) with a(1+t^2) + b t = 0
    f = SymPoly(2, {(2,): u, (1, 1): -(one + u * u)})
    for sigma in [(0,), (1,)]:
        assert wheel_substitute(f, sigma, p).is_zero()
    assert not wheel_substitute(SymPoly.m((2,), 2, one), (0,), p).is_zero()


def test_wheel_substitute_validation():
    p = ParameterSpec(2, 3)
    one = UniRatFunc.one(2)
    f = SymPoly.m((1,), 3, one)
    with pytest.raises(ValueError):
        wheel_substitute(f, (1, 0), p)  # not weakly increasing
    with pytest.raises(ValueError):
        wheel_substitute(f, (0, 5), p)  # out of range
    with pytest.raises(ValueError):
        wheel_substitute(SymPoly.m((1,), 2, one), (0, 0), p)  # too few vars


def test_wheel_substitute_linear():
    rng = random.Random(4)
    p = ParameterSpec(1, 3)
    one = UniRatFunc.one(2)
    for sigma in [(0,), (1,), (2,)]:
        f = _random_sympoly(rng, 3, 4).map_coeffs(lambda c: one * c)
        g = _random_sympoly(rng, 3, 4).map_coeffs(lambda c: one * c)
        lhs = wheel_substitute(f + g, sigma, p)
        rhs = wheel_substitute(f, sigma, p) + wheel_substitute(g, sigma, p)
        assert lhs.terms == rhs.terms


def test_restrict_derivative_examples():
    assert restrict_derivative(SymPoly.m((1, 1), 2), 0).is_zero()
    assert restrict_derivative(SymPoly.m((1, 1), 2), 1) == SymPoly.m((1,), 1)
    assert restrict_derivative(SymPoly.m((2,), 2), 2) == \
        SymPoly(1, {(): Fraction(2)})
    # j = 0 is plain restriction x_n = 0
    f = SymPoly(3, {(2, 1): Fraction(1), (1, 1, 1): Fraction(5)})
    assert restrict_derivative(f, 0) == SymPoly.m((2, 1), 2)


def test_restriction_fixes_macdonald(tables):
    # P_lam(x_1..x_{n-1}, 0) = P_lam(x_1..x_{n-1}) when the shape fits
    table3, table2 = tables(3), tables(2)
    for lam in [(1,), (2,), (1, 1), (2, 1), (3, 1)]:
        f = table3.compute_P(lam)
        from wheelmac.scalars import BiRatFunc
        restricted = restrict_derivative(f, 0, BiRatFunc.one())
        assert restricted == table2.compute_P(lam), lam


def test_eval_monomial_symmetric():
    one = Fraction(1)
    vals = [Fraction(2), Fraction(3)]
    assert eval_monomial_symmetric((1,), vals, one) == 5
    assert eval_monomial_symmetric((1, 1), vals, one) == 6
    assert eval_monomial_symmetric((2, 1), vals, one) == 4 * 3 + 9 * 2
    assert eval_monomial_symmetric((1, 1, 1), vals, one) == 0

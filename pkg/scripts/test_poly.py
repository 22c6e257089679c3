"""
Pruebas de polinomios con coeficientes constantes exactos
"""

import pytest
from hypothesis import given, strategies as st

from engine.constfield import ComplexBox, ConstExpr, eval_interval, working_precision
from engine.poly import Poly, gcd, multiple_zero_cardinality, squarefree_degree

I = ConstExpr.imaginary_unit()

small = st.integers(-4, 4)
polys = st.lists(small, min_size=0, max_size=4).map(Poly.from_coeffs)
shifts = st.sampled_from([ConstExpr.one(), ConstExpr.log_of(2), I * ConstExpr.pi(), ConstExpr.rational(-1, 2)])
points = st.builds(lambda a, b: ConstExpr.rational(a, 7) + I * ConstExpr.rational(b, 11),
                   st.integers(-7, 7), st.integers(-7, 7))


def p(*coeffs) -> Poly:
    """Coeficientes de menor a mayor grado."""
    return Poly.from_coeffs(coeffs)


def at(a: Poly, z0: ConstExpr) -> ComplexBox:
    return a.evaluate(eval_interval(z0, 50), 50)


class TestBasics:
    def test_trailing_zeros_are_stripped(self):
        assert p(1, 2, 0, 0).degree == 1
        assert p(0, 0).is_zero
        assert Poly.zero().degree == -1

    def test_stripping_decides_transcendental_zero(self):
        vanishing = ConstExpr.log_of(4) - ConstExpr.log_of(2) * 2
        assert Poly.from_coeffs([1, vanishing]).degree == 0

    def test_derivative(self):
        assert (p(1, 2, 3).derivative()).equals(p(2, 6))
        assert p(1, 2, 3).derivative(3).is_zero

    def test_taylor_shift(self):
        # (z + 1)^2 = z^2 + 2z + 1
        assert Poly.monomial(1, 2).taylor_shift(1).equals(p(1, 2, 1))

    def test_split_leading(self):
        t, lead, rest = p(5, 0, 3).split_leading()
        assert (t, lead.expr) == (2, 3)
        assert rest.equals(Poly.constant(5))

    def test_split_leading_rejects_zero(self):
        with pytest.raises(ValueError):
            Poly.zero().split_leading()

    def test_value_at(self):
        assert p(1, 1, 1).value_at(2).expr == 7

    def test_text(self):
        assert p(-1, 0, 2).to_text() == '2*z^2 - 1'
        assert Poly.z().to_text() == 'z'
        assert Poly.zero().to_text() == '0'


class TestAlgebra:
    @given(polys, polys)
    def test_addition_commutes(self, a, b):
        assert (a + b).equals(b + a)

    @given(polys, polys, polys)
    def test_distributivity(self, a, b, c):
        assert (a * (b + c)).equals(a * b + a * c)

    @given(polys, polys)
    def test_degree_of_product(self, a, b):
        if not a.is_zero and not b.is_zero:
            assert (a * b).degree == a.degree + b.degree

    @given(polys, polys)
    def test_derivative_is_linear(self, a, b):
        assert (a + b).derivative().equals(a.derivative() + b.derivative())

    @given(polys, shifts)
    def test_shift_commutes_with_derivative(self, a, c):
        assert a.taylor_shift(c).derivative().equals(a.derivative().taylor_shift(c))

    @given(polys, shifts)
    def test_shift_round_trip(self, a, c):
        assert a.taylor_shift(c).taylor_shift(-c).equals(a)


class TestNumericOracles:
    @given(polys, points)
    def test_derivative_matches_central_difference(self, a, z0):
        h = ConstExpr.rational(1, 10 ** 12)
        with working_precision(50):
            quotient = (at(a, z0 + h) - at(a, z0 - h)) * ComplexBox.of(5 * 10 ** 11)
            error = (quotient - at(a.derivative(), z0)).magnitude()
        assert float(error.b) < 1e-20

    @given(polys, shifts, points)
    def test_taylor_shift_is_evaluation_at_shifted_point(self, a, c, z0):
        with working_precision(50):
            assert at(a.taylor_shift(c), z0).overlaps(at(a, z0 + c))


class TestGcd:
    def test_common_factor(self):
        # (z - 1)(z + 2) y (z - 1)(z - 3)
        g = gcd(p(-2, 1, 1), p(3, -4, 1))
        assert g.equals(p(-1, 1))

    def test_coprime(self):
        assert gcd(p(1, 1), p(-1, 1)).equals(Poly.constant(1))

    def test_gcd_is_monic(self):
        g = gcd(p(0, 0, 4), p(0, 6))
        assert g.equals(Poly.z())

    def test_squarefree_degree(self):
        # z^2 (z - 1)
        assert squarefree_degree(p(0, 0, -1, 1)) == 2


class TestMultipleZeros:
    def test_triple_zero(self):
        assert multiple_zero_cardinality(Poly.monomial(1, 3)) == (1, 1)

    def test_double_zero_only(self):
        # z (z - 1)^2 = z^3 - 2z^2 + z
        assert multiple_zero_cardinality(p(0, 1, -2, 1)) == (1, 0)

    def test_simple_zeros(self):
        # z (z - 1)(z + 1)
        assert multiple_zero_cardinality(p(0, -1, 0, 1)) == (0, 0)

    def test_two_double_zeros(self):
        # z (z - 1)^2 (z + 1)^2 tiene dos ceros dobles
        quartic = p(0, 1) * p(-1, 1) * p(-1, 1) * p(1, 1) * p(1, 1)
        assert multiple_zero_cardinality(quartic) == (2, 0)

    def test_rejects_parameters(self):
        with pytest.raises(ValueError):
            multiple_zero_cardinality(Poly.from_coeffs([0, ConstExpr.param('a'), 0, 1]))

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            multiple_zero_cardinality(Poly.zero())

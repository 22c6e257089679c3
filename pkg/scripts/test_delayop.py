"""
Pruebas del operador de retardo-diferencial L(z,f) = sum b_i f^(r_i)(z + c_i)
"""

import pytest
from hypothesis import given, strategies as st

from engine.constfield import ComplexBox, ConstExpr, eval_interval, working_precision
from engine.delayop import DelayDiffOp, OpTerm, delta
from engine.expoly import ExPoly
from engine.poly import Poly

I = ConstExpr.imaginary_unit()
PI = ConstExpr.pi()
LOG2, LOG3, LOG4 = ConstExpr.log_of(2), ConstExpr.log_of(3), ConstExpr.log_of(4)


def e(omega, coeff=1) -> ExPoly:
    return ExPoly.exp_of(Poly.monomial(omega, 1), coeff)


operators = st.sampled_from([
    DelayDiffOp.of([(1, 0, 0)]),
    DelayDiffOp.of([(3, 0, 0), (1, 1, LOG2), (-3, 2, PI * I * 2)]),
    DelayDiffOp.of([(1, 0, LOG3), (-1, 1, LOG4), (1, 2, LOG2)]),
    delta(PI * I),
])
functions = st.sampled_from([
    e(1), e(2) - e(1) + ExPoly.constant(1), ExPoly.z() * e(2), e(I) + ExPoly.constant(3),
])


class TestConstruction:
    def test_empty_operator_is_rejected(self):
        with pytest.raises(ValueError):
            DelayDiffOp(())

    def test_zero_operator_is_rejected(self):
        with pytest.raises(ValueError):
            DelayDiffOp.of([(0, 0, 0), (0, 1, LOG2)])

    def test_cancelling_terms_are_rejected(self):
        with pytest.raises(ValueError, match='idénticamente nulo'):
            DelayDiffOp.of([(1, 0, 0), (-1, 0, 0)])
        with pytest.raises(ValueError):
            DelayDiffOp.of([(2, 1, LOG2), (-2, 1, LOG4 - LOG2)])

    def test_like_terms_are_merged(self):
        op = DelayDiffOp.of([(1, 1, LOG2), (3, 0, 0), (2, 1, LOG2), (0, 2, 0)])
        assert op.terms == (OpTerm(ConstExpr.of(3), 1, LOG2), OpTerm(ConstExpr.of(3), 0, ConstExpr.zero()))

    def test_sum_with_opposite_is_rejected(self):
        op = DelayDiffOp.of([(3, 0, 0), (1, 1, LOG2)])
        with pytest.raises(ValueError):
            op + op.scale(-1)

    def test_negative_order_is_rejected(self):
        with pytest.raises(ValueError):
            DelayDiffOp.of([(1, -1, 0)])

    def test_delta_requires_nonzero_step(self):
        with pytest.raises(ValueError):
            delta(LOG4 - LOG2 * 2)

    def test_shifted_terms_skip_b0_anywhere(self):
        op = DelayDiffOp.of([(1, 1, LOG2), (3, 0, 0), (2, 0, LOG2)])
        assert not op.is_conforming
        assert [(t.r, t.c) for t in op.shifted_terms] == [(1, LOG2), (0, LOG2)]
        assert op.b0 == ConstExpr.of(3)

    def test_conforming_first_term(self):
        assert DelayDiffOp.of([(3, 0, 0), (1, 1, LOG2)]).is_conforming
        assert not DelayDiffOp.shift_op(LOG2).is_conforming

    def test_b0_and_constant_gain(self):
        op = DelayDiffOp.of([(3, 0, 0), (1, 0, LOG2), (2, 1, 0)])
        assert op.b0.expr == 3
        assert op.constant_gain.expr == 4

    def test_text(self):
        op = DelayDiffOp.of([(1, 1, LOG4), (-4, 0, LOG3)])
        assert op.to_text() == "f'(z + 2*log(2)) - 4*f(z + log(3))"
        assert OpTerm(ConstExpr.one(), 3, ConstExpr.zero()).to_text() == 'f^(3)(z)'


class TestApplication:
    def test_operator_annihilates_exponential(self):
        # 3 f(z) + f'(z + log 2) - 3 f''(z + 2 pi i) sobre e^{3z}: 3 + 6*8 - 3*9*2 = 0
        op = DelayDiffOp.of([(3, 0, 0), (1, 1, LOG2), (-3, 2, PI * I * 2)])
        assert op.apply(e(3)).is_zero

    def test_constant_is_scaled_by_gain(self):
        op = DelayDiffOp.of([(3, 0, 0), (1, 1, LOG2), (-3, 2, PI * I * 2)])
        a = ConstExpr.param('a')
        f = ExPoly.constant(-a / 2) + e(3, 2)
        assert op.apply(f).equals(ExPoly.constant(a * ConstExpr.rational(-3, 2)))

    def test_delta_on_exponential(self):
        # e^{z + log 3} - e^z = 2 e^z
        assert delta(LOG3).apply(e(1)).equals(e(1, 2))

    def test_exp_symbol_matches_application(self):
        op = DelayDiffOp.of([(1, 0, LOG3), (-1, 1, LOG4), (1, 2, LOG2)])
        symbol = op.exp_symbol(1)
        assert op.apply(e(1)).equals(e(1, symbol))

    @given(operators, functions, functions)
    def test_linearity(self, op, f, g):
        assert op.apply(f + g).equals(op.apply(f) + op.apply(g))

    @given(operators, functions)
    def test_scaling(self, op, f):
        assert op.scale(3).apply(f).equals(op.apply(f).scale(3))

    @given(operators, operators, functions)
    def test_sum_of_operators(self, first, second, f):
        assert (first + second).apply(f).equals(first.apply(f) + second.apply(f))


def numeric_derivative(f: ExPoly, z0: ConstExpr, r: int) -> ComplexBox:
    """Diferencias centrales de orden r con paso 10^-12."""
    h = ConstExpr.rational(1, 10 ** 12)
    if r == 0:
        return f.eval(z0, 50)
    if r == 1:
        return (f.eval(z0 + h, 50) - f.eval(z0 - h, 50)) * ComplexBox.of(5 * 10 ** 11)
    second = f.eval(z0 + h, 50) - f.eval(z0, 50) * ComplexBox.of(2) + f.eval(z0 - h, 50)
    return second * ComplexBox.of(10 ** 24)


class TestNumericOracle:
    @given(operators, functions, st.integers(-4, 4), st.integers(-4, 4))
    def test_apply_matches_finite_differences(self, op, f, re, im):
        z0 = ConstExpr.rational(re, 4) + I * ConstExpr.rational(im, 5)
        with working_precision(50):
            expected = ComplexBox.of(0)
            for term in op.terms:
                expected = expected + eval_interval(term.b, 50) * numeric_derivative(f, z0 + term.c, term.r)
            error = (op.apply(f).eval(z0, 50) - expected).magnitude()
        assert float(error.b) < 1e-8

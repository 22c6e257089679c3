"""
Pruebas de las constantes exactas y la prueba de cero
"""

import math

import pytest
from hypothesis import given, strategies as st

from engine.constfield import (
    EMPTY_ENV, ConstExpr, ParamEnv, ZeroStatus, canonicalize, current_policy, eval_interval,
    is_identically_zero, real_sign, use_precision, working_precision, zero_test,
)
from engine.errors import UnassignedParameterError, UndecidedError

I = ConstExpr.imaginary_unit()
PI = ConstExpr.pi()

ATOMS = [
    ConstExpr.one(), ConstExpr.rational(-3, 4), I, PI, ConstExpr.log_of(2), ConstExpr.log_of(3),
    PI * I, ConstExpr.log_of(5) * I,
]


@st.composite
def constants(draw, depth=2):
    value = draw(st.sampled_from(ATOMS))
    for _ in range(draw(st.integers(0, depth))):
        other = draw(st.sampled_from(ATOMS))
        value = value + other if draw(st.booleans()) else value * other
    return value


def same(a: ConstExpr, b: ConstExpr) -> bool:
    return is_identically_zero(a - b)


def excludes_zero(value: ConstExpr, digits: int) -> bool:
    try:
        return not eval_interval(value, digits).contains_zero()
    except UndecidedError:
        return False


class TestCanonicalForm:
    def test_log_of_composite_splits_into_primes(self):
        assert same(ConstExpr.log_of(6), ConstExpr.log_of(2) + ConstExpr.log_of(3))
        assert (ConstExpr.log_of(4) - ConstExpr.log_of(2) * 2).is_literal_zero

    def test_log_of_fraction(self):
        assert (ConstExpr.log_of(ConstExpr.rational(3, 2)) + ConstExpr.log_of(2)
                - ConstExpr.log_of(3)).is_literal_zero

    def test_exp_of_log_folds_to_rational(self):
        assert ConstExpr.log_of(2).exp().expr == 2
        assert (ConstExpr.log_of(3) * 2).exp().expr == 9

    def test_exp_of_pi_i_multiples(self):
        assert (PI * I * 2).exp().is_literal_one
        assert (PI * I).exp().expr == -1
        assert (PI * I * 6).exp().is_literal_one

    def test_canonicalize_is_idempotent(self):
        value = (ConstExpr.log_of(12) * I + PI).exp()
        assert canonicalize(canonicalize(value)) == canonicalize(value)

    def test_log_rejects_non_positive_rationals(self):
        with pytest.raises(ValueError):
            ConstExpr.log_of(0)
        with pytest.raises(ValueError):
            ConstExpr.log_of(-2)

    def test_power_of_positive_rational(self):
        assert ConstExpr.of(4).power(ConstExpr.rational(1, 2)).expr == 2
        assert same(ConstExpr.of(2).power(I), (ConstExpr.log_of(2) * I).exp())

    def test_division_by_zero_constant(self):
        with pytest.raises(ZeroDivisionError):
            ConstExpr.one() / (ConstExpr.log_of(4) - ConstExpr.log_of(2) * 2)

    def test_text_is_readable(self):
        assert ConstExpr.rational(3, 4).to_text() == '3/4'
        assert ConstExpr.param('a1').to_text() == 'param(a1)'
        assert I.to_text() == 'i'


class TestRingLaws:
    @given(constants(), constants(), constants())
    def test_addition_is_associative(self, a, b, c):
        assert same((a + b) + c, a + (b + c))

    @given(constants(), constants())
    def test_multiplication_is_commutative(self, a, b):
        assert same(a * b, b * a)

    @given(constants(), constants(), constants())
    def test_distributivity(self, a, b, c):
        assert same(a * (b + c), a * b + a * c)

    @given(constants())
    def test_additive_inverse(self, a):
        assert (a - a).is_literal_zero


    @given(st.integers(-48, 48), st.integers(1, 24))
    def test_roots_of_unity_are_closed(self, p, q):
        root = (PI * I * ConstExpr.rational(2 * p, q)).exp()
        assert zero_test(root ** q - 1) is ZeroStatus.ZERO

    @given(constants(), constants())
    def test_canonicalize_commutes_with_operations(self, a, b):
        raw_sum, raw_product = ConstExpr(a.expr + b.expr), ConstExpr(a.expr * b.expr)
        assert canonicalize(raw_sum) == a + b
        assert canonicalize(raw_product) == a * b
        assert canonicalize(canonicalize(raw_product)) == canonicalize(raw_product)


class TestZeroTest:
    def test_literal_zero(self):
        assert zero_test(ConstExpr.zero()) is ZeroStatus.ZERO

    def test_nonzero_transcendental(self):
        assert zero_test(PI - 3) is ZeroStatus.NONZERO
        assert zero_test(ConstExpr.log_of(2) - ConstExpr.rational(7, 10)) is ZeroStatus.NONZERO

    def test_parameter_needs_nonzero_flag(self):
        a = ConstExpr.param('a')
        assert zero_test(a) is ZeroStatus.UNDECIDED
        env = ParamEnv().declare('a', nonzero=True)
        assert zero_test(a * 3, env) is ZeroStatus.NONZERO
        assert zero_test(a - a, env) is ZeroStatus.ZERO

    def test_nonzero_flag_requires_declaration(self):
        with pytest.raises(ValueError):
            ParamEnv(frozenset(), frozenset({'a'}))

    def test_parametric_identity(self):
        a = ConstExpr.param('a')
        assert is_identically_zero((a + 1) * (a - 1) - (a * a - 1))
        assert not is_identically_zero(a * a - a)

    def test_real_sign(self):
        assert real_sign(PI - 3) == 1
        assert real_sign(ConstExpr.log_of(2) - 1) == -1
        assert real_sign(ConstExpr.zero()) == 0


class TestIntervals:
    def test_enclosure_contains_value(self):
        box = eval_interval(PI + I * ConstExpr.log_of(2))
        assert float(box.re.mid) == pytest.approx(math.pi)
        assert float(box.im.mid) == pytest.approx(math.log(2))
        assert box.width() < 1e-40

    def test_unassigned_parameter(self):
        with pytest.raises(UnassignedParameterError):
            eval_interval(ConstExpr.param('a') + 1)

    def test_parameter_values(self):
        box = eval_interval(ConstExpr.param('a') * 2, values={'a': ConstExpr.rational(3, 7)})
        assert float(box.re.mid) == pytest.approx(6 / 7)

    def test_undecided_error_is_value_error(self):
        assert issubclass(UndecidedError, ValueError)


class TestPrecisionPolicy:
    def test_default_policy(self):
        assert current_policy().digits == 50
        assert current_policy().ladder == (50, 200, 1000)

    def test_use_precision_restores(self):
        with use_precision(120, (120, 400)) as policy:
            assert current_policy() is policy
            assert policy.steps() == (120, 400)
        assert current_policy().digits == 50

    def test_minimum_precision(self):
        with pytest.raises(ValueError):
            with use_precision(8):
                pass

    def test_empty_env_has_no_params(self):
        assert EMPTY_ENV.params == frozenset()


class TestSoundness:
    @given(constants(depth=3), constants(), st.booleans())
    def test_verdict_agrees_with_enclosure(self, a, b, cancel):
        value = a * (b + 1) - (a * b + a) if cancel else a - b
        status = zero_test(value)
        if status is ZeroStatus.ZERO:
            with working_precision(50):
                box = eval_interval(value, 50)
                assert box.contains_zero()
                assert float(box.magnitude().b) < 1e-40
        elif status is ZeroStatus.NONZERO:
            assert any(excludes_zero(value, digits) for digits in current_policy().steps())

    @given(constants(), st.sampled_from(ATOMS), st.sampled_from(['+', '-', '*', '/', 'exp']))
    def test_enclosure_is_a_homomorphism(self, a, b, op):
        with working_precision(50):
            x, y = eval_interval(a, 50), eval_interval(b, 50)
            exact, enclosed = {
                '+': lambda: (a + b, x + y),
                '-': lambda: (a - b, x - y),
                '*': lambda: (a * b, x * y),
                '/': lambda: (a / b, x / y),
                'exp': lambda: (a.exp(), x.exp()),
            }[op]()
            assert eval_interval(exact, 50).overlaps(enclosed)


class TestReferenceValues:
    def test_exp_of_imaginary_log(self):
        box = eval_interval((ConstExpr.log_of(2) * I).exp())
        assert float(box.re.mid) == pytest.approx(0.7692, abs=1e-4)
        assert float(box.im.mid) == pytest.approx(0.6390, abs=1e-4)

    def test_exp_of_minus_pi(self):
        box = eval_interval((-PI).exp())
        assert float(box.re.mid) == pytest.approx(0.04321, abs=1e-5)
        assert abs(float(box.im.mid)) < 1e-40

    def test_log_three(self):
        assert float(eval_interval(ConstExpr.log_of(3)).re.mid) == pytest.approx(1.09861, abs=1e-5)

    def test_pi_at_thirty_digits(self):
        box = eval_interval(PI, 30)
        assert box.width() < 1e-28
        assert float(box.re.mid) == pytest.approx(math.pi)

    def test_denominator_is_nonzero(self):
        # e^{-pi} - 2^i
        value = (-PI).exp() - ConstExpr.of(2).power(I)
        assert zero_test(value) is ZeroStatus.NONZERO

    def test_full_turn(self):
        assert zero_test((PI * I * 2).exp() - 1) is ZeroStatus.ZERO

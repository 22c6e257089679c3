"""
Pruebas del parser de expresiones, operadores y archivos .case
"""

import pytest
from hypothesis import given, strategies as st

from case_parser import ExpressionParser, OperatorParser, load_case, parse_case_file, tokenize
from conftest import CORPUS_DIR
from engine.classifier import ClassTag, ClauseStatus
from engine.constfield import ConstExpr, ParamEnv, is_identically_zero
from engine.errors import CaseSyntaxError
from engine.expoly import ExPoly
from engine.poly import Poly

MINIMAL = """\
[function]
f = exp(z)
[equation]
n = 2
q = -1/2
Q = z
[operator]
L = delta(log(3))
"""


def value(text: str, params: ParamEnv = ParamEnv()) -> ExPoly:
    return ExpressionParser(params).parse(text)


def syntax_error(text: str) -> CaseSyntaxError:
    with pytest.raises(CaseSyntaxError) as info:
        parse_case_file(text)
    return info.value


class TestTokenizer:
    def test_positions(self):
        tokens = tokenize("f'(z + 1)", line=4, column=5)
        assert [t.text for t in tokens] == ['f', "'", '(', 'z', '+', '1', ')', '']
        assert (tokens[3].line, tokens[3].column) == (4, 8)

    def test_decimal_is_rejected(self):
        with pytest.raises(CaseSyntaxError) as info:
            tokenize('1.5')
        assert info.value.column == 2

    def test_unknown_character(self):
        with pytest.raises(CaseSyntaxError) as info:
            tokenize('z $ 1')
        assert info.value.column == 3


class TestExpressions:
    @pytest.mark.parametrize('text,expected', [
        ('1 + 2*3', 7),
        ('(1 + 2)*3', 9),
        ('-2^2', -4),
        ('2^3^2', 512),
        ('2 - 3 - 4', -5),
        ('12/4/3', 1),
    ])
    def test_precedence(self, text, expected):
        assert value(text).as_constant().expr == expected

    def test_exponential(self):
        assert value('3*exp(2*z)').equals(ExPoly.exp_of(Poly.monomial(2, 1), 3))

    def test_exp_absorbs_constant(self):
        assert value('exp(z + log(2))').equals(value('2*exp(z)'))

    def test_constants(self):
        assert is_identically_zero(value('exp(pi*i)').as_constant() + 1)
        assert is_identically_zero(value('sqrt(4)').as_constant() - 2)
        assert is_identically_zero(value('abs(3*i)').as_constant() - 3)

    def test_polynomial_power(self):
        assert value('(z + 1)^2').equals(value('z^2 + 2*z + 1'))

    def test_declared_parameter(self):
        env = ParamEnv().declare('a', nonzero=True)
        assert is_identically_zero(value('param(a)/2', env).as_constant() - ConstExpr.param('a') / 2)

    def test_undeclared_parameter(self):
        with pytest.raises(CaseSyntaxError) as info:
            ExpressionParser().parse('1 + param(b)', 3, 5)
        assert (info.value.line, info.value.column) == (3, 15)

    @pytest.mark.parametrize('text', [
        'z/z', 'exp(exp(z))', 'log(z)', 'log(0)', '1/0', 'z^(1/2)', '2^z', '2^300',
        'foo', '(1 + 2', '1 +', '+1', '1 2', '((2^64)^64)^64', '(2^64)^64', '(2^64)^(-64)',
        '(2^60)^40*z', 'exp((2^60)^40*z)', '1' * 700,
    ])
    def test_rejections(self, text):
        with pytest.raises(CaseSyntaxError):
            value(text)

    def test_constant_and_poly_views(self):
        parser = ExpressionParser()
        assert parser.parse_constant('log(4) - 2*log(2)').is_literal_zero
        assert parser.parse_poly('z^2 - 1').equals(Poly.from_coeffs([-1, 0, 1]))
        with pytest.raises(CaseSyntaxError):
            parser.parse_constant('z')
        with pytest.raises(CaseSyntaxError):
            parser.parse_poly('exp(z)')

    def test_list(self):
        points = ExpressionParser().parse_list('0, 1, i')
        expected = [ConstExpr.zero(), ConstExpr.one(), ConstExpr.imaginary_unit()]
        assert all(is_identically_zero(p - q) for p, q in zip(points, expected))
        assert len(points) == 3


class TestOperators:
    def test_terms(self):
        op = OperatorParser().parse("3*f(z) + f'(z + log(2)) - 3*f''(z + 2*pi*i)")
        assert [t.r for t in op.terms] == [0, 1, 2]
        assert op.terms[0].b.expr == 3
        assert op.terms[2].b.expr == -3

    def test_higher_derivative_notation(self):
        op = OperatorParser().parse('f^(3)(z - 1)')
        assert op.terms[0].r == 3
        assert op.terms[0].c.expr == -1

    def test_derivative_order_is_bounded(self):
        assert OperatorParser().parse('f^(64)(z)').terms[0].r == 64
        with pytest.raises(CaseSyntaxError, match='Orden de derivación'):
            OperatorParser().parse('f^(5000)(z)')
        with pytest.raises(CaseSyntaxError) as info:
            OperatorParser().parse('f^(65)(z)', 2, 5)
        assert (info.value.line, info.value.column) == (2, 8)

    def test_coefficient_size_is_bounded(self):
        nested = '2^64*(' * 40 + 'f(z)' + ')' * 40
        with pytest.raises(CaseSyntaxError, match='fuera de rango'):
            OperatorParser().parse(nested)

    def test_delta(self):
        op = OperatorParser().parse('delta(pi*i)')
        assert len(op.terms) == 2

    def test_shift_must_be_constant(self):
        with pytest.raises(CaseSyntaxError):
            OperatorParser().parse('f(2*z)')

    def test_operator_is_linear(self):
        with pytest.raises(CaseSyntaxError):
            OperatorParser().parse('f(z)*f(z + 1)')

    def test_free_constant_is_rejected(self):
        with pytest.raises(CaseSyntaxError):
            OperatorParser().parse('f(z) + 1')

    @pytest.mark.parametrize('text', [
        'f(z) - f(z)',
        '2*f(z+log(2)) - 2*f(z + log(2))',
        '0*f(z)+f(z)-f(z)',
        "f'(z + log(4)) - f'(z + 2*log(2))",
    ])
    def test_zero_operator_is_rejected(self, text):
        with pytest.raises(CaseSyntaxError, match='idénticamente nulo'):
            OperatorParser().parse(text)

    def test_like_terms_are_merged(self):
        op = OperatorParser().parse("f(z) + 2*f'(z + log(2)) + f(z) - f'(z + log(2))")
        assert len(op.terms) == 2
        assert op.b0 == ConstExpr.of(2)

    def test_cancelled_operator_in_case_file(self):
        error = syntax_error(MINIMAL.replace('delta(log(3))', 'f(z) - f(z)'))
        assert (error.line, error.column) == (8, 5)


class TestCaseFiles:
    def test_minimal_case(self):
        case = parse_case_file(MINIMAL)
        assert case.equation.P.is_zero
        assert case.equation.coefficient(1).is_literal_zero
        assert case.expect.is_empty

    def test_two_frequency_case(self):
        case = load_case(CORPUS_DIR / 'ex1_5.case')
        assert len(case.function.terms) == 3
        assert len(case.operator.terms) == 2
        assert case.expect.class_tag is ClassTag.GAMMA2P
        assert ('(v)(a)', ClauseStatus.HOLDS) in case.expect.clauses

    def test_empty_value_reports_column(self):
        error = syntax_error(MINIMAL.replace('f = exp(z)', 'f = '))
        assert (error.line, error.column) == (2, 5)

    def test_unknown_section(self):
        error = syntax_error('[extra]\n' + MINIMAL)
        assert (error.line, error.column) == (1, 1)

    def test_unknown_key(self):
        error = syntax_error(MINIMAL.replace('Q = z', 'Q = z\nR = 1'))
        assert error.line == 7

    def test_repeated_key(self):
        error = syntax_error(MINIMAL.replace('n = 2', 'n = 2\nn = 3'))
        assert error.line == 5

    def test_missing_section(self):
        error = syntax_error(MINIMAL.split('[operator]')[0])
        assert 'operator' in error.message

    def test_coefficient_index_out_of_range(self):
        error = syntax_error(MINIMAL.replace('n = 2', 'n = 2\na2 = 1'))
        assert error.line == 5

    def test_constant_Q_maps_to_section_header(self):
        error = syntax_error(MINIMAL.replace('Q = z', 'Q = 3'))
        assert (error.line, error.column) == (3, 1)

    def test_unknown_clause_status(self):
        error = syntax_error(MINIMAL + '[expect]\n(i) = MAYBE\n')
        assert error.line == 10

    def test_param_kind(self):
        error = syntax_error('[params]\na = positive\n' + MINIMAL)
        assert (error.line, error.column) == (2, 5)

    @pytest.mark.parametrize('path', sorted(CORPUS_DIR.glob('*.case')), ids=lambda p: p.name)
    def test_print_then_parse(self, path):
        case = load_case(path)
        again = parse_case_file(case.to_text(), path.name)
        assert again.equals(case)


tokens = st.sampled_from([
    'z', 'i', 'pi', '1', '2', '+', '-', '*', '/', '^', '(', ')', 'exp(', 'log(', 'sqrt(',
    'f', "'", 'f(z)', 'delta(', ',', ' ',
])


class TestTotality:
    @given(st.lists(tokens, max_size=10).map(''.join))
    def test_expression_parser_is_total(self, text):
        try:
            ExpressionParser().parse(text)
        except CaseSyntaxError:
            pass

    @given(st.lists(tokens, max_size=10).map(''.join))
    def test_operator_parser_is_total(self, text):
        try:
            OperatorParser().parse(text)
        except CaseSyntaxError:
            pass

    @given(st.text(alphabet='[]=#\nfnqQPLa1z ', max_size=40))
    def test_case_parser_is_total(self, text):
        try:
            parse_case_file(text)
        except CaseSyntaxError:
            pass

"""
Parser de expresiones en z: constantes, polinomios y polinomios exponenciales
EXPOL - Verificador de polinomios exponenciales
"""

from typing import List, Optional

import sympy as sp

from engine.constfield import EMPTY_ENV, ConstExpr, ParamEnv
from engine.expoly import ExPoly
from engine.poly import Poly

from .base import BaseParser, Token

FUNCTIONS = ('exp', 'log', 'sqrt', 'abs', 'param')
MAX_EXPONENT = 64
MAX_RATIONAL_BITS = 2048
MAX_NUMBER_DIGITS = 600


class ExpressionParser(BaseParser):
    """
    Gramática: z, enteros, i, pi, log(q), exp(polinomio), sqrt(c), abs(c),
    param(nombre) y los operadores + - * / ^ con paréntesis.
    """

    def __init__(self, params: ParamEnv = EMPTY_ENV, source_name: str = 'expresión'):
        super().__init__(source_name)
        self.params = params

    def parse(self, text: str, line: int = 1, column: int = 1) -> ExPoly:
        """
        Parsea una expresión completa.

        Returns:
            ExPoly: Valor canónico de la expresión

        Raises:
            CaseSyntaxError: Con línea y columna del problema
        """
        self.start(text, line, column)
        if self.peek().kind == 'END':
            raise self.error("Expresión vacía")
        value = self.parse_expression()
        self.expect_end()
        return value

    def parse_constant(self, text: str, line: int = 1, column: int = 1) -> ConstExpr:
        value = self.parse(text, line, column)
        constant = value.as_constant()
        if constant is None:
            raise self.error("Se esperaba una constante (sin z)", self.tokens[0])
        return constant

    def parse_poly(self, text: str, line: int = 1, column: int = 1) -> Poly:
        value = self.parse(text, line, column)
        if not value.is_polynomial:
            raise self.error("Se esperaba un polinomio en z", self.tokens[0])
        return value.as_poly()

    def parse_list(self, text: str, line: int = 1, column: int = 1) -> List[ConstExpr]:
        """Lista de constantes separadas por comas, p. ej. '0, 1, i'."""
        self.start(text, line, column)
        points = []
        while True:
            first = self.peek()
            if first.kind == 'END':
                raise self.error("Se esperaba una constante")
            constant = self.parse_expression().as_constant()
            if constant is None:
                raise self.error("Se esperaba una constante (sin z)", first)
            points.append(constant)
            if not self.at(','):
                break
            self.advance()
        self.expect_end()
        return points

    # -- átomos -------------------------------------------------------------

    def atom(self):
        token = self.peek()
        if token.kind == 'NUMBER':
            self.advance()
            if len(token.text) > MAX_NUMBER_DIGITS:
                raise self.error(f"Número demasiado largo (máximo {MAX_NUMBER_DIGITS} dígitos)", token)
            return ExPoly.constant(int(token.text))
        if token.kind == 'OP' and token.text == '(':
            return self.parse_group()
        if token.kind == 'IDENT':
            if token.text == 'z':
                self.advance()
                return ExPoly.z()
            if token.text == 'i':
                self.advance()
                return ExPoly.constant(ConstExpr.imaginary_unit())
            if token.text == 'pi':
                self.advance()
                return ExPoly.constant(ConstExpr.pi())
            if token.text in FUNCTIONS:
                self.advance()
                return self.call(token)
            raise self.error(f"Identificador desconocido: '{token.text}'", token)
        if token.kind == 'END':
            raise self.error("Fin inesperado de la expresión", token)
        raise self.error(f"Token inesperado: '{token.text}'", token)

    def call(self, token: Token) -> ExPoly:
        if token.text == 'param':
            return ExPoly.constant(self.parameter())
        argument = self.parse_group()
        if not isinstance(argument, ExPoly):
            raise self.error(f"Argumento no admitido en {token.text}()", token)
        try:
            if token.text == 'exp':
                if not argument.is_polynomial:
                    raise ValueError("exp() sólo admite exponentes polinomiales")
                return ExPoly.exp_of(argument.as_poly())
            constant = argument.as_constant()
            if constant is None:
                raise ValueError(f"{token.text}() sólo admite constantes")
            if token.text == 'log':
                return ExPoly.constant(ConstExpr.log_of(constant))
            if token.text == 'sqrt':
                return ExPoly.constant(constant.power(ConstExpr.rational(1, 2)))
            return ExPoly.constant(constant.modulus())
        except (ValueError, ZeroDivisionError) as error:
            raise self.error(str(error), token) from error

    def parameter(self) -> ConstExpr:
        self.expect('(')
        name = self.advance()
        if name.kind != 'IDENT':
            raise self.error("Se esperaba el nombre del parámetro", name)
        if name.text not in self.params.params:
            raise self.error(f"Parámetro no declarado: '{name.text}'", name)
        self.expect(')')
        return ConstExpr.param(name.text)

    # -- operadores -----------------------------------------------------------

    def combine(self, op: str, lhs: Optional[ExPoly], rhs: ExPoly) -> ExPoly:
        return bounded(self.fold(op, lhs, rhs))

    def fold(self, op: str, lhs: Optional[ExPoly], rhs: ExPoly) -> ExPoly:
        if lhs is None:
            return -rhs
        if op == '+':
            return lhs + rhs
        if op == '-':
            return lhs - rhs
        if op == '*':
            return lhs * rhs
        if op == '/':
            divisor = rhs.as_constant()
            if divisor is None:
                raise ValueError("Sólo se puede dividir por constantes")
            return lhs.scale(ConstExpr.one() / divisor)
        exponent = rhs.as_constant()
        if exponent is None:
            raise ValueError("El exponente debe ser constante")
        if exponent.is_rational and exponent.expr.is_Integer and abs(exponent.expr) > MAX_EXPONENT:
            raise ValueError(f"Exponente entero fuera de rango (máximo {MAX_EXPONENT})")
        if exponent.is_rational and exponent.expr.is_Integer and exponent.expr >= 0:
            return lhs ** int(exponent.expr)
        base = lhs.as_constant()
        if base is None:
            raise ValueError("Potencia no entera de una expresión en z")
        return ExPoly.constant(base.power(exponent))


def rational_bits(c: ConstExpr) -> int:
    return max((max(r.p.bit_length(), r.q.bit_length()) for r in c.expr.atoms(sp.Rational)), default=0)


def bounded(value: ExPoly) -> ExPoly:
    """Rechaza valores con racionales de más de MAX_RATIONAL_BITS bits."""
    for term in value.terms:
        for c in term.coeff.coeffs + term.exponent.coeffs:
            if rational_bits(c) > MAX_RATIONAL_BITS:
                raise ValueError(f"Constante fuera de rango (racionales de más de {MAX_RATIONAL_BITS} bits)")
    return value

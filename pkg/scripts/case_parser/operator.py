"""
Parser de operadores de retardo-diferencial
EXPOL - Verificador de polinomios exponenciales

Términos f, f', f'', f^(r) con argumento (z + c), c constante, y el atajo delta(c).
"""

from dataclasses import dataclass
from typing import Optional, Tuple, Union

from engine.constfield import ConstExpr
from engine.delayop import DelayDiffOp, OpTerm, delta
from engine.expoly import ExPoly

from .expression import MAX_RATIONAL_BITS, ExpressionParser, bounded, rational_bits

MAX_DERIVATIVE_ORDER = 64


@dataclass(frozen=True)
class OperatorValue:
    """Combinación lineal parcial de términos en f."""
    terms: Tuple[OpTerm, ...]

    def scale(self, c: ConstExpr) -> 'OperatorValue':
        return OperatorValue(tuple(OpTerm(c * t.b, t.r, t.c) for t in self.terms))


Value = Union[ExPoly, OperatorValue]


def _coefficient(value: ExPoly) -> ConstExpr:
    constant = value.as_constant()
    if constant is None:
        raise ValueError("Los coeficientes del operador deben ser constantes")
    return constant


class OperatorParser(ExpressionParser):
    """L = 3*f(z) + f'(z + log(2)) - 3*f''(z + 2*pi*i)"""

    def parse(self, text: str, line: int = 1, column: int = 1) -> DelayDiffOp:
        self.start(text, line, column)
        first = self.peek()
        if first.kind == 'END':
            raise self.error("Operador vacío")
        value = self.parse_expression()
        self.expect_end()
        if not isinstance(value, OperatorValue):
            raise self.error("El operador debe contener términos en f", first)
        try:
            return DelayDiffOp(value.terms)
        except ValueError as error:
            raise self.error(str(error), first) from error

    def atom(self):
        token = self.peek()
        if token.kind == 'IDENT' and token.text == 'f':
            return self.f_term()
        if token.kind == 'IDENT' and token.text == 'delta':
            self.advance()
            argument = self.parse_group()
            try:
                if isinstance(argument, OperatorValue):
                    raise ValueError("delta() sólo admite un desplazamiento constante")
                return OperatorValue(delta(_coefficient(argument)).terms)
            except ValueError as error:
                raise self.error(str(error), token) from error
        return super().atom()

    def f_term(self) -> OperatorValue:
        self.advance()
        order = 0
        while self.at("'"):
            self.advance()
            order += 1
        if self.at('^'):
            caret = self.advance()
            if order:
                raise self.error("Use primas o f^(r), no ambas", caret)
            self.expect('(')
            number = self.advance()
            if number.kind != 'NUMBER':
                raise self.error("Se esperaba el orden de derivación", number)
            if len(number.text) > 3 or int(number.text) > MAX_DERIVATIVE_ORDER:
                raise self.error(f"Orden de derivación fuera de rango (máximo {MAX_DERIVATIVE_ORDER})", number)
            order = int(number.text)
            self.expect(')')
        self.expect('(')
        argument_token = self.peek()
        argument = self.parse_expression()
        self.expect(')')
        return OperatorValue((OpTerm(ConstExpr.one(), order, self.shift_of(argument, argument_token)),))

    def shift_of(self, argument: Value, token) -> ConstExpr:
        """El argumento debe ser z + c con c constante."""
        if isinstance(argument, OperatorValue) or not argument.is_polynomial:
            raise self.error("El argumento de f debe ser z + c", token)
        poly = argument.as_poly()
        if poly.degree != 1 or not poly.leading.is_literal_one:
            raise self.error("El argumento de f debe ser z + c con c constante", token)
        return poly.constant_term

    def combine(self, op: str, lhs: Optional[Value], rhs: Value) -> Value:
        value = self.fold(op, lhs, rhs)
        if isinstance(value, ExPoly):
            return bounded(value)
        if isinstance(value, OperatorValue):
            for term in value.terms:
                if max(rational_bits(term.b), rational_bits(term.c)) > MAX_RATIONAL_BITS:
                    raise ValueError(f"Coeficiente fuera de rango (racionales de más de {MAX_RATIONAL_BITS} bits)")
        return value

    def fold(self, op: str, lhs: Optional[Value], rhs: Value) -> Value:
        if not isinstance(lhs, OperatorValue) and not isinstance(rhs, OperatorValue):
            return super().fold(op, lhs, rhs)
        if lhs is None:
            return rhs.scale(ConstExpr.of(-1))
        if op in '+-':
            if not (isinstance(lhs, OperatorValue) and isinstance(rhs, OperatorValue)):
                raise ValueError("No se puede sumar un término sin f al operador")
            if op == '-':
                rhs = rhs.scale(ConstExpr.of(-1))
            return OperatorValue(lhs.terms + rhs.terms)
        if op == '*':
            if isinstance(lhs, OperatorValue) and isinstance(rhs, OperatorValue):
                raise ValueError("El operador es lineal: no se multiplican dos términos en f")
            if isinstance(lhs, OperatorValue):
                return lhs.scale(_coefficient(rhs))
            return rhs.scale(_coefficient(lhs))
        if op == '/' and isinstance(lhs, OperatorValue) and not isinstance(rhs, OperatorValue):
            return lhs.scale(ConstExpr.one() / _coefficient(rhs))
        raise ValueError(f"Operación '{op}' no admitida sobre términos en f")

"""
Polinomios univariados en z con coeficientes ConstExpr
EXPOL - Verificador de polinomios exponenciales

Representación densa c0..cd; el polinomio cero es la tupla vacía (grado -1).
Los coeficientes finales idénticamente nulos se eliminan siempre.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Mapping, Optional, Sequence, Tuple

from .constfield import (
    ComplexBox, ConstExpr, Scalar, eval_interval, is_identically_zero, working_precision,
)
from .errors import UndecidedError

ZERO_DEGREE = -1


def _is_zero_coeff(c: ConstExpr, context: str) -> bool:
    try:
        return is_identically_zero(c)
    except UndecidedError as error:
        raise UndecidedError(f"{context}: {error}") from error


def _strip(coeffs: Sequence[ConstExpr], context: str = "grado indecidible") -> Tuple[ConstExpr, ...]:
    coeffs = list(coeffs)
    while coeffs and _is_zero_coeff(coeffs[-1], context):
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class Poly:
    """Polinomio c0 + c1 z + ... + cd z^d (coeficiente principal no nulo)."""
    coeffs: Tuple[ConstExpr, ...] = ()

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Scalar]) -> 'Poly':
        return cls(_strip([ConstExpr.of(c) for c in coeffs]))

    @classmethod
    def zero(cls) -> 'Poly':
        return cls(())

    @classmethod
    def constant(cls, c: Scalar) -> 'Poly':
        return cls.from_coeffs([c])

    @classmethod
    def monomial(cls, c: Scalar, k: int) -> 'Poly':
        if k < 0:
            raise ValueError("El exponente de un monomio no puede ser negativo")
        return cls.from_coeffs([0] * k + [c])

    @classmethod
    def z(cls) -> 'Poly':
        return cls((ConstExpr.zero(), ConstExpr.one()))

    # -- consultas ------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return self.degree <= 0

    @property
    def leading(self) -> ConstExpr:
        if self.is_zero:
            raise ValueError("El polinomio cero no tiene coeficiente principal")
        return self.coeffs[-1]

    def coeff(self, k: int) -> ConstExpr:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ConstExpr.zero()

    @property
    def constant_term(self) -> ConstExpr:
        return self.coeff(0)

    def without_constant(self) -> 'Poly':
        if self.is_zero:
            return self
        return Poly(_strip((ConstExpr.zero(),) + self.coeffs[1:]))

    @property
    def free_params(self) -> FrozenSet[str]:
        names: FrozenSet[str] = frozenset()
        for c in self.coeffs:
            names |= c.free_params
        return names

    def equals(self, other: 'Poly') -> bool:
        """Igualdad como polinomios (no sólo estructural)."""
        return self == other or (self - other).is_zero

    # -- aritmética ---------------------------------------------------------

    def __add__(self, other: 'Poly') -> 'Poly':
        size = max(len(self.coeffs), len(other.coeffs))
        return Poly(_strip([self.coeff(k) + other.coeff(k) for k in range(size)]))

    def __sub__(self, other: 'Poly') -> 'Poly':
        size = max(len(self.coeffs), len(other.coeffs))
        return Poly(_strip([self.coeff(k) - other.coeff(k) for k in range(size)]))

    def __neg__(self) -> 'Poly':
        return Poly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: 'Poly') -> 'Poly':
        if self.is_zero or other.is_zero:
            return Poly.zero()
        out = [ConstExpr.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_literal_zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(_strip(out))

    def __pow__(self, k: int) -> 'Poly':
        if k < 0:
            raise ValueError("Potencia negativa de un polinomio")
        result = Poly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Scalar) -> 'Poly':
        c = ConstExpr.of(c)
        return Poly(_strip([c * a for a in self.coeffs]))

    def derivative(self, times: int = 1) -> 'Poly':
        result = self
        for _ in range(times):
            result = Poly(_strip([c * k for k, c in enumerate(result.coeffs)][1:]))
        return result

    def taylor_shift(self, c: Scalar) -> 'Poly':
        """p(z + c) por Horner sobre z + c (desarrollo binomial exacto)."""
        c = ConstExpr.of(c)
        if c.is_literal_zero or self.is_constant:
            return self
        step = Poly((c, ConstExpr.one()))
        result = Poly.zero()
        for a in reversed(self.coeffs):
            result = result * step + Poly.constant(a)
        return result

    def value_at(self, c: Scalar) -> ConstExpr:
        """p(c) exacto para una constante c."""
        c = ConstExpr.of(c)
        result = ConstExpr.zero()
        for a in reversed(self.coeffs):
            result = result * c + a
        return result

    def split_leading(self) -> Tuple[int, ConstExpr, 'Poly']:
        """
        Separa p = v_t z^t + resto.

        Returns:
            Tuple: (t, v_t, resto) con deg resto <= t - 1

        Raises:
            ValueError: Si p es el polinomio cero
        """
        if self.is_zero:
            raise ValueError("split_leading requiere un polinomio no nulo")
        return self.degree, self.leading, Poly(self.coeffs[:-1]).normalized()

    def normalized(self) -> 'Poly':
        return Poly(_strip(self.coeffs))

    def monic(self) -> 'Poly':
        if self.is_zero:
            return self
        lead = self.leading
        return Poly(tuple(c / lead for c in self.coeffs[:-1]) + (ConstExpr.one(),))

    def evaluate(self, z0: ComplexBox, precision: int,
                 values: Optional[Mapping[str, ConstExpr]] = None) -> ComplexBox:
        """Encierro de p(z0) por Horner."""
        with working_precision(precision):
            result = ComplexBox.of(0)
            for a in reversed(self.coeffs):
                result = result * z0 + eval_interval(a, precision, values)
            return result

    # -- impresión ------------------------------------------------------------

    def to_text(self, var: str = 'z') -> str:
        if self.is_zero:
            return '0'
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c.is_literal_zero:
                continue
            parts.append(_term_text(c, k, var))
        text = parts[0]
        for part in parts[1:]:
            text += f" - {part[1:]}" if part.startswith('-') else f" + {part}"
        return text

    def __str__(self) -> str:
        return self.to_text()


def _power_text(k: int, var: str) -> str:
    return var if k == 1 else f"{var}^{k}"


def _term_text(c: ConstExpr, k: int, var: str) -> str:
    text = c.to_text()
    if k == 0:
        return text if not c.expr.is_Add else f"({text})"
    if c.is_literal_one:
        return _power_text(k, var)
    if c.expr == -1:
        return '-' + _power_text(k, var)
    if c.expr.is_Add:
        text = f"({text})"
    return f"{text}*{_power_text(k, var)}"


# ---------------------------------------------------------------------------
# mcd y ceros múltiples
# ---------------------------------------------------------------------------

def _prem(a: Poly, b: Poly) -> Poly:
    """Pseudo-resto lc(b)^(deg a - deg b + 1) * a mod b."""
    lead = b.leading
    remainder = a
    power = a.degree - b.degree + 1
    while not remainder.is_zero and remainder.degree >= b.degree:
        term = Poly.monomial(remainder.leading, remainder.degree - b.degree)
        remainder = remainder.scale(lead) - term * b
        power -= 1
    return remainder.scale(lead ** power) if power > 0 else remainder


def gcd(a: Poly, b: Poly) -> Poly:
    """
    Máximo común divisor mónico por sucesión de subresultantes.

    Raises:
        UndecidedError: Si un pivote queda INDECIDIDO
    """
    if a.degree < b.degree:
        a, b = b, a
    if b.is_zero:
        return a.monic()
    g = ConstExpr.one()
    h = ConstExpr.one()
    while True:
        delta = a.degree - b.degree
        r = _prem(a, b)
        if r.is_zero:
            return b.monic()
        if r.degree == 0:
            return Poly.constant(1)
        a, b = b, r.scale(ConstExpr.one() / (g * h ** delta))
        g = a.leading
        h = g if delta == 1 else (h ** (1 - delta)) * (g ** delta)


def squarefree_degree(p: Poly) -> int:
    """Número de raíces distintas: deg p - deg mcd(p, p')."""
    if p.is_zero:
        raise ValueError("El polinomio cero tiene infinitas raíces")
    return p.degree - gcd(p, p.derivative()).degree


def multiple_zero_cardinality(p: Poly) -> Tuple[int, int]:
    """
    Cuenta los ceros múltiples distintos de p.

    Args:
        p: Polinomio sin parámetros

    Returns:
        Tuple: (card2, card3) = (#{p = p' = 0}, #{p = p' = p'' = 0})

    Raises:
        ValueError: Si p contiene parámetros o es cero
        UndecidedError: Si algún pivote del mcd es indecidible
    """
    if p.free_params:
        raise ValueError("multiple_zero_cardinality requiere coeficientes sin parámetros")
    if p.is_zero:
        raise ValueError("El polinomio cero no tiene ceros aislados")
    try:
        g2 = gcd(p, p.derivative())
        g3 = gcd(g2, p.derivative(2))
        return squarefree_degree(g2), squarefree_degree(g3)
    except UndecidedError as error:
        raise UndecidedError(f"cardinalidad indecidible: {error}") from error

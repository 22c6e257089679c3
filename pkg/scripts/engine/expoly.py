"""
Polinomios exponenciales f(z) = sum P_j(z) e^{Q_j(z)}
EXPOL - Verificador de polinomios exponenciales

Forma plana canónica: conjunto de términos con exponentes distintos, cada
exponente con término constante 0 (la constante se absorbe en el coeficiente).
La vista normalizada H0 + sum H_j e^{w_j z^t} se calcula bajo demanda.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Mapping, Optional, Tuple, Union

from .constfield import (
    ComplexBox, ConstExpr, Scalar, eval_interval, is_identically_zero, working_precision,
)
from .errors import UndecidedError
from .poly import Poly


@dataclass(frozen=True)
class ExpTerm:
    """Sumando coeff(z) * e^{exponent(z)}; exponent sin término constante."""
    coeff: Poly
    exponent: Poly

    def sort_key(self) -> Tuple[int, str]:
        return self.exponent.degree, self.exponent.to_text()


def _same_exponent(a: Poly, b: Poly) -> bool:
    if a == b:
        return True
    if a.degree != b.degree:
        return False
    try:
        return (a - b).is_zero
    except UndecidedError as error:
        raise UndecidedError(f"fusión de exponentes indecidible: {error}") from error


def _collect(pairs: Iterable[Tuple[Poly, Poly]]) -> Tuple[ExpTerm, ...]:
    buckets: List[List[Poly]] = []
    for coeff, exponent in pairs:
        if coeff.is_zero:
            continue
        kappa = exponent.constant_term
        if not kappa.is_literal_zero:
            coeff = coeff.scale(kappa.exp())
            exponent = exponent.without_constant()
        slot = next((b for b in buckets if b[0] == exponent), None)
        if slot is None:
            slot = next((b for b in buckets if _same_exponent(b[0], exponent)), None)
        if slot is None:
            buckets.append([exponent, coeff])
        else:
            slot[1] = slot[1] + coeff
    terms = [ExpTerm(coeff, exponent) for exponent, coeff in buckets if not coeff.is_zero]
    return tuple(sorted(terms, key=ExpTerm.sort_key))


@dataclass(frozen=True)
class ExPoly:
    """Polinomio exponencial en forma canónica; la tupla vacía es el cero."""
    terms: Tuple[ExpTerm, ...] = ()

    # -- constructores -----------------------------------------------------

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[Poly, Poly]]) -> 'ExPoly':
        """Construye desde pares (coeficiente, exponente) fusionando exponentes iguales."""
        return cls(_collect(pairs))

    @classmethod
    def zero(cls) -> 'ExPoly':
        return cls(())

    @classmethod
    def constant(cls, c: Scalar) -> 'ExPoly':
        return cls.polynomial(Poly.constant(c))

    @classmethod
    def polynomial(cls, p: Poly) -> 'ExPoly':
        return cls.from_pairs([(p, Poly.zero())])

    @classmethod
    def z(cls) -> 'ExPoly':
        return cls.polynomial(Poly.z())

    @classmethod
    def exp_of(cls, exponent: Poly, coeff: Union[Poly, Scalar] = 1) -> 'ExPoly':
        """coeff * e^{exponent}, con la constante del exponente absorbida."""
        if not isinstance(coeff, Poly):
            coeff = Poly.constant(coeff)
        return cls.from_pairs([(coeff, exponent)])

    # -- consultas -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_polynomial(self) -> bool:
        return all(term.exponent.is_zero for term in self.terms)

    @property
    def exponential_degree(self) -> int:
        """t = máximo grado de los exponentes (0 para polinomios)."""
        if self.is_polynomial:
            return 0
        return max(term.exponent.degree for term in self.terms)

    @property
    def polynomial_part(self) -> Poly:
        for term in self.terms:
            if term.exponent.is_zero:
                return term.coeff
        return Poly.zero()

    @property
    def exponential_terms(self) -> Tuple[ExpTerm, ...]:
        return tuple(term for term in self.terms if not term.exponent.is_zero)

    def as_poly(self) -> Poly:
        if not self.is_polynomial:
            raise ValueError(f"No es un polinomio: {self.to_text()}")
        return self.polynomial_part

    def as_constant(self) -> Optional[ConstExpr]:
        """La constante si f es constante; None en otro caso."""
        if not self.is_polynomial or self.polynomial_part.degree > 0:
            return None
        return self.polynomial_part.constant_term

    @property
    def free_params(self) -> FrozenSet[str]:
        names: FrozenSet[str] = frozenset()
        for term in self.terms:
            names |= term.coeff.free_params | term.exponent.free_params
        return names

    def equals(self, other: 'ExPoly') -> bool:
        return self == other or (self - other).is_zero

    # -- aritmética ---------------------------------------------------------

    def __add__(self, other: 'ExPoly') -> 'ExPoly':
        return ExPoly.from_pairs(
            [(t.coeff, t.exponent) for t in self.terms + other.terms]
        )

    def __neg__(self) -> 'ExPoly':
        return ExPoly(tuple(ExpTerm(-t.coeff, t.exponent) for t in self.terms))

    def __sub__(self, other: 'ExPoly') -> 'ExPoly':
        return self + (-other)

    def __mul__(self, other: 'ExPoly') -> 'ExPoly':
        return ExPoly.from_pairs(
            (a.coeff * b.coeff, a.exponent + b.exponent)
            for a in self.terms for b in other.terms
        )

    def __pow__(self, k: int) -> 'ExPoly':
        if k < 0:
            raise ValueError("Potencia negativa de un polinomio exponencial")
        result = ExPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c: Scalar) -> 'ExPoly':
        return ExPoly.from_pairs((t.coeff.scale(c), t.exponent) for t in self.terms)

    def mul_poly(self, p: Poly) -> 'ExPoly':
        return ExPoly.from_pairs((t.coeff * p, t.exponent) for t in self.terms)

    def derivative(self, times: int = 1) -> 'ExPoly':
        """(P e^Q)' = (P' + P Q') e^Q término a término."""
        result = self
        for _ in range(times):
            result = ExPoly.from_pairs(
                (t.coeff.derivative() + t.coeff * t.exponent.derivative(), t.exponent)
                for t in result.terms
            )
        return result

    def shift(self, c: Scalar) -> 'ExPoly':
        """f(z + c): P(z+c) e^{Q(z+c)}, con e^{Q(c)} absorbido en el coeficiente."""
        c = ConstExpr.of(c)
        if c.is_literal_zero:
            return self
        return ExPoly.from_pairs(
            (t.coeff.taylor_shift(c), t.exponent.taylor_shift(c)) for t in self.terms
        )

    # -- vista normalizada -------------------------------------------------

    def normalized_view(self) -> 'NormalizedView':
        """
        Agrupa los términos por el coeficiente principal w_j de los exponentes de grado t.

        Returns:
            NormalizedView: t, H0, pares (w_j, H_j) y m

        Raises:
            ValueError: Si f es cero
            UndecidedError: Si la distinción entre dos w_j es indecidible
        """
        if self.is_zero:
            raise ValueError("La vista normalizada requiere f no nula")
        if self.is_polynomial:
            return NormalizedView(0, self, ())
        t = self.exponential_degree
        lower: List[Tuple[Poly, Poly]] = []
        groups: List[Tuple[ConstExpr, List[Tuple[Poly, Poly]]]] = []
        for term in self.terms:
            if term.exponent.degree < t:
                lower.append((term.coeff, term.exponent))
                continue
            omega = term.exponent.leading
            rest = Poly(term.exponent.coeffs[:-1]).normalized()
            group = next((g for g in groups if g[0] == omega), None)
            if group is None:
                group = next((g for g in groups if _same_omega(g[0], omega)), None)
            if group is None:
                group = (omega, [])
                groups.append(group)
            group[1].append((term.coeff, rest))
        components = tuple((omega, ExPoly.from_pairs(pairs)) for omega, pairs in groups)
        return NormalizedView(t, ExPoly.from_pairs(lower), components)

    # -- evaluación --------------------------------------------------------

    def eval(self, z0: Union[ConstExpr, ComplexBox], precision: int,
             values: Optional[Mapping[str, ConstExpr]] = None) -> ComplexBox:
        """
        Encierro de f(z0).

        Args:
            z0: Punto (constante exacta o caja compleja)
            precision: Dígitos decimales
            values: Valores de prueba de los parámetros

        Raises:
            UnassignedParameterError: Si falta el valor de un parámetro
        """
        with working_precision(precision):
            point = z0 if isinstance(z0, ComplexBox) else eval_interval(z0, precision, values)
            total = ComplexBox.of(0)
            for term in self.terms:
                value = term.coeff.evaluate(point, precision, values)
                if not term.exponent.is_zero:
                    value = value * term.exponent.evaluate(point, precision, values).exp()
                total = total + value
            return total

    # -- impresión ------------------------------------------------------------

    def to_text(self) -> str:
        if self.is_zero:
            return '0'
        parts = [_exp_term_text(term) for term in self.terms]
        text = parts[0]
        for part in parts[1:]:
            text += f" - {part[1:]}" if part.startswith('-') else f" + {part}"
        return text

    def __str__(self) -> str:
        return self.to_text()


def _same_omega(a: ConstExpr, b: ConstExpr) -> bool:
    try:
        return is_identically_zero(a - b)
    except UndecidedError as error:
        raise UndecidedError(f"distinción de frecuencias indecidible: {error}") from error


def _exp_term_text(term: ExpTerm) -> str:
    coeff_text = term.coeff.to_text()
    if term.exponent.is_zero:
        return coeff_text
    exp_text = f"exp({term.exponent.to_text()})"
    coeff = term.coeff
    if coeff.degree == 0 and coeff.leading.is_literal_one:
        return exp_text
    if coeff.degree == 0 and coeff.leading.expr == -1:
        return '-' + exp_text
    if ' + ' in coeff_text or ' - ' in coeff_text:
        return f"({coeff_text})*{exp_text}"
    return f"{coeff_text}*{exp_text}"


@dataclass(frozen=True)
class NormalizedView:
    """H0 + sum H_j e^{w_j z^t}; H0 agrupa los términos de grado de exponente < t."""
    t: int
    h0: ExPoly
    components: Tuple[Tuple[ConstExpr, ExPoly], ...]

    @property
    def m(self) -> int:
        return len(self.components)

    @property
    def omegas(self) -> Tuple[ConstExpr, ...]:
        return tuple(omega for omega, _ in self.components)

    def h(self, j: int) -> ExPoly:
        """H_j con j en 1..m (H_0 para j = 0)."""
        return self.h0 if j == 0 else self.components[j - 1][1]

    def reconstruct(self) -> ExPoly:
        result = self.h0
        for omega, h in self.components:
            result = result + h * ExPoly.exp_of(Poly.monomial(omega, self.t))
        return result

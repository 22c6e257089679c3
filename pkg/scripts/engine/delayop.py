"""
Operador lineal de retardo-diferencial L(z,f) = sum b_i f^(r_i)(z + c_i)
EXPOL - Verificador de polinomios exponenciales
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from .constfield import ConstExpr, Scalar, ZeroStatus, is_identically_zero, zero_test
from .expoly import ExPoly


@dataclass(frozen=True)
class OpTerm:
    """Triple (b, r, c): b * f^(r)(z + c)."""
    b: ConstExpr
    r: int
    c: ConstExpr

    def to_text(self) -> str:
        primes = {0: 'f', 1: "f'", 2: "f''"}
        name = primes.get(self.r, f"f^({self.r})")
        if self.c.is_literal_zero:
            call = f"{name}(z)"
        else:
            shift = self.c.to_text()
            if shift.startswith('-') and not self.c.expr.is_Add:
                call = f"{name}(z - {shift[1:]})"
            else:
                call = f"{name}(z + {shift})" if not self.c.expr.is_Add else f"{name}(z + ({shift}))"
        if self.b.is_literal_one:
            return call
        if self.b.expr == -1:
            return '-' + call
        coeff = self.b.to_text()
        if self.b.expr.is_Add:
            coeff = f"({coeff})"
        return f"{coeff}*{call}"


def _same_shift(c1: ConstExpr, c2: ConstExpr) -> bool:
    return c1 == c2 or zero_test(c1 - c2) is ZeroStatus.ZERO


def _merge_terms(terms: Iterable[OpTerm]) -> Tuple[OpTerm, ...]:
    """Suma los b de los términos con igual (r, c) y descarta los nulos; conserva el orden."""
    buckets: List[List] = []
    for term in terms:
        slot = next((b for b in buckets if b[0] == term.r and _same_shift(b[1], term.c)), None)
        if slot is None:
            buckets.append([term.r, term.c, term.b])
        else:
            slot[2] = slot[2] + term.b
    return tuple(OpTerm(b, r, c) for r, c, b in buckets if zero_test(b) is not ZeroStatus.ZERO)


@dataclass(frozen=True)
class DelayDiffOp:
    """
    Operador de retardo-diferencial con coeficientes constantes.
    Se admite un primer término distinto de (b0, 0, 0); is_conforming lo indica.
    Los términos con igual (r, c) se fusionan al construir.
    """
    terms: Tuple[OpTerm, ...]

    def __post_init__(self):
        if not self.terms:
            raise ValueError("El operador necesita al menos un término")
        for term in self.terms:
            if term.r < 0:
                raise ValueError(f"Orden de derivada negativo: {term.r}")
        merged = _merge_terms(self.terms)
        if not merged:
            raise ValueError("El operador es idénticamente nulo")
        object.__setattr__(self, 'terms', merged)

    @classmethod
    def of(cls, triples: Iterable[Tuple[Scalar, int, Scalar]]) -> 'DelayDiffOp':
        return cls(tuple(OpTerm(ConstExpr.of(b), int(r), ConstExpr.of(c)) for b, r, c in triples))

    @classmethod
    def shift_op(cls, c: Scalar) -> 'DelayDiffOp':
        return cls.of([(1, 0, c)])

    @classmethod
    def derivative_op(cls, r: int = 1) -> 'DelayDiffOp':
        return cls.of([(1, r, 0)])

    @property
    def is_conforming(self) -> bool:
        first = self.terms[0]
        return first.r == 0 and first.c.is_literal_zero

    @property
    def b0(self) -> ConstExpr:
        """Suma de los b_i con r_i = 0 y c_i = 0."""
        total = ConstExpr.zero()
        for term in self.terms:
            if term.r == 0 and zero_test(term.c) is ZeroStatus.ZERO:
                total = total + term.b
        return total

    @property
    def shifted_terms(self) -> Tuple[OpTerm, ...]:
        """Términos distintos de b0 f(z), en el orden del operador."""
        return tuple(t for t in self.terms if not (t.r == 0 and zero_test(t.c) is ZeroStatus.ZERO))

    @property
    def constant_gain(self) -> ConstExpr:
        """L aplicado a la constante 1: suma de los b_i con r_i = 0."""
        total = ConstExpr.zero()
        for term in self.terms:
            if term.r == 0:
                total = total + term.b
        return total

    @property
    def shifts_equal(self) -> bool:
        """Todos los c_i coinciden (como constantes)."""
        first = self.terms[0].c
        return all(is_identically_zero(term.c - first) for term in self.terms[1:])

    def exp_symbol(self, alpha: Scalar) -> ConstExpr:
        """s(alpha) con L(e^{alpha z}) = s(alpha) e^{alpha z}."""
        alpha = ConstExpr.of(alpha)
        total = ConstExpr.zero()
        for term in self.terms:
            total = total + term.b * alpha ** term.r * (alpha * term.c).exp()
        return total

    def apply(self, f: ExPoly) -> ExPoly:
        """
        L(z,f) exacto.

        Args:
            f: Polinomio exponencial

        Returns:
            ExPoly: sum b_i * f^(r_i)(z + c_i) en forma canónica
        """
        derivatives: Dict[int, ExPoly] = {0: f}
        pairs = []
        for term in self.terms:
            if term.r not in derivatives:
                derivatives[term.r] = f.derivative(term.r)
            shifted = derivatives[term.r].shift(term.c).scale(term.b)
            pairs.extend((t.coeff, t.exponent) for t in shifted.terms)
        return ExPoly.from_pairs(pairs)

    def __add__(self, other: 'DelayDiffOp') -> 'DelayDiffOp':
        return DelayDiffOp(self.terms + other.terms)

    def scale(self, c: Scalar) -> 'DelayDiffOp':
        c = ConstExpr.of(c)
        return DelayDiffOp(tuple(OpTerm(c * t.b, t.r, t.c) for t in self.terms))

    def to_text(self) -> str:
        parts = [term.to_text() for term in self.terms]
        text = parts[0]
        for part in parts[1:]:
            text += f" - {part[1:]}" if part.startswith('-') else f" + {part}"
        return text

    def __str__(self) -> str:
        return self.to_text()


def delta(c: Scalar) -> DelayDiffOp:
    """
    Diferencia progresiva f(z + c) - f(z).

    Raises:
        ValueError: Si c es cero
    """
    c = ConstExpr.of(c)
    if zero_test(c) is ZeroStatus.ZERO:
        raise ValueError("delta(c) requiere c no nulo")
    return DelayDiffOp.of([(-1, 0, 0), (1, 0, c)])

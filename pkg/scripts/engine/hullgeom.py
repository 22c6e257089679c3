"""
Envolvente convexa de conjuntos finitos de frecuencias y su circunferencia
EXPOL - Verificador de polinomios exponenciales

Las comparaciones geométricas son exactas sobre ConstExpr (prueba de cero y
signo certificado por intervalos). Un signo INDECIDIDO es un error: el tipo de
envolvente cambia la fórmula de la circunferencia de forma discontinua.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from enum import Enum
from typing import Any, Iterable, List, Optional, Sequence, Tuple

import sympy as sp

from .constfield import (
    ConstExpr, Scalar, ZeroStatus, canonicalize, eval_interval, is_identically_zero,
    real_sign, zero_test,
)
from .errors import UndecidedError


class HullKind(Enum):
    POINT = 'POINT'
    SEGMENT = 'SEGMENT'
    POLYGON = 'POLYGON'


def real_part(c: ConstExpr) -> ConstExpr:
    return (c + c.conjugate()) / 2


def imag_part(c: ConstExpr) -> ConstExpr:
    return (c - c.conjugate()) / (ConstExpr.imaginary_unit() * 2)


def cross(u: ConstExpr, v: ConstExpr) -> int:
    """Signo de Im(conj(u) v): 1 si v gira a la izquierda de u, -1 a la derecha, 0 si son paralelos."""
    return real_sign(imag_part(u.conjugate() * v))


def _compare(a: ConstExpr, b: ConstExpr) -> int:
    difference = a - b
    sign = real_sign(real_part(difference))
    return sign if sign else real_sign(imag_part(difference))


def _distinct(points: Iterable[ConstExpr]) -> Tuple[ConstExpr, ...]:
    kept: List[ConstExpr] = []
    for point in points:
        duplicate = False
        for other in kept:
            status = zero_test(point - other)
            if status is ZeroStatus.UNDECIDED:
                raise UndecidedError("No se pudo decidir si dos puntos coinciden",
                                     f"{point.to_text()} ; {other.to_text()}")
            if status is ZeroStatus.ZERO:
                duplicate = True
                break
        if not duplicate:
            kept.append(point)
    return tuple(kept)


@dataclass(frozen=True)
class FrequencySet:
    """Conjunto finito de puntos distintos del plano complejo."""
    points: Tuple[ConstExpr, ...]
    with_origin: bool = False

    @classmethod
    def of(cls, points: Iterable[Scalar]) -> 'FrequencySet':
        """Puntos tal cual, sin conjugar."""
        return cls(_distinct(ConstExpr.of(p) for p in points))

    @classmethod
    def from_frequencies(cls, omegas: Iterable[Scalar], adjoin_origin: bool = False) -> 'FrequencySet':
        """W = {conj(w_1), ..., conj(w_m)} y, si se pide, W0 = W U {0}."""
        points = [ConstExpr.of(w).conjugate() for w in omegas]
        if adjoin_origin:
            points.append(ConstExpr.zero())
        return cls(_distinct(points), adjoin_origin)

    def scaled(self, k: Scalar) -> 'FrequencySet':
        k = ConstExpr.of(k)
        return FrequencySet(_distinct(k * p for p in self.points), self.with_origin)

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class HullResult:
    """Vértices de co(W) en sentido antihorario, tipo y circunferencia."""
    vertices: Tuple[ConstExpr, ...]
    kind: HullKind
    circumference_exact: ConstExpr
    circumference: Any

    def describe(self) -> str:
        return f"{self.kind.value}, C = {self.circumference_exact.to_text()}"


def _exact_circumference(vertices: Sequence[ConstExpr], kind: HullKind) -> ConstExpr:
    if kind is HullKind.POINT:
        return ConstExpr.zero()
    if kind is HullKind.SEGMENT:
        return (vertices[1] - vertices[0]).modulus() * 2
    total = sp.Integer(0)
    for k, vertex in enumerate(vertices):
        total += (vertices[(k + 1) % len(vertices)] - vertex).modulus().expr
    return canonicalize(ConstExpr(total))


def convex_hull(points: FrequencySet, precision: Optional[int] = None) -> HullResult:
    """
    Cadena monótona de Andrew con predicados exactos.

    Args:
        points: Conjunto de al menos un punto
        precision: Dígitos del encierro de la circunferencia

    Returns:
        HullResult: vértices antihorarios, tipo y circunferencia

    Raises:
        ValueError: Si el conjunto es vacío
        UndecidedError: Si una orientación es indecidible
    """
    if not points.points:
        raise ValueError("La envolvente convexa requiere al menos un punto")
    ordered = sorted(points.points, key=functools.cmp_to_key(_compare))
    if len(ordered) == 1:
        vertices: Tuple[ConstExpr, ...] = (ordered[0],)
    else:
        lower: List[ConstExpr] = []
        for p in ordered:
            while len(lower) >= 2 and cross(lower[-1] - lower[-2], p - lower[-2]) <= 0:
                lower.pop()
            lower.append(p)
        upper: List[ConstExpr] = []
        for p in reversed(ordered):
            while len(upper) >= 2 and cross(upper[-1] - upper[-2], p - upper[-2]) <= 0:
                upper.pop()
            upper.append(p)
        vertices = tuple(lower[:-1] + upper[:-1])

    kind = {1: HullKind.POINT, 2: HullKind.SEGMENT}.get(len(vertices), HullKind.POLYGON)
    exact = _exact_circumference(vertices, kind)
    box = eval_interval(exact, precision)
    return HullResult(vertices, kind, exact, box.re)


def circumference(hull: HullResult) -> Any:
    """C(co(W)): perímetro, doble de la longitud para un segmento, 0 para un punto."""
    return hull.circumference


def collinear_with_origin(omegas: Sequence[ConstExpr]) -> bool:
    """
    True si 0, w_1, ..., w_m están alineados.

    Raises:
        UndecidedError: Si un producto cruzado es indecidible
    """
    if not omegas:
        raise ValueError("Se requiere al menos una frecuencia")
    direction = next((w for w in omegas if zero_test(w) is not ZeroStatus.ZERO), None)
    if direction is None:
        return True
    return all(cross(direction, w) == 0 for w in omegas)


def has_double_relation(omegas: Sequence[ConstExpr]) -> Optional[Tuple[int, int]]:
    """
    Primer par (i, j), i != j, con w_i = 2 w_j (índices base 0).

    Raises:
        UndecidedError: Si una comparación es indecidible
    """
    for i, wi in enumerate(omegas):
        for j, wj in enumerate(omegas):
            if i != j and is_identically_zero(wi - wj * 2):
                return i, j
    return None

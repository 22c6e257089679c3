"""
Síntesis directa de soluciones para la falsación del teorema
EXPOL - Verificador de polinomios exponenciales

Cada familia fija f y L al azar y despeja q, Q, a_i y P para que el residuo
sea exactamente cero. El residuo se vuelve a comprobar siempre.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .classifier import ClauseReport, Equation, check_theorem, residual
from .constfield import ConstExpr, ZeroStatus, zero_test
from .delayop import DelayDiffOp, OpTerm
from .errors import ExpolError
from .expoly import ExPoly
from .poly import Poly

MAX_ATTEMPTS = 60


class Family(Enum):
    GAMMA0 = 'GAMMA0'
    GAMMA1 = 'GAMMA1'
    CASE_II = 'CASE_II'
    CASE_III = 'CASE_III'
    DOUBLE = 'DOUBLE'


def _shift_pool() -> Tuple[ConstExpr, ...]:
    pi_i = ConstExpr.pi() * ConstExpr.imaginary_unit()
    return (
        ConstExpr.zero(), ConstExpr.log_of(2), ConstExpr.log_of(3), pi_i, pi_i * 2,
        ConstExpr.one(), ConstExpr.rational(1, 2), -ConstExpr.log_of(2),
    )


def _frequency_pool() -> Tuple[ConstExpr, ...]:
    i = ConstExpr.imaginary_unit()
    return (
        ConstExpr.one(), ConstExpr.of(2), ConstExpr.of(-1), ConstExpr.of(3), i,
        i + 1, i * 2, ConstExpr.rational(1, 2),
    )


_RATIONALS = ((1, 1), (-1, 1), (2, 1), (-2, 1), (3, 1), (1, 2), (-1, 3), (3, 2))


def _rational(rng: random.Random) -> ConstExpr:
    return ConstExpr.rational(*rng.choice(_RATIONALS))


def _amplitude(rng: random.Random) -> ConstExpr:
    if rng.random() < 0.2:
        return ConstExpr.imaginary_unit() * _rational(rng)
    return _rational(rng)


def _random_operator(rng: random.Random, terms: Optional[int] = None) -> DelayDiffOp:
    shifts = _shift_pool()
    count = terms or rng.randint(1, 3)
    triples = []
    for index in range(count):
        if index == 0 and rng.random() < 0.6:
            triples.append(OpTerm(_rational(rng), 0, ConstExpr.zero()))
        else:
            triples.append(OpTerm(_rational(rng), rng.randint(0, 2), rng.choice(shifts)))
    return DelayDiffOp(tuple(triples))


def _nonzero(c: ConstExpr) -> bool:
    return zero_test(c) is ZeroStatus.NONZERO


def _linear(c: ConstExpr) -> Poly:
    return Poly.monomial(c, 1)


def _gamma0(rng: random.Random) -> Optional[Tuple[Equation, ExPoly]]:
    n = rng.randint(2, 4)
    amplitude, alpha = _amplitude(rng), rng.choice(_frequency_pool())
    L = _random_operator(rng)
    s = L.exp_symbol(alpha)
    if not _nonzero(s):
        return None
    f = ExPoly.exp_of(_linear(alpha), amplitude)
    q = Poly.constant(-(amplitude ** (n - 1)) / s)
    eq = Equation(n, tuple(ConstExpr.zero() for _ in range(n - 1)), q,
                  _linear(alpha * (n - 1)), Poly.zero(), L)
    return eq, f


def _gamma1(rng: random.Random) -> Optional[Tuple[Equation, ExPoly]]:
    amplitude, alpha, d = _amplitude(rng), rng.choice(_frequency_pool()), _rational(rng)
    L = _random_operator(rng)
    s, beta = L.exp_symbol(alpha), L.constant_gain
    if not _nonzero(s):
        return None
    a1 = d * (beta / s - 2)
    if not _nonzero(a1):
        return None
    f = ExPoly.constant(d) + ExPoly.exp_of(_linear(alpha), amplitude)
    eq = Equation(2, (a1,), Poly.constant(-amplitude / s), _linear(alpha),
                  Poly.constant(d * d + a1 * d), L)
    return eq, f


def _half_constant_solution(a1: ConstExpr, amplitude: ConstExpr, omega: ConstExpr) -> ExPoly:
    return ExPoly.constant(-a1 / 2) + ExPoly.exp_of(_linear(omega), amplitude)


def _case_ii(rng: random.Random) -> Optional[Tuple[Equation, ExPoly]]:
    amplitude, omega, a1 = _amplitude(rng), rng.choice(_frequency_pool()), _rational(rng)
    L = _random_operator(rng)
    s = L.exp_symbol(omega)
    if zero_test(s) is not ZeroStatus.ZERO:
        r = rng.randint(0, 2)
        L = L + DelayDiffOp((OpTerm(-s / omega ** r, r, ConstExpr.zero()),))
    beta = L.constant_gain
    if not _nonzero(beta):
        return None
    f = _half_constant_solution(a1, amplitude, omega)
    q = Poly.constant(amplitude * amplitude * 2 / (beta * a1))
    eq = Equation(2, (a1,), q, _linear(omega * 2), Poly.constant(-(a1 * a1) / 4), L)
    return eq, f


def _case_iii(rng: random.Random) -> Optional[Tuple[Equation, ExPoly]]:
    amplitude, omega, a1 = _amplitude(rng), rng.choice(_frequency_pool()), _rational(rng)
    L = _random_operator(rng, terms=rng.randint(1, 2))
    beta = L.constant_gain
    if not beta.is_literal_zero:
        L = L + DelayDiffOp((OpTerm(-beta, 0, rng.choice(_shift_pool()[1:])),))
    s = L.exp_symbol(omega)
    if not _nonzero(s):
        return None
    f = _half_constant_solution(a1, amplitude, omega)
    eq = Equation(2, (a1,), Poly.constant(-amplitude / s), _linear(omega),
                  Poly.constant(-(a1 * a1) / 4), L)
    return eq, f


def _double(rng: random.Random) -> Optional[Tuple[Equation, ExPoly]]:
    omega = rng.choice(_frequency_pool())
    outer, inner = _amplitude(rng), _amplitude(rng)
    L = _random_operator(rng)
    s1, s2 = L.exp_symbol(omega), L.exp_symbol(omega * 2)
    gap = s1 - s2 * 2
    if zero_test(gap) is not ZeroStatus.ZERO:
        r = rng.randint(0, 2)
        u, v = omega ** r, (omega * 2) ** r
        L = L + DelayDiffOp((OpTerm(-gap / (u - v * 2), r, ConstExpr.zero()),))
        s1, s2 = L.exp_symbol(omega), L.exp_symbol(omega * 2)
    beta = L.constant_gain
    if not (_nonzero(beta) and _nonzero(s2)):
        return None
    a1 = -(s2 * inner * inner * 2) / (outer * beta)
    f = (ExPoly.exp_of(_linear(omega * 2), outer) + ExPoly.exp_of(_linear(omega), inner)
         + ExPoly.constant(-a1 / 2))
    eq = Equation(2, (a1,), Poly.constant(-outer / s2), _linear(omega * 2),
                  Poly.constant(-(a1 * a1) / 4), L)
    return eq, f


_BUILDERS: Dict[Family, Callable[[random.Random], Optional[Tuple[Equation, ExPoly]]]] = {
    Family.GAMMA0: _gamma0,
    Family.GAMMA1: _gamma1,
    Family.CASE_II: _case_ii,
    Family.CASE_III: _case_iii,
    Family.DOUBLE: _double,
}


def synthesize(rng: random.Random, family: Family) -> Tuple[Equation, ExPoly]:
    """
    Construye una solución de la familia pedida.

    Args:
        rng: Generador pseudoaleatorio (determina el caso)
        family: Familia de construcción

    Returns:
        Tuple: (ecuación, f) con residuo exactamente cero

    Raises:
        ExpolError: Si no se obtiene un caso válido o el residuo no se anula
    """
    builder = _BUILDERS[family]
    for _ in range(MAX_ATTEMPTS):
        try:
            built = builder(rng)
        except ExpolError:
            raise
        except ValueError:
            # operador que se cancela al fusionar términos
            continue
        if built is None:
            continue
        eq, f = built
        rest = residual(eq, f)
        if not rest.is_zero:
            raise ExpolError(f"Síntesis inconsistente ({family.value}): residuo = {rest.to_text()}")
        return eq, f
    raise ExpolError(f"No se pudo sintetizar un caso de la familia {family.value}")


@dataclass(frozen=True)
class FalsificationResult:
    family: Family
    equation: Equation
    solution: ExPoly
    report: ClauseReport

    @property
    def is_counterexample(self) -> bool:
        return bool(self.report.counterexamples)


def falsify(count: int, seed: int, families: Sequence[Family] = tuple(Family),
            precision: Optional[int] = None) -> List[FalsificationResult]:
    """
    Sintetiza count soluciones rotando entre familias y verifica el teorema en cada una.

    Returns:
        List[FalsificationResult]: Un resultado por caso, en orden de generación
    """
    rng = random.Random(seed)
    results = []
    for index in range(count):
        family = families[index % len(families)]
        eq, f = synthesize(rng, family)
        results.append(FalsificationResult(family, eq, f, check_theorem(eq, f, precision)))
    return results

"""
Modelo de la ecuación f^n + sum a_i f^i + q e^Q L(z,f) = P
EXPOL - Verificador de polinomios exponenciales

Residuo exacto, clases de solución, funciones coeficiente A_h y verificación
cláusula por cláusula del teorema de clasificación. El verificador es un arnés
de falsación: evalúa hipótesis y conclusiones sobre pares (ecuación, f) concretos.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, FrozenSet, List, Mapping, Optional, Tuple

from .constfield import (
    EMPTY_ENV, ComplexBox, ConstExpr, ParamEnv, ZeroStatus, eval_interval, is_identically_zero,
    working_precision, zero_test,
)
from .delayop import DelayDiffOp
from .errors import NotASolutionError, UnassignedParameterError, UndecidedError
from .expoly import ExPoly, NormalizedView
from .growth import GrowthReport, indicators, is_borel_exceptional_zero
from .hullgeom import collinear_with_origin, has_double_relation
from .poly import Poly, multiple_zero_cardinality


# ---------------------------------------------------------------------------
# Ecuación y residuo
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Equation:
    """
    Ecuación f^n + a_1 f + ... + a_{n-1} f^{n-1} + q e^Q L(z,f) = P.

    a guarda (a_1, ..., a_{n-1}) en ese orden.
    """
    n: int
    a: Tuple[ConstExpr, ...]
    q: Poly
    Q: Poly
    P: Poly
    L: DelayDiffOp
    env: ParamEnv = EMPTY_ENV

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"n debe ser al menos 2 (n = {self.n})")
        if len(self.a) != self.n - 1:
            raise ValueError(f"Se esperaban {self.n - 1} coeficientes a_i, hay {len(self.a)}")
        if self.q.is_zero:
            raise ValueError("q(z) no puede ser idénticamente nulo")
        if self.Q.degree < 1:
            raise ValueError("Q(z) no puede ser constante")

    def coefficient(self, i: int) -> ConstExpr:
        """a_i para 1 <= i <= n-1."""
        return self.a[i - 1]

    def with_q(self, q: Poly) -> 'Equation':
        return Equation(self.n, self.a, q, self.Q, self.P, self.L, self.env)

    def p_polynomial(self) -> Poly:
        """p(z) = z^n + a_{n-1} z^{n-1} + ... + a_1 z."""
        coeffs = [ConstExpr.zero()] + list(self.a) + [ConstExpr.one()]
        return Poly.from_coeffs(coeffs)


def residual(eq: Equation, f: ExPoly) -> ExPoly:
    """
    Forma canónica de f^n + sum a_i f^i + q e^Q L(z,f) - P.

    Args:
        eq: Ecuación
        f: Candidata

    Returns:
        ExPoly: Cero exactamente cuando f es solución

    Raises:
        UndecidedError: Si una cancelación es indecidible
    """
    total = ExPoly.polynomial(-eq.P)
    power = f
    for i in range(1, eq.n):
        total = total + power.scale(eq.coefficient(i))
        power = power * f
    total = total + power
    return total + ExPoly.exp_of(eq.Q, eq.q) * eq.L.apply(f)


def is_solution(eq: Equation, f: ExPoly) -> bool:
    return residual(eq, f).is_zero


def residual_enclosure(eq: Equation, f: ExPoly, z0: ConstExpr, precision: int,
                       values: Optional[Mapping[str, ConstExpr]] = None) -> ComplexBox:
    """
    Residuo evaluado numéricamente en z0 sin cancelación simbólica previa.

    Raises:
        UnassignedParameterError: Si falta el valor de un parámetro
    """
    with working_precision(precision):
        point = eval_interval(z0, precision, values)
        fz = f.eval(point, precision, values)
        total = fz ** eq.n
        for i in range(1, eq.n):
            total = total + eval_interval(eq.coefficient(i), precision, values) * fz ** i
        operator = ComplexBox.of(0)
        for term in eq.L.terms:
            shifted = point + eval_interval(term.c, precision, values)
            value = f.derivative(term.r).eval(shifted, precision, values)
            operator = operator + eval_interval(term.b, precision, values) * value
        factor = eq.q.evaluate(point, precision, values) * eq.Q.evaluate(point, precision, values).exp()
        return total + factor * operator - eq.P.evaluate(point, precision, values)


# ---------------------------------------------------------------------------
# Clases de solución
# ---------------------------------------------------------------------------

class ClassTag(Enum):
    GAMMA0 = 'GAMMA0'
    GAMMA1 = 'GAMMA1'
    GAMMA0P = 'GAMMA0P'
    GAMMA1P = 'GAMMA1P'
    GAMMA2P = 'GAMMA2P'
    NONE = 'NONE'


_PARENTS: Dict[ClassTag, FrozenSet[ClassTag]] = {
    ClassTag.GAMMA0: frozenset({ClassTag.GAMMA1, ClassTag.GAMMA0P}),
    ClassTag.GAMMA1: frozenset({ClassTag.GAMMA1P}),
    ClassTag.GAMMA0P: frozenset({ClassTag.GAMMA1P}),
    ClassTag.GAMMA1P: frozenset({ClassTag.GAMMA2P}),
    ClassTag.GAMMA2P: frozenset(),
    ClassTag.NONE: frozenset(),
}


def ancestry(tag: ClassTag) -> FrozenSet[ClassTag]:
    """Todas las clases que contienen a tag (sin incluirla)."""
    pending = list(_PARENTS[tag])
    seen = set()
    while pending:
        parent = pending.pop()
        if parent not in seen:
            seen.add(parent)
            pending.extend(_PARENTS[parent])
    return frozenset(seen)


@dataclass(frozen=True)
class SolutionClass:
    """Clase más ajustada y testigos (p_i, alpha_i) de los términos exponenciales."""
    tag: ClassTag
    witnesses: Tuple[Tuple[Poly, Poly], ...]
    polynomial_part: Poly

    def belongs_to(self, tag: ClassTag) -> bool:
        return tag is self.tag or tag in ancestry(self.tag)

    @property
    def members(self) -> Tuple[ClassTag, ...]:
        return tuple(t for t in ClassTag if t is not ClassTag.NONE and self.belongs_to(t))


def classify(f: ExPoly) -> SolutionClass:
    """
    Coincidencia estructural sobre los términos canónicos.

    Raises:
        ValueError: Si f es cero
    """
    if f.is_zero:
        raise ValueError("No se clasifica la función cero")
    exponential = f.exponential_terms
    poly_part = f.polynomial_part
    witnesses = tuple((term.coeff, term.exponent) for term in exponential)
    if len(exponential) == 1:
        coeff = exponential[0].coeff
        unit = coeff.degree == 0 and coeff.leading.is_literal_one
        if poly_part.is_zero:
            tag = ClassTag.GAMMA0 if unit else ClassTag.GAMMA0P
        elif unit and poly_part.degree == 0:
            tag = ClassTag.GAMMA1
        else:
            tag = ClassTag.GAMMA1P
    elif len(exponential) == 2:
        tag = ClassTag.GAMMA2P
    else:
        tag = ClassTag.NONE
    return SolutionClass(tag, witnesses, poly_part)


# ---------------------------------------------------------------------------
# Funciones coeficiente
# ---------------------------------------------------------------------------

def compute_coefficient_functions(L: DelayDiffOp, view: NormalizedView) -> Tuple[ExPoly, Tuple[ExPoly, ...]]:
    """
    A_0 = L(H_0) y A_h = L(H_h e^{w_h z^t}) e^{-w_h z^t}.

    Returns:
        Tuple: (A_0, (A_1, ..., A_m))
    """
    a0 = L.apply(view.h0) if not view.h0.is_zero else ExPoly.zero()
    coefficient_functions = []
    for omega, h in view.components:
        carrier = Poly.monomial(omega, view.t)
        applied = L.apply(h * ExPoly.exp_of(carrier))
        coefficient_functions.append(applied * ExPoly.exp_of(-carrier))
    return a0, tuple(coefficient_functions)


# ---------------------------------------------------------------------------
# Reporte por cláusula
# ---------------------------------------------------------------------------

class ClauseStatus(Enum):
    HOLDS = 'HOLDS'
    VACUOUS = 'VACUOUS'
    COUNTEREXAMPLE = 'COUNTEREXAMPLE'
    UNDECIDED = 'UNDECIDED'
    NOT_MATCHED = 'NOT_MATCHED'


CLAUSE_NAMES = (
    '(i)', '(ii)->', '(ii)<-', '(iii)->', '(iii)<-', '(iv)', '(iv)card2',
    '(v)(a)', '(v)(b)', '(v)(b)(I)', '(v)(b)(II)', '(v)(b)(III)', 'collinear',
)


@dataclass(frozen=True)
class ClauseResult:
    name: str
    status: ClauseStatus
    detail: str = ''


@dataclass(frozen=True)
class ClauseReport:
    clauses: Tuple[ClauseResult, ...]

    def status(self, name: str) -> ClauseStatus:
        for clause in self.clauses:
            if clause.name == name:
                return clause.status
        raise KeyError(f"Cláusula desconocida: {name}")

    @property
    def counterexamples(self) -> Tuple[ClauseResult, ...]:
        return tuple(c for c in self.clauses if c.status is ClauseStatus.COUNTEREXAMPLE)

    @property
    def has_undecided(self) -> bool:
        return any(c.status is ClauseStatus.UNDECIDED for c in self.clauses)

    def to_dict(self) -> List[Dict[str, str]]:
        return [{'clause': c.name, 'status': c.status.value, 'detail': c.detail} for c in self.clauses]


Tri = Optional[bool]


def _attempt(fn: Callable[[], Any]) -> Any:
    """Ejecuta fn; un resultado INDECIDIDO o un parámetro sin valor se traducen en None."""
    try:
        return fn()
    except (UndecidedError, UnassignedParameterError):
        return None


def _and(*values: Tri) -> Tri:
    if any(v is False for v in values):
        return False
    if any(v is None for v in values):
        return None
    return True


def _or(*values: Tri) -> Tri:
    if any(v is True for v in values):
        return True
    if any(v is None for v in values):
        return None
    return False


def _implication(name: str, hypothesis: Tri, conclusion: Callable[[], Tri], detail: str) -> ClauseResult:
    if hypothesis is None:
        return ClauseResult(name, ClauseStatus.UNDECIDED, 'hipótesis indecidible')
    if hypothesis is False:
        return ClauseResult(name, ClauseStatus.VACUOUS, 'hipótesis falsa')
    verdict = conclusion()
    if verdict is None:
        return ClauseResult(name, ClauseStatus.UNDECIDED, f"conclusión indecidible: {detail}")
    status = ClauseStatus.HOLDS if verdict else ClauseStatus.COUNTEREXAMPLE
    return ClauseResult(name, status, detail)


def _alternative(name: str, hypothesis: Tri, predicate: Tri, detail: str) -> ClauseResult:
    if hypothesis is None:
        return ClauseResult(name, ClauseStatus.UNDECIDED, 'hipótesis indecidible')
    if hypothesis is False:
        return ClauseResult(name, ClauseStatus.VACUOUS, 'hipótesis falsa')
    if predicate is None:
        return ClauseResult(name, ClauseStatus.UNDECIDED, detail)
    return ClauseResult(name, ClauseStatus.HOLDS if predicate else ClauseStatus.NOT_MATCHED, detail)


def _const_is_zero(c: ConstExpr, env: ParamEnv) -> Tri:
    status = zero_test(c, env)
    if status is ZeroStatus.UNDECIDED:
        return None
    return status is ZeroStatus.ZERO


def _poly_is_zero(p: Poly, env: ParamEnv) -> Tri:
    if p.is_zero:
        return True
    if any(zero_test(c, env) is ZeroStatus.NONZERO for c in p.coeffs):
        return False
    return None


def _equal(a: ExPoly, b: ExPoly) -> Tri:
    return _attempt(lambda: a.equals(b))


class _Facts:
    """Hechos calculados una sola vez sobre (ecuación, f)."""

    def __init__(self, eq: Equation, f: ExPoly, precision: Optional[int]):
        self.eq = eq
        self.f = f
        self.env = eq.env
        self.view: NormalizedView = f.normalized_view()
        self.growth: Optional[GrowthReport] = _attempt(lambda: indicators(f, precision))
        self.borel: Tri = _attempt(lambda: is_borel_exceptional_zero(f, precision))
        self.klass = classify(f)
        self.a_zero: List[Tri] = [_const_is_zero(a, self.env) for a in eq.a]
        self.p_zero: Tri = _poly_is_zero(eq.P, self.env)

    @property
    def all_a_zero(self) -> Tri:
        return _and(*self.a_zero)

    @property
    def some_a_zero(self) -> Tri:
        return _or(*self.a_zero)

    def lambda_less_than_rho(self) -> Tri:
        if self.growth is None:
            return None
        return self.growth.lam < self.growth.rho

    def lambda_equals_rho(self) -> Tri:
        if self.growth is None:
            return None
        return self.growth.lam == self.growth.rho


def _clause_i(facts: _Facts) -> ClauseResult:
    growth = facts.growth
    degree = facts.eq.Q.degree

    def conclusion() -> Tri:
        if growth is None:
            return None
        return growth.rho == degree and growth.mean_type

    rho = growth.rho if growth else '?'
    return _implication('(i)', True, conclusion, f"rho(f) = {rho}, deg Q = {degree}")


def _clause_ii(facts: _Facts) -> Tuple[ClauseResult, ClauseResult]:
    forward = _implication(
        '(ii)->', facts.borel,
        lambda: _and(facts.all_a_zero, facts.p_zero),
        'cero excepcional de Borel => a_i = 0 y P = 0',
    )
    hypothesis = _and(facts.p_zero, facts.some_a_zero)
    if hypothesis is None:
        backward = ClauseResult('(ii)<-', ClauseStatus.UNDECIDED, 'hipótesis indecidible')
    elif hypothesis:
        backward = _implication(
            '(ii)<-', True,
            lambda: _and(facts.all_a_zero, facts.lambda_less_than_rho()),
            'P = 0 y algún a_i = 0 => todos los a_j = 0 y lambda < rho',
        )
    else:
        backward = _implication(
            '(ii)<-', True, facts.lambda_equals_rho,
            'en otro caso lambda = rho',
        )
    return forward, backward


def _clause_iii(facts: _Facts) -> Tuple[ClauseResult, ClauseResult]:
    in_gamma0p = facts.klass.belongs_to(ClassTag.GAMMA0P)
    forward = _implication(
        '(iii)->', in_gamma0p,
        lambda: _and(facts.all_a_zero, facts.p_zero),
        'f en Gamma0P => a_i = 0 y P = 0',
    )

    def conclusion() -> Tri:
        if in_gamma0p:
            return True
        terms = facts.eq.L.shifted_terms
        same_shifts = _attempt(
            lambda: all(is_identically_zero(t.c - terms[0].c) for t in terms[1:])
        )
        growth = facts.growth
        drop = None if growth is None else growth.lam == growth.rho - 1
        return _and(same_shifts, drop)

    backward = _implication(
        '(iii)<-', _and(facts.p_zero, facts.some_a_zero), conclusion,
        'lambda = rho - 1 con c_i = c_j, o bien f en Gamma0P',
    )
    return forward, backward


def _clause_iv(facts: _Facts) -> Tuple[ClauseResult, ClauseResult]:
    eq = facts.eq
    if eq.n < 3:
        return (ClauseResult('(iv)', ClauseStatus.VACUOUS, 'n < 3'),
                ClauseResult('(iv)card2', ClauseStatus.VACUOUS, 'n < 3'))
    try:
        card2, card3 = multiple_zero_cardinality(eq.p_polynomial())
        cards: Optional[Tuple[int, int]] = (card2, card3)
    except ValueError:
        cards = None
    detail = f"card2 = {cards[0]}, card3 = {cards[1]}" if cards else 'cardinalidad indecidible'
    multiple = None if cards is None else (cards[1] >= 1 or cards[0] >= 2)
    hypothesis = _and(facts.some_a_zero, multiple)
    main = _implication(
        '(iv)', hypothesis,
        lambda: _and(facts.p_zero, facts.all_a_zero, facts.klass.belongs_to(ClassTag.GAMMA0P)),
        detail,
    )
    impossible = _implication(
        '(iv)card2', facts.some_a_zero,
        lambda: None if cards is None else cards[0] < 2,
        detail,
    )
    return main, impossible


def _clause_v(facts: _Facts) -> List[ClauseResult]:
    eq, view = facts.eq, facts.view
    a1_nonzero: Tri = None
    if eq.n == 2:
        a1_zero = facts.a_zero[0]
        a1_nonzero = None if a1_zero is None else not a1_zero
    base = False if eq.n != 2 else a1_nonzero

    results = [_implication(
        '(v)(a)', _and(base, view.m >= 2),
        lambda: _and(
            _attempt(lambda: has_double_relation(view.omegas) is not None),
            facts.klass.belongs_to(ClassTag.GAMMA2P),
        ),
        f"m = {view.m}",
    )]

    hypothesis_b = _and(base, view.m == 1)
    if hypothesis_b is not True:
        for name in ('(v)(b)', '(v)(b)(I)', '(v)(b)(II)', '(v)(b)(III)'):
            results.append(_alternative(name, hypothesis_b, None, ''))
        return results

    a1 = eq.coefficient(1)
    h0, h1 = view.h0, view.h(1)
    omega = view.omegas[0]
    _, _, q_lower = eq.Q.split_leading()
    lower_factor = ExPoly.exp_of(q_lower, eq.q)
    lf = eq.L.apply(facts.f)
    _, coefficient_functions = compute_coefficient_functions(eq.L, view)
    a_1 = coefficient_functions[0]
    half_a1 = ExPoly.constant(-a1 / 2)
    common = _and(
        _equal(h0, half_a1),
        _equal(ExPoly.polynomial(eq.P), ExPoly.constant(-(a1 * a1) / 4)),
    )
    growth = facts.growth
    alt_i = _and(
        view.t == 1,
        None if growth is None else growth.rho == 1,
        h0.is_polynomial, h1.is_polynomial, eq.Q.degree == 1,
    )
    b0 = eq.L.b0
    alt_ii = _and(
        common,
        _equal(h1 * h1, lower_factor.scale(b0 * a1 / 2)),
        _equal(lf, h0.scale(b0)),
    )
    alt_iii = _and(
        common,
        _equal(h1 * h1, -(lower_factor * a_1)),
        _equal(lf, a_1 * ExPoly.exp_of(Poly.monomial(omega, view.t))),
    )
    results.append(_implication(
        '(v)(b)', True,
        lambda: _and(facts.klass.belongs_to(ClassTag.GAMMA1P), _or(alt_i, alt_ii, alt_iii)),
        'm = 1: f en Gamma1P y vale (I), (II) o (III)',
    ))
    results.append(_alternative('(v)(b)(I)', True, alt_i, 't = 1, H0 y H1 polinomios, deg Q = 1'))
    results.append(_alternative('(v)(b)(II)', True, alt_ii,
                                f"H1^2 = (b0 a1/2) q e^(Q_t-1), L = b0 H0, b0 = {b0.to_text()}"))
    results.append(_alternative('(v)(b)(III)', True, alt_iii,
                                f"H1^2 = -q e^(Q_t-1) A1, A1 = {a_1.to_text()}"))
    return results


def _clause_collinear(facts: _Facts) -> ClauseResult:
    view = facts.view
    if facts.eq.n != 2 or view.m == 0:
        return ClauseResult('collinear', ClauseStatus.VACUOUS, 'n != 2 o f polinomio')
    no_double = _attempt(lambda: has_double_relation(view.omegas) is None)
    collinear = _attempt(lambda: collinear_with_origin(view.omegas))
    return _implication('collinear', _and(no_double, collinear), lambda: view.m == 1,
                        f"m = {view.m}")


def check_theorem(eq: Equation, f: ExPoly, precision: Optional[int] = None) -> ClauseReport:
    """
    Evalúa cada cláusula del teorema sobre una solución verificada.

    Args:
        eq: Ecuación
        f: Solución de la ecuación
        precision: Dígitos de los encierros

    Returns:
        ClauseReport: Estado y diagnóstico por cláusula

    Raises:
        NotASolutionError: Si el residuo no es cero
    """
    rest = residual(eq, f)
    if not rest.is_zero:
        raise NotASolutionError(rest)
    if eq.L.apply(f).is_zero:
        return ClauseReport(tuple(
            ClauseResult(name, ClauseStatus.VACUOUS, 'L(z,f) es idénticamente nulo')
            for name in CLAUSE_NAMES
        ))

    facts = _Facts(eq, f, precision)
    clauses: List[ClauseResult] = [_clause_i(facts)]
    clauses.extend(_clause_ii(facts))
    clauses.extend(_clause_iii(facts))
    clauses.extend(_clause_iv(facts))
    clauses.extend(_clause_v(facts))
    clauses.append(_clause_collinear(facts))
    return ClauseReport(tuple(clauses))

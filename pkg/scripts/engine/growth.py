"""
Indicadores de crecimiento de polinomios exponenciales
EXPOL - Verificador de polinomios exponenciales

Orden rho, exponente de convergencia lambda y términos principales de T(r,f)
y N(r,1/f), obtenidos de la envolvente convexa de las frecuencias conjugadas:
T(r,f) = C(co(W0)) r^t / 2pi + o(r^t).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, Optional, Union

from .constfield import ConstExpr, eval_interval, real_sign
from .expoly import ExPoly
from .hullgeom import FrequencySet, convex_hull

MZERO = 'MZERO'


@dataclass(frozen=True)
class GrowthReport:
    """
    rho y lam son enteros (el orden de un polinomio exponencial es el grado t).
    n_leading_exact vale MZERO y n_leading None cuando N(r,1/f) = o(r^t).
    """
    rho: int
    lam: int
    t_leading_exact: ConstExpr
    t_leading: Any
    n_leading_exact: Union[ConstExpr, str]
    n_leading: Optional[Any]
    mean_type: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            'rho': self.rho,
            'lambda': self.lam,
            'T_leading': self.t_leading_exact.to_text(),
            'T_leading_value': float(self.t_leading.mid),
            'N_leading': MZERO if self.n_leading is None else self.n_leading_exact.to_text(),
            'N_leading_value': None if self.n_leading is None else float(self.n_leading.mid),
            'mean_type': self.mean_type,
        }


def _over_two_pi(c: ConstExpr) -> ConstExpr:
    return c / (ConstExpr.pi() * 2)


def indicators(f: ExPoly, precision: Optional[int] = None) -> GrowthReport:
    """
    Calcula rho, lambda, T_leading y N_leading de f.

    Args:
        f: Polinomio exponencial no nulo
        precision: Dígitos de los encierros

    Returns:
        GrowthReport: Indicadores de crecimiento

    Raises:
        ValueError: Si f es cero
        UndecidedError: Si el cálculo de la envolvente es indecidible
    """
    if f.is_zero:
        raise ValueError("Los indicadores de crecimiento requieren f no nula")
    if f.is_polynomial:
        zero = ConstExpr.zero()
        box = eval_interval(zero, precision).re
        return GrowthReport(0, 0, zero, box, MZERO, None, False)

    view = f.normalized_view()
    t = view.t
    w0_hull = convex_hull(FrequencySet.from_frequencies(view.omegas, adjoin_origin=True), precision)
    t_exact = _over_two_pi(w0_hull.circumference_exact)
    t_box = eval_interval(t_exact, precision).re
    mean_type = real_sign(w0_hull.circumference_exact) > 0

    if not view.h0.is_zero:
        return GrowthReport(t, t, t_exact, t_box, t_exact, t_box, mean_type)

    w_hull = convex_hull(FrequencySet.from_frequencies(view.omegas), precision)
    if view.m >= 2:
        lam = t
    else:
        h1 = view.h(1)
        lam = 0 if h1.is_polynomial else indicators(h1, precision).lam
    n_exact = _over_two_pi(w_hull.circumference_exact)
    if real_sign(n_exact) == 0:
        return GrowthReport(t, lam, t_exact, t_box, MZERO, None, mean_type)
    return GrowthReport(t, lam, t_exact, t_box, n_exact, eval_interval(n_exact, precision).re, mean_type)


def is_borel_exceptional_zero(f: ExPoly, precision: Optional[int] = None) -> bool:
    """lambda(f) < rho(f); falso para polinomios."""
    if f.is_polynomial:
        return False
    report = indicators(f, precision)
    return report.lam < report.rho

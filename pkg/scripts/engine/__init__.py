"""
Motor simbólico de EXPOL: constantes exactas, polinomios, polinomios
exponenciales, operadores de retardo-diferencial y verificación del teorema
"""

from .classifier import (
    CLAUSE_NAMES, ClassTag, ClauseReport, ClauseResult, ClauseStatus, Equation, SolutionClass,
    check_theorem, classify, compute_coefficient_functions, is_solution, residual,
    residual_enclosure,
)
from .constfield import (
    EMPTY_ENV, ComplexBox, ConstExpr, ParamEnv, ZeroStatus, canonicalize, eval_interval,
    is_identically_zero, use_precision, zero_test,
)
from .delayop import DelayDiffOp, OpTerm, delta
from .errors import (
    CaseSyntaxError, ExpolError, NotASolutionError, UnassignedParameterError, UndecidedError,
)
from .expoly import ExPoly, ExpTerm, NormalizedView
from .growth import MZERO, GrowthReport, indicators, is_borel_exceptional_zero
from .hullgeom import (
    FrequencySet, HullKind, HullResult, circumference, collinear_with_origin, convex_hull,
    has_double_relation,
)
from .poly import Poly, gcd, multiple_zero_cardinality

__all__ = [
    'CLAUSE_NAMES', 'ClassTag', 'ClauseReport', 'ClauseResult', 'ClauseStatus', 'Equation',
    'SolutionClass', 'check_theorem', 'classify', 'compute_coefficient_functions', 'is_solution',
    'residual', 'residual_enclosure',
    'EMPTY_ENV', 'ComplexBox', 'ConstExpr', 'ParamEnv', 'ZeroStatus', 'canonicalize',
    'eval_interval', 'is_identically_zero', 'use_precision', 'zero_test',
    'DelayDiffOp', 'OpTerm', 'delta',
    'CaseSyntaxError', 'ExpolError', 'NotASolutionError', 'UnassignedParameterError',
    'UndecidedError',
    'ExPoly', 'ExpTerm', 'NormalizedView',
    'MZERO', 'GrowthReport', 'indicators', 'is_borel_exceptional_zero',
    'FrequencySet', 'HullKind', 'HullResult', 'circumference', 'collinear_with_origin',
    'convex_hull', 'has_double_relation',
    'Poly', 'gcd', 'multiple_zero_cardinality',
]

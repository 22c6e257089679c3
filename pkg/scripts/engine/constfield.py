"""
Constantes complejas simbólicas exactas
EXPOL - Verificador de polinomios exponenciales

Una ConstExpr envuelve una expresión de sympy en forma canónica. Los átomos
permitidos son racionales, i, pi, log(q) con q racional positivo, exp(...) y
parámetros con nombre. La prueba de cero es de tres valores: ZERO sólo si la
forma canónica es literalmente 0; NONZERO sólo si un encierro por intervalos
(mpmath.iv) excluye el 0; UNDECIDED en cualquier otro caso.
"""

from __future__ import annotations

import contextvars
import threading
from contextlib import contextmanager
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, FrozenSet, Iterator, Mapping, Optional, Tuple, Union

import sympy as sp
from mpmath import iv

from .errors import UndecidedError, UnassignedParameterError

DEFAULT_PRECISION = 50
PRECISION_LADDER = (50, 200, 1000)
MIN_PRECISION = 16

_MAX_PASSES = 6
_GUARD_DIGITS = 10

# mpmath.iv guarda la precisión en el contexto global; se serializa el acceso
_IV_LOCK = threading.RLock()


class ZeroStatus(Enum):
    """Resultado de la prueba de cero."""
    ZERO = 'ZERO'
    NONZERO = 'NONZERO'
    UNDECIDED = 'UNDECIDED'


@dataclass(frozen=True)
class PrecisionPolicy:
    """Precisión inicial (dígitos) y escalera de escalamiento."""
    digits: int = DEFAULT_PRECISION
    ladder: Tuple[int, ...] = PRECISION_LADDER

    def __post_init__(self):
        if self.digits < MIN_PRECISION:
            raise ValueError(f"La precisión debe ser de al menos {MIN_PRECISION} dígitos")

    def steps(self) -> Tuple[int, ...]:
        """Dígitos a probar: la precisión inicial y luego los escalones mayores."""
        return (self.digits,) + tuple(d for d in self.ladder if d > self.digits)


_POLICY: contextvars.ContextVar[PrecisionPolicy] = contextvars.ContextVar(
    'expol_precision_policy', default=PrecisionPolicy()
)


def current_policy() -> PrecisionPolicy:
    return _POLICY.get()


@contextmanager
def use_precision(digits: int, ladder: Optional[Tuple[int, ...]] = None) -> Iterator[PrecisionPolicy]:
    """
    Fija la política de precisión para el bloque actual (contextvar, seguro entre hilos).

    Args:
        digits: Dígitos iniciales
        ladder: Escalera de escalamiento (por defecto la estándar)
    """
    policy = PrecisionPolicy(digits, tuple(ladder) if ladder else PRECISION_LADDER)
    token = _POLICY.set(policy)
    try:
        yield policy
    finally:
        _POLICY.reset(token)


@dataclass(frozen=True)
class ParamEnv:
    """
    Parámetros declarados y cuáles se suponen no nulos.
    Un parámetro marcado NONZERO nunca se reporta ZERO.
    """
    params: FrozenSet[str] = frozenset()
    nonzero: FrozenSet[str] = frozenset()

    def __post_init__(self):
        if not self.nonzero <= self.params:
            raise ValueError("Todo parámetro no nulo debe estar declarado")

    def declare(self, name: str, nonzero: bool = False) -> 'ParamEnv':
        params = self.params | {name}
        flagged = self.nonzero | {name} if nonzero else self.nonzero - {name}
        return ParamEnv(frozenset(params), frozenset(flagged))

    def is_nonzero(self, name: str) -> bool:
        return name in self.nonzero


EMPTY_ENV = ParamEnv()


# ---------------------------------------------------------------------------
# Forma canónica
# ---------------------------------------------------------------------------

def _is_splittable_log(e: sp.Basic) -> bool:
    if not isinstance(e, sp.log):
        return False
    arg = e.args[0]
    return arg.is_Rational and arg.is_positive and not (arg.is_Integer and sp.isprime(arg))


def _split_log(e: sp.Basic) -> sp.Expr:
    """log(p/q) -> suma de logaritmos de primos."""
    arg = e.args[0]
    result = sp.Integer(0)
    for prime, k in sp.factorint(arg.p).items():
        result += k * sp.log(sp.Integer(prime))
    for prime, k in sp.factorint(arg.q).items():
        result -= k * sp.log(sp.Integer(prime))
    return result


def _is_foldable_power(e: sp.Basic) -> bool:
    if not e.is_Pow or e.exp.free_symbols:
        return False
    base, exponent = e.base, e.exp
    if base == -1:
        return exponent.is_Rational and not exponent.is_Integer
    return base.is_Rational and base.is_positive and not exponent.is_Rational


def _root_of_unity(k: sp.Rational) -> sp.Expr:
    """exp(k*pi*i) con k reducido a (-1, 1]."""
    k = sp.Rational(k) % 2
    if k > 1:
        k -= 2
    return sp.exp(k * sp.pi * sp.I)


def _power_to_exp(e: sp.Basic) -> sp.Expr:
    if e.base == -1:
        return _root_of_unity(e.exp)
    return sp.exp(e.exp * sp.log(e.base))


def _fold_exp(e: sp.Basic) -> sp.Expr:
    """exp(r*log q) -> q^r, exp(k*pi*i) -> raíz de la unidad, exp(a+b) -> exp(a)*exp(b)."""
    arg = sp.expand(e.args[0])
    factor = sp.Integer(1)
    rest = []
    for term in sp.Add.make_args(arg):
        coeff, body = term.as_coeff_Mul()
        if coeff.is_Rational and isinstance(body, sp.log) and body.args[0].is_Rational \
                and body.args[0].is_positive:
            factor *= body.args[0] ** coeff
        elif coeff.is_Rational and body == sp.pi * sp.I:
            factor *= _root_of_unity(coeff)
        else:
            rest.append(term)
    result = factor
    for term in rest:
        result *= sp.exp(term)
    return result


def _has_sum_denominator(expr: sp.Expr) -> bool:
    return any(
        node.is_Pow and node.exp.is_negative and node.base.is_Add
        for node in sp.preorder_traversal(expr)
    )


def _rewrite_pass(expr: sp.Expr) -> sp.Expr:
    expr = expr.replace(_is_splittable_log, _split_log)
    expr = expr.replace(_is_foldable_power, _power_to_exp)
    expr = sp.expand(expr)
    expr = expr.replace(lambda node: isinstance(node, sp.exp), _fold_exp)
    expr = sp.expand(expr)
    if _has_sum_denominator(expr):
        expr = sp.cancel(expr)
    return expr


def _canonical(expr: sp.Expr) -> sp.Expr:
    expr = sp.sympify(expr)
    if expr.is_Rational:
        return expr
    for _ in range(_MAX_PASSES):
        rewritten = _rewrite_pass(expr)
        if rewritten == expr:
            break
        expr = rewritten
    return expr


# ---------------------------------------------------------------------------
# Encierros complejos por intervalos
# ---------------------------------------------------------------------------

class _EnclosureError(ArithmeticError):
    """El encierro no pudo calcularse a esta precisión (p. ej. divisor que contiene 0)."""


@contextmanager
def working_precision(digits: int) -> Iterator[None]:
    """Fija iv.dps (más dígitos de guarda) mientras dura el bloque."""
    with _IV_LOCK:
        saved = iv.dps
        iv.dps = digits + _GUARD_DIGITS
        try:
            yield
        finally:
            iv.dps = saved


def _real(value: Any) -> Any:
    return iv.mpf(value)


@dataclass(frozen=True)
class ComplexBox:
    """Rectángulo re x im de intervalos que encierra un número complejo."""
    re: Any
    im: Any

    @classmethod
    def of(cls, re: Any = 0, im: Any = 0) -> 'ComplexBox':
        return cls(_real(re), _real(im))

    def __add__(self, other: 'ComplexBox') -> 'ComplexBox':
        return ComplexBox(self.re + other.re, self.im + other.im)

    def __sub__(self, other: 'ComplexBox') -> 'ComplexBox':
        return ComplexBox(self.re - other.re, self.im - other.im)

    def __neg__(self) -> 'ComplexBox':
        return ComplexBox(-self.re, -self.im)

    def __mul__(self, other: 'ComplexBox') -> 'ComplexBox':
        return ComplexBox(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __truediv__(self, other: 'ComplexBox') -> 'ComplexBox':
        denom = other.re ** 2 + other.im ** 2
        if 0 in denom:
            raise _EnclosureError("divisor cuyo encierro contiene 0")
        return ComplexBox(
            (self.re * other.re + self.im * other.im) / denom,
            (self.im * other.re - self.re * other.im) / denom,
        )

    def __pow__(self, k: int) -> 'ComplexBox':
        if k < 0:
            return ComplexBox.of(1) / (self ** (-k))
        result = ComplexBox.of(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> 'ComplexBox':
        return ComplexBox(self.re, -self.im)

    def exp(self) -> 'ComplexBox':
        modulus = iv.exp(self.re)
        return ComplexBox(modulus * iv.cos(self.im), modulus * iv.sin(self.im))

    def is_real(self) -> bool:
        return self.im.a == 0 and self.im.b == 0

    def log(self) -> 'ComplexBox':
        if not self.is_real() or not self.re.a > 0:
            raise _EnclosureError("logaritmo fuera de los reales positivos")
        return ComplexBox(iv.log(self.re), _real(0))

    def magnitude(self) -> Any:
        """Encierro real de |z|."""
        return iv.sqrt(self.re ** 2 + self.im ** 2)

    def contains_zero(self) -> bool:
        return 0 in self.re and 0 in self.im

    def overlaps(self, other: 'ComplexBox') -> bool:
        return _intervals_meet(self.re, other.re) and _intervals_meet(self.im, other.im)

    def width(self) -> Any:
        return max(self.re.delta, self.im.delta)

    def midpoint(self) -> complex:
        return complex(float(self.re.mid), float(self.im.mid))

    def describe(self, digits: int = 15) -> str:
        mid = self.midpoint()
        return f"{mid.real:.{digits}g}{mid.imag:+.{digits}g}i (±{float(self.width()):.1e})"


def _intervals_meet(a: Any, b: Any) -> bool:
    return not (a.b < b.a or b.b < a.a)


def _enclose(expr: sp.Expr, values: Mapping[str, 'ConstExpr']) -> ComplexBox:
    if expr.is_Rational:
        return ComplexBox(iv.mpf(expr.p) / iv.mpf(expr.q), _real(0))
    if expr == sp.I:
        return ComplexBox.of(0, 1)
    if expr == sp.pi:
        return ComplexBox(iv.mpf(iv.pi), _real(0))
    if expr == sp.E:
        return ComplexBox(iv.mpf(iv.e), _real(0))
    if expr.is_Symbol:
        if expr.name not in values:
            raise UnassignedParameterError(expr.name)
        return _enclose(values[expr.name].expr, values)
    if expr.is_Add:
        total = ComplexBox.of(0)
        for arg in expr.args:
            total = total + _enclose(arg, values)
        return total
    if expr.is_Mul:
        product = ComplexBox.of(1)
        for arg in expr.args:
            product = product * _enclose(arg, values)
        return product
    if isinstance(expr, sp.exp):
        return _enclose(expr.args[0], values).exp()
    if isinstance(expr, sp.log):
        return _enclose(expr.args[0], values).log()
    if isinstance(expr, sp.conjugate):
        return _enclose(expr.args[0], values).conjugate()
    if isinstance(expr, sp.Abs):
        return ComplexBox(_enclose(expr.args[0], values).magnitude(), _real(0))
    if expr.is_Pow:
        base, exponent = expr.base, expr.exp
        if exponent.is_Integer:
            return _enclose(base, values) ** int(exponent)
        if base == -1 and exponent.is_Rational:
            return _enclose(exponent * sp.pi * sp.I, values).exp()
        base_box = _enclose(base, values)
        return (_enclose(exponent, values) * base_box.log()).exp()
    raise ValueError(f"Nodo no soportado en la evaluación: {expr.func.__name__}")


# ---------------------------------------------------------------------------
# Impresión con la gramática de los archivos de caso
# ---------------------------------------------------------------------------

def _is_atom_text(expr: sp.Expr) -> bool:
    if expr.is_Integer:
        return expr >= 0
    return expr.is_Symbol or expr in (sp.I, sp.pi, sp.E) or isinstance(
        expr, (sp.exp, sp.log, sp.Abs)
    )


def _wrap(expr: sp.Expr) -> str:
    text = _render(expr)
    return text if _is_atom_text(expr) else f"({text})"


def _render(expr: sp.Expr) -> str:
    if expr.is_Integer:
        return str(expr.p)
    if expr.is_Rational:
        return f"{expr.p}/{expr.q}"
    if expr == sp.I:
        return 'i'
    if expr == sp.pi:
        return 'pi'
    if expr == sp.E:
        return 'exp(1)'
    if expr.is_Symbol:
        return f"param({expr.name})"
    if isinstance(expr, sp.exp):
        return f"exp({_render(expr.args[0])})"
    if isinstance(expr, sp.log):
        return f"log({_render(expr.args[0])})"
    if isinstance(expr, sp.Abs):
        return f"abs({_render(expr.args[0])})"
    if expr.is_Add:
        parts = []
        for term in expr.as_ordered_terms():
            text = _render(term)
            if not parts:
                parts.append(text)
            elif text.startswith('-'):
                parts.append(f" - {text[1:]}")
            else:
                parts.append(f" + {text}")
        return ''.join(parts)
    if expr.is_Mul:
        coeff, rest = expr.as_coeff_Mul()
        if coeff.is_negative:
            return '-' + _render(-expr)
        numer, denom = [], []
        if coeff.is_Rational:
            if coeff.p != 1:
                numer.append(str(coeff.p))
            if coeff.q != 1:
                denom.append(str(coeff.q))
            factors = sp.Mul.make_args(rest)
        else:
            factors = expr.args
        for factor in factors:
            if factor == 1:
                continue
            if factor.is_Pow and factor.exp.is_Integer and factor.exp < 0:
                denom.append(_wrap(factor.base ** (-factor.exp)))
            else:
                numer.append(_wrap(factor))
        text = '*'.join(numer) if numer else '1'
        if denom:
            bottom = denom[0] if len(denom) == 1 else f"({'*'.join(denom)})"
            text = f"{text}/{bottom}"
        return text
    if expr.is_Pow:
        base, exponent = expr.base, expr.exp
        if exponent == sp.Rational(1, 2):
            return f"sqrt({_render(base)})"
        if exponent.is_Integer and exponent < 0:
            return f"1/{_wrap(base ** (-exponent))}"
        exp_text = _render(exponent) if exponent.is_Integer else f"({_render(exponent)})"
        return f"{_wrap(base)}^{exp_text}"
    raise ValueError(f"No se puede imprimir el nodo: {expr.func.__name__}")


# ---------------------------------------------------------------------------
# ConstExpr
# ---------------------------------------------------------------------------

Scalar = Union['ConstExpr', int, Fraction]


@dataclass(frozen=True)
class ConstExpr:
    """
    Constante compleja exacta. Los valores son inmutables y ya canónicos
    cuando se construyen con los métodos de clase o con la aritmética.
    """
    expr: sp.Expr

    # -- constructores -----------------------------------------------------

    @classmethod
    def of(cls, value: Union[Scalar, sp.Expr]) -> 'ConstExpr':
        if isinstance(value, ConstExpr):
            return value
        if isinstance(value, Fraction):
            return cls(sp.Rational(value.numerator, value.denominator))
        if isinstance(value, bool):
            raise TypeError("Un booleano no es una constante")
        if isinstance(value, int):
            return cls(sp.Integer(value))
        if isinstance(value, sp.Basic):
            return cls(_canonical(value))
        raise TypeError(f"No se puede convertir a constante: {value!r}")

    @classmethod
    def rational(cls, numerator: int, denominator: int = 1) -> 'ConstExpr':
        if denominator == 0:
            raise ZeroDivisionError("Denominador racional nulo")
        return cls(sp.Rational(numerator, denominator))

    @classmethod
    def zero(cls) -> 'ConstExpr':
        return cls(sp.Integer(0))

    @classmethod
    def one(cls) -> 'ConstExpr':
        return cls(sp.Integer(1))

    @classmethod
    def imaginary_unit(cls) -> 'ConstExpr':
        return cls(sp.I)

    @classmethod
    def pi(cls) -> 'ConstExpr':
        return cls(sp.pi)

    @classmethod
    def log_of(cls, value: Scalar) -> 'ConstExpr':
        """log(q) para q racional positivo."""
        arg = cls.of(value)
        if not arg.is_rational or arg.expr <= 0:
            raise ValueError(f"log sólo admite racionales positivos: {arg.to_text()}")
        return cls(_canonical(sp.log(arg.expr)))

    @classmethod
    def param(cls, name: str) -> 'ConstExpr':
        return cls(sp.Symbol(name))

    # -- consultas -----------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return bool(self.expr.is_Rational)

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"No es racional: {self.to_text()}")
        return Fraction(int(self.expr.p), int(self.expr.q))

    @property
    def is_literal_zero(self) -> bool:
        return self.expr == 0

    @property
    def is_literal_one(self) -> bool:
        return self.expr == 1

    @property
    def free_params(self) -> FrozenSet[str]:
        return frozenset(symbol.name for symbol in self.expr.free_symbols)

    def to_text(self) -> str:
        return _render(self.expr)

    def __str__(self) -> str:
        return self.to_text()

    # -- aritmética ---------------------------------------------------------

    def _combine(self, result: sp.Expr) -> 'ConstExpr':
        if result.is_Rational:
            return ConstExpr(result)
        return ConstExpr(_canonical(result))

    def __add__(self, other: Scalar) -> 'ConstExpr':
        return self._combine(self.expr + ConstExpr.of(other).expr)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> 'ConstExpr':
        return self._combine(self.expr - ConstExpr.of(other).expr)

    def __rsub__(self, other: Scalar) -> 'ConstExpr':
        return self._combine(ConstExpr.of(other).expr - self.expr)

    def __mul__(self, other: Scalar) -> 'ConstExpr':
        return self._combine(self.expr * ConstExpr.of(other).expr)

    __rmul__ = __mul__

    def __neg__(self) -> 'ConstExpr':
        return ConstExpr(-self.expr) if self.is_rational else self._combine(-self.expr)

    def __truediv__(self, other: Scalar) -> 'ConstExpr':
        divisor = ConstExpr.of(other)
        if zero_test(divisor) is ZeroStatus.ZERO:
            raise ZeroDivisionError(f"División por una constante nula: {divisor.to_text()}")
        return self._combine(self.expr / divisor.expr)

    def __rtruediv__(self, other: Scalar) -> 'ConstExpr':
        return ConstExpr.of(other) / self

    def __pow__(self, k: int) -> 'ConstExpr':
        if not isinstance(k, int):
            raise TypeError("Use power() para exponentes no enteros")
        if k < 0:
            return ConstExpr.one() / (self ** (-k))
        return self._combine(self.expr ** k)

    def power(self, exponent: Scalar) -> 'ConstExpr':
        """
        Potencia general: exponente entero, o base racional positiva (b^e = exp(e log b)),
        o base -1 con exponente racional.
        """
        exponent = ConstExpr.of(exponent)
        if exponent.is_rational and exponent.expr.is_Integer:
            return self ** int(exponent.expr)
        if self.is_rational and self.expr > 0:
            return ConstExpr(_canonical(sp.exp(exponent.expr * sp.log(self.expr))))
        if self.expr == -1 and exponent.is_rational:
            return ConstExpr(_canonical(_root_of_unity(exponent.expr)))
        raise ValueError(
            f"Potencia no soportada: ({self.to_text()})^({exponent.to_text()})"
        )

    def exp(self) -> 'ConstExpr':
        return ConstExpr(_canonical(sp.exp(self.expr)))

    def conjugate(self) -> 'ConstExpr':
        return ConstExpr(_canonical(sp.conjugate(self.expr)))

    def modulus(self) -> 'ConstExpr':
        """|c| como constante exacta (raíz cuadrada de c * conj(c))."""
        return ConstExpr(_canonical(sp.Abs(self.expr)))


def canonicalize(e: ConstExpr) -> ConstExpr:
    """
    Punto fijo de las reglas de reescritura (idempotente).

    Args:
        e: Constante (posiblemente construida sin canonizar)

    Returns:
        ConstExpr: Forma canónica
    """
    return ConstExpr(_canonical(e.expr))


def eval_interval(e: ConstExpr, precision: Optional[int] = None,
                  values: Optional[Mapping[str, ConstExpr]] = None) -> ComplexBox:
    """
    Encierro complejo de la constante.

    Args:
        e: Constante
        precision: Dígitos decimales (por defecto la política vigente)
        values: Valores de prueba para los parámetros

    Returns:
        ComplexBox: Rectángulo que contiene el valor exacto

    Raises:
        UnassignedParameterError: Si un parámetro no tiene valor asignado
        UndecidedError: Si el encierro no puede calcularse a esa precisión
    """
    digits = precision or current_policy().digits
    with working_precision(digits):
        try:
            return _enclose(canonicalize(e).expr, values or {})
        except _EnclosureError as error:
            raise UndecidedError(f"No se pudo encerrar la constante ({error})", e.to_text())


def _numeric_status(expr: sp.Expr, policy: PrecisionPolicy) -> ZeroStatus:
    if expr.is_Rational:
        return ZeroStatus.ZERO if expr == 0 else ZeroStatus.NONZERO
    for digits in policy.steps():
        with working_precision(digits):
            try:
                box = _enclose(expr, {})
            except _EnclosureError:
                continue
            if not box.contains_zero():
                return ZeroStatus.NONZERO
    return ZeroStatus.UNDECIDED


def _parameter_numerator(expr: sp.Expr) -> Optional[sp.Poly]:
    numer, _ = sp.fraction(sp.together(expr))
    symbols = sorted(expr.free_symbols, key=lambda s: s.name)
    try:
        return sp.Poly(sp.expand(numer), *symbols)
    except sp.PolynomialError:
        return None


def zero_test(e: ConstExpr, env: ParamEnv = EMPTY_ENV,
              precision: Optional[int] = None) -> ZeroStatus:
    """
    Prueba de cero de tres valores.

    Args:
        e: Constante
        env: Parámetros declarados y supuestos de no nulidad
        precision: Dígitos iniciales (>= 16); se escala según la política vigente

    Returns:
        ZeroStatus: ZERO, NONZERO o UNDECIDED
    """
    policy = current_policy()
    if precision is not None:
        policy = PrecisionPolicy(precision, policy.ladder)
    expr = canonicalize(e).expr
    if expr == 0:
        return ZeroStatus.ZERO
    if not expr.free_symbols:
        return _numeric_status(expr, policy)

    poly = _parameter_numerator(expr)
    if poly is None:
        return ZeroStatus.UNDECIDED
    terms = [(monom, _canonical(coeff)) for monom, coeff in poly.terms()]
    statuses = [_numeric_status(coeff, policy) for _, coeff in terms]
    if all(status is ZeroStatus.ZERO for status in statuses):
        return ZeroStatus.ZERO
    if len(terms) == 1 and statuses[0] is ZeroStatus.NONZERO:
        monom = terms[0][0]
        involved = [gen.name for gen, k in zip(poly.gens, monom) if k > 0]
        if all(env.is_nonzero(name) for name in involved):
            return ZeroStatus.NONZERO
    return ZeroStatus.UNDECIDED


def is_identically_zero(e: ConstExpr) -> bool:
    """
    Decide si la constante es idénticamente cero (como polinomio en los
    parámetros, si los hay). Es la igualdad que usan Poly y ExPoly.

    Raises:
        UndecidedError: Si algún coeficiente queda INDECIDIDO
    """
    expr = canonicalize(e).expr
    if expr == 0:
        return True
    policy = current_policy()
    if not expr.free_symbols:
        status = _numeric_status(expr, policy)
        if status is ZeroStatus.UNDECIDED:
            raise UndecidedError("No se pudo decidir si la constante se anula", e.to_text())
        return status is ZeroStatus.ZERO

    poly = _parameter_numerator(expr)
    if poly is None:
        raise UndecidedError("Constante no polinomial en sus parámetros", e.to_text())
    undecided = False
    for coeff in poly.coeffs():
        status = _numeric_status(_canonical(coeff), policy)
        if status is ZeroStatus.NONZERO:
            return False
        undecided = undecided or status is ZeroStatus.UNDECIDED
    if undecided:
        raise UndecidedError("No se pudo decidir si la constante se anula", e.to_text())
    return True


def real_sign(e: ConstExpr) -> int:
    """
    Signo exacto de una constante real: -1, 0 ó 1.

    Raises:
        UndecidedError: Si el signo no se certifica en la escalera de precisión
    """
    expr = canonicalize(e).expr
    if expr.is_Rational:
        return int(bool(expr > 0)) - int(bool(expr < 0))
    if expr == 0:
        return 0
    for digits in current_policy().steps():
        with working_precision(digits):
            try:
                box = _enclose(expr, {})
            except _EnclosureError:
                continue
            if box.re.a > 0:
                return 1
            if box.re.b < 0:
                return -1
    raise UndecidedError("Signo indecidible", e.to_text())

"""
Archivos de caso (.case): función, ecuación, operador, parámetros y expectativas
EXPOL - Verificador de polinomios exponenciales

Formato por secciones, una clave por línea y comentarios con '#':

    [params]
    a1 = nonzero
    [function]
    f = -param(a1)/2 + 2*exp(3*z)
    [equation]
    n = 2
    a1 = param(a1)
    q = 8/(3*param(a1))
    Q = 6*z
    P = -param(a1)^2/4
    [operator]
    L = 3*f(z) + f'(z + log(2)) - 3*f''(z + 2*pi*i)
    [expect]
    residual = 0
    class = GAMMA1P
    (v)(b)(II) = HOLDS
"""

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from engine.classifier import CLAUSE_NAMES, ClassTag, ClauseStatus, Equation
from engine.constfield import EMPTY_ENV, ConstExpr, ParamEnv
from engine.errors import CaseSyntaxError
from engine.expoly import ExPoly
from engine.poly import Poly

from .expression import ExpressionParser
from .operator import OperatorParser

SECTIONS = ('params', 'function', 'equation', 'operator', 'expect')
REQUIRED_SECTIONS = ('function', 'equation', 'operator')
PARAM_KINDS = ('nonzero', 'any')
COEFFICIENT_KEY = re.compile(r'^a([1-9][0-9]*)$')
EXPECT_KEYS = ('residual', 'class', 'rho', 'lambda')


@dataclass(frozen=True)
class Expectation:
    """Resultados esperados declarados en la sección [expect]."""
    residual_zero: Optional[bool] = None
    class_tag: Optional[ClassTag] = None
    rho: Optional[int] = None
    lam: Optional[int] = None
    clauses: Tuple[Tuple[str, ClauseStatus], ...] = ()

    @property
    def is_empty(self) -> bool:
        return (self.residual_zero is None and self.class_tag is None and self.rho is None
                and self.lam is None and not self.clauses)


@dataclass(frozen=True)
class CaseFile:
    name: str
    env: ParamEnv
    function: ExPoly
    equation: Equation
    expect: Expectation = field(default_factory=Expectation)

    @property
    def operator(self):
        return self.equation.L

    def equals(self, other: 'CaseFile') -> bool:
        """Igualdad estructural (la que preserva el ciclo imprimir/parsear)."""
        mine, theirs = self.equation, other.equation
        return (
            self.env == other.env
            and self.function.equals(other.function)
            and mine.n == theirs.n
            and mine.a == theirs.a
            and mine.q.equals(theirs.q)
            and mine.Q.equals(theirs.Q)
            and mine.P.equals(theirs.P)
            and mine.L.terms == theirs.L.terms
            and self.expect == other.expect
        )

    def to_text(self) -> str:
        """Imprime el caso en el mismo formato que lee parse_case_file()."""
        lines = [f"# {self.name}"]
        if self.env.params:
            lines.append('[params]')
            for name in sorted(self.env.params):
                kind = 'nonzero' if self.env.is_nonzero(name) else 'any'
                lines.append(f"{name} = {kind}")
        eq = self.equation
        lines.extend(['[function]', f"f = {self.function.to_text()}"])
        lines.extend(['[equation]', f"n = {eq.n}"])
        for index, coefficient in enumerate(eq.a, start=1):
            if not coefficient.is_literal_zero:
                lines.append(f"a{index} = {coefficient.to_text()}")
        lines.extend([f"q = {eq.q.to_text()}", f"Q = {eq.Q.to_text()}", f"P = {eq.P.to_text()}"])
        lines.extend(['[operator]', f"L = {eq.L.to_text()}"])
        if not self.expect.is_empty:
            lines.append('[expect]')
            if self.expect.residual_zero is not None:
                lines.append(f"residual = {'0' if self.expect.residual_zero else 'nonzero'}")
            if self.expect.class_tag is not None:
                lines.append(f"class = {self.expect.class_tag.value}")
            if self.expect.rho is not None:
                lines.append(f"rho = {self.expect.rho}")
            if self.expect.lam is not None:
                lines.append(f"lambda = {self.expect.lam}")
            for name, status in self.expect.clauses:
                lines.append(f"{name} = {status.value}")
        return '\n'.join(lines) + '\n'


@dataclass(frozen=True)
class _Entry:
    value: str
    line: int
    column: int
    key_column: int


class CaseFileParser:
    """Parser de archivos .case; delega las expresiones en los parsers de precedencia."""

    def __init__(self, source_name: str = 'caso'):
        self.source_name = source_name
        self.sections: Dict[str, Dict[str, _Entry]] = {}
        self.headers: Dict[str, Tuple[int, int]] = {}
        self.last_line = 1

    def parse(self, text: str) -> CaseFile:
        """
        Parsea el texto completo de un caso.

        Args:
            text: Contenido del archivo

        Returns:
            CaseFile: Ecuación, función, operador y expectativas

        Raises:
            CaseSyntaxError: Con la línea y columna del primer problema
        """
        self.sections, self.headers = {}, {}
        self.collect(text)
        for name in REQUIRED_SECTIONS:
            if name not in self.sections:
                raise CaseSyntaxError(f"Falta la sección [{name}]", self.last_line, 1)

        env = self.read_params()
        expressions = ExpressionParser(env, self.source_name)
        function = self.read_required('function', 'f', expressions.parse)
        if function.is_zero:
            entry = self.sections['function']['f']
            raise CaseSyntaxError("f no puede ser idénticamente nula", entry.line, entry.column)
        operator = self.read_required('operator', 'L', OperatorParser(env, self.source_name).parse)
        equation = self.read_equation(env, expressions, operator)
        return CaseFile(Path(self.source_name).stem, env, function, equation, self.read_expect())

    # -- líneas y secciones -------------------------------------------------

    def collect(self, text: str) -> None:
        current: Optional[str] = None
        lines = text.splitlines()
        self.last_line = len(lines) + 1
        for number, raw in enumerate(lines, start=1):
            content = raw.split('#', 1)[0]
            stripped = content.strip()
            if not stripped:
                continue
            indent = len(content) - len(content.lstrip())
            if stripped.startswith('['):
                current = self.open_section(stripped, number, indent + 1)
                continue
            if current is None:
                raise CaseSyntaxError("Clave fuera de sección", number, indent + 1)
            self.add_entry(current, content, number, indent)

    def open_section(self, header: str, line: int, column: int) -> str:
        if not header.endswith(']'):
            raise CaseSyntaxError("Se esperaba ']' al final de la sección", line, column + len(header))
        name = header[1:-1].strip()
        if name not in SECTIONS:
            raise CaseSyntaxError(f"Sección desconocida: [{name}]", line, column)
        if name in self.sections:
            raise CaseSyntaxError(f"Sección repetida: [{name}]", line, column)
        self.sections[name] = {}
        self.headers[name] = (line, column)
        return name

    def add_entry(self, section: str, content: str, line: int, indent: int) -> None:
        equals = content.find('=')
        if equals < 0:
            raise CaseSyntaxError("Se esperaba 'clave = valor'", line, indent + 1)
        key = content[:equals].strip()
        if not key:
            raise CaseSyntaxError("Falta la clave antes de '='", line, indent + 1)
        start = equals + 1
        while start < len(content) and content[start].isspace():
            start += 1
        if key in self.sections[section]:
            raise CaseSyntaxError(f"Clave repetida en [{section}]: {key}", line, indent + 1)
        self.sections[section][key] = _Entry(content[start:].rstrip(), line, start + 1, indent + 1)

    def entries(self, section: str) -> Dict[str, _Entry]:
        return self.sections.get(section, {})

    def reject_unknown(self, section: str, allowed) -> None:
        for key, entry in self.entries(section).items():
            if key not in allowed:
                raise CaseSyntaxError(f"Clave desconocida en [{section}]: {key}", entry.line, entry.key_column)

    def read_required(self, section: str, key: str, parse):
        self.reject_unknown(section, (key,))
        entry = self.entries(section).get(key)
        if entry is None:
            line, column = self.headers[section]
            raise CaseSyntaxError(f"Falta la clave '{key}' en [{section}]", line, column)
        return parse(entry.value, entry.line, entry.column)

    # -- secciones ----------------------------------------------------------

    def read_params(self) -> ParamEnv:
        env = EMPTY_ENV
        for name, entry in self.entries('params').items():
            if not name.isidentifier():
                raise CaseSyntaxError(f"Nombre de parámetro inválido: {name}", entry.line, entry.key_column)
            if entry.value not in PARAM_KINDS:
                raise CaseSyntaxError("Se esperaba 'nonzero' o 'any'", entry.line, entry.column)
            env = env.declare(name, nonzero=entry.value == 'nonzero')
        return env

    def read_equation(self, env: ParamEnv, expressions: ExpressionParser, operator) -> Equation:
        entries = self.entries('equation')
        n = self.read_integer('equation', 'n', minimum=2)
        coefficients = [ConstExpr.zero()] * (n - 1)
        for key, entry in entries.items():
            if key in ('n', 'q', 'Q', 'P'):
                continue
            match = COEFFICIENT_KEY.match(key)
            if not match:
                raise CaseSyntaxError(f"Clave desconocida en [equation]: {key}", entry.line, entry.key_column)
            index = int(match.group(1))
            if index >= n:
                raise CaseSyntaxError(f"a{index} no existe para n = {n}", entry.line, entry.key_column)
            coefficients[index - 1] = expressions.parse_constant(entry.value, entry.line, entry.column)

        polys = {}
        for key in ('q', 'Q'):
            entry = entries.get(key)
            if entry is None:
                line, column = self.headers['equation']
                raise CaseSyntaxError(f"Falta la clave '{key}' en [equation]", line, column)
            polys[key] = expressions.parse_poly(entry.value, entry.line, entry.column)
        entry = entries.get('P')
        polys['P'] = Poly.zero() if entry is None else expressions.parse_poly(entry.value, entry.line, entry.column)

        try:
            return Equation(n, tuple(coefficients), polys['q'], polys['Q'], polys['P'], operator, env)
        except ValueError as error:
            line, column = self.headers['equation']
            raise CaseSyntaxError(str(error), line, column) from error

    def read_integer(self, section: str, key: str, minimum: int = 0) -> int:
        entry = self.entries(section).get(key)
        if entry is None:
            line, column = self.headers[section]
            raise CaseSyntaxError(f"Falta la clave '{key}' en [{section}]", line, column)
        return self.integer_value(entry, minimum)

    @staticmethod
    def integer_value(entry: _Entry, minimum: int = 0) -> int:
        if not entry.value.isdigit():
            raise CaseSyntaxError("Se esperaba un entero", entry.line, entry.column)
        value = int(entry.value)
        if value < minimum:
            raise CaseSyntaxError(f"El valor debe ser al menos {minimum}", entry.line, entry.column)
        return value

    def read_expect(self) -> Expectation:
        residual_zero, class_tag, rho, lam = None, None, None, None
        clauses: List[Tuple[str, ClauseStatus]] = []
        for key, entry in self.entries('expect').items():
            if key == 'residual':
                if entry.value not in ('0', 'nonzero'):
                    raise CaseSyntaxError("Se esperaba '0' o 'nonzero'", entry.line, entry.column)
                residual_zero = entry.value == '0'
            elif key == 'class':
                try:
                    class_tag = ClassTag(entry.value)
                except ValueError as error:
                    raise CaseSyntaxError(f"Clase desconocida: {entry.value}", entry.line, entry.column) from error
            elif key == 'rho':
                rho = self.integer_value(entry)
            elif key == 'lambda':
                lam = self.integer_value(entry)
            elif key in CLAUSE_NAMES:
                try:
                    clauses.append((key, ClauseStatus(entry.value)))
                except ValueError as error:
                    raise CaseSyntaxError(f"Estado desconocido: {entry.value}", entry.line, entry.column) from error
            else:
                raise CaseSyntaxError(f"Clave desconocida en [expect]: {key}", entry.line, entry.key_column)
        return Expectation(residual_zero, class_tag, rho, lam, tuple(clauses))


def parse_case_file(text: str, source_name: str = 'caso') -> CaseFile:
    return CaseFileParser(source_name).parse(text)


def load_case(path) -> CaseFile:
    """
    Lee y parsea un archivo .case.

    Raises:
        CaseSyntaxError: Si el contenido no es válido
        OSError: Si el archivo no se puede leer
    """
    path = Path(path)
    return parse_case_file(path.read_text(encoding='utf-8'), path.name)

"""
Parser base para expresiones de los archivos de caso
EXPOL - Verificador de polinomios exponenciales
Principio SOLID: Open/Closed - cada parser concreto define sus átomos y cómo combina valores
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, List, Optional

from engine.errors import CaseSyntaxError, UndecidedError

# Grupos de operadores en orden de precedencia creciente.
# El menos unario liga más que * y / pero menos que ^.
OPERATORS = [
    [('+', 'left'), ('-', 'left')],
    [('*', 'left'), ('/', 'left')],
    [('^', 'right')],
]

OPERATOR_PREC = {name: idx for idx, group in enumerate(OPERATORS) for name, _ in group}
OPERATOR_ASSOC = {name: assoc for group in OPERATORS for name, assoc in group}
UNARY_PREC = OPERATOR_PREC['^']

PUNCTUATION = set(OPERATOR_PREC) | {'(', ')', ',', "'"}


@dataclass(frozen=True)
class Token:
    """kind: NUMBER, IDENT, OP o END; line y column en base 1."""
    kind: str
    text: str
    line: int
    column: int


def tokenize(source: str, line: int = 1, column: int = 1) -> List[Token]:
    """
    Divide el texto en tokens conservando la posición de cada uno.

    Args:
        source: Texto de una sola línea lógica
        line: Línea del archivo donde empieza el texto
        column: Columna donde empieza el texto

    Returns:
        List[Token]: Tokens, terminados siempre en END

    Raises:
        CaseSyntaxError: Ante un carácter no reconocido
    """
    tokens: List[Token] = []
    idx = 0
    while idx < len(source):
        c = source[idx]
        col = column + idx
        if c.isspace():
            idx += 1
            continue
        if c.isdigit():
            start = idx
            while idx < len(source) and source[idx].isdigit():
                idx += 1
            if idx < len(source) and source[idx] == '.':
                raise CaseSyntaxError("Sólo se admiten enteros y fracciones exactas", line, column + idx)
            tokens.append(Token('NUMBER', source[start:idx], line, col))
            continue
        if c.isalpha() or c == '_':
            start = idx
            while idx < len(source) and (source[idx].isalnum() or source[idx] == '_'):
                idx += 1
            tokens.append(Token('IDENT', source[start:idx], line, col))
            continue
        if c in PUNCTUATION:
            tokens.append(Token('OP', c, line, col))
            idx += 1
            continue
        raise CaseSyntaxError(f"Carácter inesperado: {c!r}", line, col)
    tokens.append(Token('END', '', line, column + len(source)))
    return tokens


class BaseParser(ABC):
    """
    Clase base de los parsers por precedencia ascendente.
    Las subclases definen atom() y combine(); la base gestiona el flujo de tokens.
    """

    def __init__(self, source_name: str):
        """
        Args:
            source_name: Nombre de la fuente para los diagnósticos (archivo o 'cli')
        """
        self.source_name = source_name
        self.tokens: List[Token] = []
        self.pos = 0

    # -- flujo de tokens ------------------------------------------------------

    def start(self, text: str, line: int = 1, column: int = 1) -> None:
        self.tokens = tokenize(text, line, column)
        self.pos = 0

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        token = self.peek()
        if token.kind != 'END':
            self.pos += 1
        return token

    def at(self, text: str) -> bool:
        token = self.peek()
        return token.kind in ('OP', 'IDENT') and token.text == text

    def expect(self, text: str) -> Token:
        token = self.peek()
        if not self.at(text):
            found = token.text or 'fin de la expresión'
            raise self.error(f"Se esperaba '{text}', se encontró '{found}'", token)
        return self.advance()

    def expect_end(self) -> None:
        token = self.peek()
        if token.kind != 'END':
            raise self.error(f"Token inesperado: '{token.text}'", token)

    def error(self, message: str, token: Optional[Token] = None) -> CaseSyntaxError:
        token = token or self.peek()
        return CaseSyntaxError(message, token.line, token.column)

    # -- precedencia ascendente ---------------------------------------------

    def parse_expression(self, min_prec: int = 0) -> Any:
        """Bucle de precedencia ascendente; los operadores de la izquierda suben un nivel."""
        lhs = self.parse_unary()
        while self.peek().kind == 'OP' and self.peek().text in OPERATOR_PREC:
            token = self.peek()
            op_prec = OPERATOR_PREC[token.text]
            if op_prec < min_prec:
                return lhs
            self.advance()
            next_prec = op_prec + 1 if OPERATOR_ASSOC[token.text] == 'left' else op_prec
            rhs = self.parse_expression(next_prec)
            lhs = self.apply_checked(token, lhs, rhs)
        return lhs

    def parse_unary(self) -> Any:
        if self.at('-'):
            token = self.advance()
            operand = self.parse_expression(UNARY_PREC)
            return self.apply_checked(token, None, operand)
        if self.at('+'):
            raise self.error("El más unario no está admitido")
        return self.atom()

    def apply_checked(self, token: Token, lhs: Any, rhs: Any) -> Any:
        """Aplica combine() y convierte los errores aritméticos en diagnósticos con posición."""
        try:
            return self.combine(token.text, lhs, rhs)
        except CaseSyntaxError:
            raise
        except UndecidedError:
            raise
        except (ValueError, ZeroDivisionError, TypeError) as error:
            raise self.error(str(error), token) from error

    def parse_group(self) -> Any:
        self.expect('(')
        value = self.parse_expression()
        self.expect(')')
        return value

    @abstractmethod
    def atom(self) -> Any:
        """Lee un átomo (número, identificador, llamada o grupo entre paréntesis)."""

    @abstractmethod
    def combine(self, op: str, lhs: Any, rhs: Any) -> Any:
        """Combina dos valores con un operador binario; lhs es None para el menos unario."""

    @abstractmethod
    def parse(self, text: str, line: int = 1, column: int = 1) -> Any:
        """Parsea un texto completo."""

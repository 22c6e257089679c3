"""
Excepciones del motor EXPOL
Todas heredan de ValueError, igual que los errores de configuración y de datos
del resto de los scripts.
"""

from typing import Optional


class ExpolError(ValueError):
    """Error base del motor simbólico."""


class UndecidedError(ExpolError):
    """
    Una prueba de cero, signo, grado o cardinalidad quedó INDECIDIDA
    incluso en el último escalón de precisión.
    """

    def __init__(self, message: str, constant: Optional[str] = None):
        if constant:
            message = f"{message}: {constant}"
        super().__init__(message)
        self.constant = constant


class UnassignedParameterError(ExpolError):
    """La evaluación por intervalos encontró un parámetro sin valor asignado."""

    def __init__(self, name: str):
        super().__init__(f"Parámetro sin valor asignado: {name}")
        self.name = name


class CaseSyntaxError(ExpolError):
    """Error de sintaxis con posición (línea y columna, base 1)."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"línea {line}, columna {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class NotASolutionError(ExpolError):
    """La función candidata no anula el residuo de la ecuación."""

    def __init__(self, residual):
        super().__init__(f"f no es solución: residuo = {residual.to_text()}")
        self.residual = residual

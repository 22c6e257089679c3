"""
Parsers de archivos de caso y expresiones para EXPOL
"""

from .base import BaseParser, Token, tokenize
from .case_file import CaseFile, CaseFileParser, Expectation, load_case, parse_case_file
from .expression import ExpressionParser
from .operator import OperatorParser

__all__ = [
    'BaseParser',
    'Token',
    'tokenize',
    'CaseFile',
    'CaseFileParser',
    'Expectation',
    'load_case',
    'parse_case_file',
    'ExpressionParser',
    'OperatorParser'
]

"""
Utilidades compartidas para scripts de EXPOL
"""

from .config import Settings, get_settings, reset_settings
from .console import print_separator, print_status, print_summary

__all__ = [
    'Settings',
    'get_settings',
    'reset_settings',
    'print_separator',
    'print_status',
    'print_summary'
]

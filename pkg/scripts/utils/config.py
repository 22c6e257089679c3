"""
Configuración de EXPOL desde variables de entorno (.env)
Sigue el principio KISS: Singleton simple y directo
"""

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple

from dotenv import load_dotenv

# Cargar variables de entorno
load_dotenv()

DEFAULT_CORPUS_DIR = Path(__file__).resolve().parent.parent / 'corpus'


@dataclass(frozen=True)
class Settings:
    precision: int
    ladder: Tuple[int, ...]
    corpus_dir: Path
    synth_cases: int
    synth_seed: int


# Instancia única (Singleton pattern simple)
_settings: Optional[Settings] = None


def _int_var(name: str, default: str, minimum: int = 0) -> int:
    raw = os.getenv(name, default).strip()
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} debe ser un entero (valor actual: {raw!r})")
    if value < minimum:
        raise ValueError(f"{name} debe ser al menos {minimum} (valor actual: {value})")
    return value


def _ladder_var(name: str, default: str) -> Tuple[int, ...]:
    raw = os.getenv(name, default)
    try:
        ladder = tuple(int(part) for part in raw.split(',') if part.strip())
    except ValueError:
        raise ValueError(f"{name} debe ser una lista de enteros separados por comas (valor actual: {raw!r})")
    if not ladder or list(ladder) != sorted(ladder):
        raise ValueError(f"{name} debe ser creciente y no vacía (valor actual: {raw!r})")
    return ladder


def get_settings() -> Settings:
    """
    Obtiene o crea la configuración única.

    Returns:
        Settings: Precisión, escalera, corpus y parámetros de síntesis

    Raises:
        ValueError: Si alguna variable tiene un valor inválido (el mensaje la nombra)
    """
    global _settings

    if _settings is None:
        corpus = os.getenv('EXPOL_CORPUS_DIR')
        _settings = Settings(
            precision=_int_var('EXPOL_PRECISION', '50', minimum=16),
            ladder=_ladder_var('EXPOL_PRECISION_LADDER', '50,200,1000'),
            corpus_dir=Path(corpus) if corpus else DEFAULT_CORPUS_DIR,
            synth_cases=_int_var('EXPOL_SYNTH_CASES', '500', minimum=1),
            synth_seed=_int_var('EXPOL_SYNTH_SEED', '20240601'),
        )

    return _settings


def reset_settings() -> None:
    """Descarta la configuración en caché (tras cambiar el entorno)."""
    global _settings
    _settings = None

"""
Configuración compartida de pytest: perfiles de hypothesis y utilidades de corpus
"""

import os
import sys
from pathlib import Path

from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    'default', max_examples=40, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile(
    'acceptance', max_examples=10_000, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.getenv('HYPOTHESIS_PROFILE', 'default'))

CORPUS_DIR = Path(__file__).parent / 'corpus'

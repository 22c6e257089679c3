"""
Pruebas de la síntesis directa y de la falsación del teorema
"""

import random

import pytest

from engine.classifier import ClassTag, classify, is_solution
from engine.synthesis import Family, falsify, synthesize
from utils.config import get_settings, reset_settings

# Volumen mínimo de la corrida de falsación
MIN_SYNTH_CASES = 500


@pytest.mark.parametrize('family', list(Family), ids=lambda f: f.value)
def test_synthesized_cases_are_solutions(family):
    rng = random.Random(11)
    for _ in range(3):
        eq, f = synthesize(rng, family)
        assert is_solution(eq, f)


@pytest.mark.parametrize('family,tag', [
    (Family.GAMMA0, ClassTag.GAMMA0P),
    (Family.GAMMA1, ClassTag.GAMMA1P),
    (Family.CASE_II, ClassTag.GAMMA1P),
    (Family.CASE_III, ClassTag.GAMMA1P),
    (Family.DOUBLE, ClassTag.GAMMA2P),
])
def test_families_land_in_their_class(family, tag):
    _, f = synthesize(random.Random(5), family)
    assert classify(f).belongs_to(tag)


def test_same_seed_same_cases():
    first = [r.solution.to_text() for r in falsify(10, 99)]
    second = [r.solution.to_text() for r in falsify(10, 99)]
    assert first == second


def test_families_rotate():
    results = falsify(len(Family), 3)
    assert [r.family for r in results] == list(Family)


def test_no_counterexamples():
    reset_settings()
    settings = get_settings()
    count = max(settings.synth_cases, MIN_SYNTH_CASES)
    results = falsify(count, settings.synth_seed)
    assert len(results) == count
    offenders = [
        (r.family.value, c.name, r.solution.to_text(), r.equation.L.to_text())
        for r in results for c in r.report.counterexamples
    ]
    assert offenders == []


def test_default_case_count(monkeypatch):
    monkeypatch.delenv('EXPOL_SYNTH_CASES', raising=False)
    reset_settings()
    try:
        assert get_settings().synth_cases == 500
    finally:
        reset_settings()

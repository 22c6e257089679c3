"""
Pruebas del script de validación del ambiente y de la configuración
"""

import pytest

import validate_environment
from conftest import CORPUS_DIR
from utils.config import get_settings, reset_settings


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    for name in ('EXPOL_PRECISION', 'EXPOL_PRECISION_LADDER', 'EXPOL_SYNTH_CASES', 'EXPOL_SYNTH_SEED'):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv('EXPOL_CORPUS_DIR', str(CORPUS_DIR))
    reset_settings()
    yield
    reset_settings()


class TestSettings:
    def test_defaults(self):
        settings = get_settings()
        assert settings.precision == 50
        assert settings.ladder == (50, 200, 1000)
        assert settings.corpus_dir == CORPUS_DIR
        assert settings.synth_seed == 20240601

    def test_singleton(self):
        assert get_settings() is get_settings()

    def test_precision_floor(self, monkeypatch):
        monkeypatch.setenv('EXPOL_PRECISION', '8')
        with pytest.raises(ValueError, match='EXPOL_PRECISION'):
            get_settings()

    def test_ladder_must_increase(self, monkeypatch):
        monkeypatch.setenv('EXPOL_PRECISION_LADDER', '200,50')
        with pytest.raises(ValueError, match='EXPOL_PRECISION_LADDER'):
            get_settings()

    def test_non_integer(self, monkeypatch):
        monkeypatch.setenv('EXPOL_SYNTH_CASES', 'muchos')
        with pytest.raises(ValueError, match='EXPOL_SYNTH_CASES'):
            get_settings()


class TestValidation:
    def test_ready_environment(self, capsys):
        assert validate_environment.main() == 0
        out = capsys.readouterr().out
        assert 'RESUMEN' in out
        assert '[SUCCESS]' in out

    def test_missing_corpus(self, monkeypatch, tmp_path, capsys):
        monkeypatch.setenv('EXPOL_CORPUS_DIR', str(tmp_path))
        reset_settings()
        assert not validate_environment.check_corpus()
        assert 'ex1_1.case: NO existe' in capsys.readouterr().out

    def test_invalid_setting_fails(self, monkeypatch, capsys):
        monkeypatch.setenv('EXPOL_PRECISION', 'alta')
        assert validate_environment.main() == 1
        assert '[ERROR] EXPOL_PRECISION' in capsys.readouterr().out

"""
Script de validación del ambiente EXPOL
Verifica paquetes, configuración y corpus de casos
"""

import sys
from pathlib import Path

# Configurar encoding UTF-8 para Windows
if sys.platform == 'win32':
    import io
    sys.stdout = io.TextIOWrapper(sys.stdout.buffer, encoding='utf-8', errors='replace')
    sys.stderr = io.TextIOWrapper(sys.stderr.buffer, encoding='utf-8', errors='replace')

# Agregar directorio al path para imports
sys.path.insert(0, str(Path(__file__).parent))

REQUIRED_PACKAGES = {
    'sympy': 'sympy',
    'mpmath': 'mpmath',
    'dotenv': 'python-dotenv',
}

REQUIRED_CASES = tuple(f"ex1_{k}.case" for k in range(1, 10))


def check_python_packages() -> bool:
    """Verifica que los paquetes Python estén instalados"""
    print("=" * 60)
    print("1. Verificando Paquetes Python")
    print("=" * 60)

    all_ok = True
    for package, description in REQUIRED_PACKAGES.items():
        try:
            __import__(package)
            print(f"[OK] {description}: Instalado")
        except ImportError:
            print(f"[ERROR] {description}: NO instalado - Ejecuta: pip install -r requirements.txt")
            all_ok = False
    return all_ok


def check_settings() -> bool:
    """Verifica que las variables EXPOL_* tengan valores válidos"""
    print("\n" + "=" * 60)
    print("2. Verificando Configuración")
    print("=" * 60)

    try:
        from utils.config import get_settings, reset_settings

        reset_settings()
        settings = get_settings()
    except ImportError as e:
        print(f"[ERROR] No se pudo importar la configuración: {e}")
        return False
    except ValueError as e:
        print(f"[ERROR] {e}")
        return False

    print(f"[OK] EXPOL_PRECISION: {settings.precision}")
    print(f"[OK] EXPOL_PRECISION_LADDER: {','.join(str(d) for d in settings.ladder)}")
    print(f"[OK] EXPOL_SYNTH_CASES: {settings.synth_cases} (semilla {settings.synth_seed})")
    return True


def check_corpus() -> bool:
    """Verifica que el corpus tenga los nueve casos requeridos"""
    print("\n" + "=" * 60)
    print("3. Verificando Corpus")
    print("=" * 60)

    try:
        from utils.config import get_settings

        corpus_dir = get_settings().corpus_dir
    except (ImportError, ValueError) as e:
        print(f"[ERROR] Sin configuración válida: {e}")
        return False

    if not corpus_dir.is_dir():
        print(f"[ERROR] {corpus_dir}: NO existe")
        return False

    all_ok = True
    for name in REQUIRED_CASES:
        if (corpus_dir / name).exists():
            print(f"[OK] {name}: Existe")
        else:
            print(f"[ERROR] {name}: NO existe en {corpus_dir}")
            all_ok = False
    return all_ok


def main() -> int:
    """Función principal de validación"""
    print("\n" + "=" * 60)
    print("EXPOL - Validación del Ambiente")
    print("=" * 60)

    results = {
        'Paquetes Python': check_python_packages(),
        'Configuración': check_settings(),
        'Corpus': check_corpus(),
    }

    print("\n" + "=" * 60)
    print("RESUMEN")
    print("=" * 60)

    all_ok = True
    for check_name, result in results.items():
        status = "[OK]" if result else "[FALLO]"
        print(f"{status} - {check_name}")
        if not result:
            all_ok = False

    print("=" * 60)

    if all_ok:
        print("\n[SUCCESS] Ambiente listo")
        print("   Puedes ejecutar: python scripts/main.py corpus")
    else:
        print("\n[WARN] Hay problemas en la configuracion")
        print("   Revisa los errores arriba y consulta scripts/README.md")

    return 0 if all_ok else 1


if __name__ == '__main__':
    sys.exit(main())

"""
Salida por consola con el formato de los scripts: separadores, [OK]/[WARN]/[ERROR] y RESUMEN
"""

from typing import Mapping

WIDTH = 60


def print_separator(title: str = '') -> None:
    print("=" * WIDTH)
    if title:
        print(title)
        print("=" * WIDTH)


def print_status(ok: bool, text: str, warn: bool = False) -> None:
    tag = "[OK]" if ok else ("[WARN]" if warn else "[ERROR]")
    print(f"{tag} {text}")


def print_summary(counts: Mapping[str, int]) -> None:
    print(f"\n{'=' * WIDTH}")
    print("RESUMEN")
    print("=" * WIDTH)
    for label, count in counts.items():
        print(f"{label}: {count}")
    print("=" * WIDTH)

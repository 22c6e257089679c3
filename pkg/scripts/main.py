"""
Script principal de EXPOL: verificación, clasificación y chequeo del teorema
EXPOL - Verificador de polinomios exponenciales
Principio KISS: Script simple y directo que orquesta el motor y los parsers
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

# Agregar directorio padre al path para imports
sys.path.insert(0, str(Path(__file__).parent))

from case_parser import CaseFile, ExpressionParser, load_case
from engine import (
    CaseSyntaxError, ConstExpr, ExPoly, ExpolError, FrequencySet, UndecidedError,
    check_theorem, classify, convex_hull, indicators, residual, residual_enclosure, use_precision,
)
from engine.synthesis import Family, falsify
from utils.config import get_settings
from utils.console import print_separator, print_status, print_summary

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_UNDECIDED = 2
EXIT_SYNTAX = 3

# Valor de prueba para parámetros simbólicos en la verificación numérica
SAMPLE_PARAM_VALUE = ConstExpr.rational(3, 7)


def sample_points(count: int) -> List[ConstExpr]:
    """Puntos deterministas z0 = k/7 + (k/11 - 1) i para la verificación numérica."""
    i = ConstExpr.imaginary_unit()
    return [ConstExpr.rational(k, 7) + (ConstExpr.rational(k, 11) - 1) * i for k in range(count)]


def numeric_cross_check(case: CaseFile, count: int, precision: int) -> Any:
    """
    Evalúa el residuo término a término en count puntos.

    Returns:
        Cota superior de |residuo(z0)| sobre todos los puntos
    """
    values = {name: SAMPLE_PARAM_VALUE for name in case.env.params}
    worst = 0
    for z0 in sample_points(count):
        box = residual_enclosure(case.equation, case.function, z0, precision, values)
        worst = max(worst, float(box.magnitude().b))
    return worst


def evaluate_case(case: CaseFile, precision: int) -> List[str]:
    """
    Compara un caso con sus expectativas.

    Args:
        case: Caso parseado
        precision: Dígitos de los encierros

    Returns:
        List[str]: Diferencias encontradas (vacía si todo coincide)

    Raises:
        UndecidedError: Si alguna prueba queda indecidida
    """
    expect = case.expect
    mismatches = []
    rest = residual(case.equation, case.function)
    if expect.residual_zero is not None and rest.is_zero != expect.residual_zero:
        found = '0' if rest.is_zero else rest.to_text()
        mismatches.append(f"residual: se esperaba {'0' if expect.residual_zero else 'nonzero'}, se obtuvo {found}")
    if expect.class_tag is not None:
        solution_class = classify(case.function)
        if not solution_class.belongs_to(expect.class_tag):
            mismatches.append(f"class: se esperaba {expect.class_tag.value}, se obtuvo {solution_class.tag.value}")
    if expect.rho is not None or expect.lam is not None:
        report = indicators(case.function, precision)
        if expect.rho is not None and report.rho != expect.rho:
            mismatches.append(f"rho: se esperaba {expect.rho}, se obtuvo {report.rho}")
        if expect.lam is not None and report.lam != expect.lam:
            mismatches.append(f"lambda: se esperaba {expect.lam}, se obtuvo {report.lam}")
    if expect.clauses:
        if not rest.is_zero:
            mismatches.append("cláusulas: f no es solución")
        else:
            theorem = check_theorem(case.equation, case.function, precision)
            for name, status in expect.clauses:
                found = theorem.status(name)
                if found is not status:
                    mismatches.append(f"{name}: se esperaba {status.value}, se obtuvo {found.value}")
    return mismatches


# ---------------------------------------------------------------------------
# Comandos
# ---------------------------------------------------------------------------

def emit(args: argparse.Namespace, document: Dict[str, Any], lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps(document, sort_keys=True, ensure_ascii=False))
    else:
        for line in lines:
            print(line)


def cmd_verify(args: argparse.Namespace) -> int:
    case = load_case(args.case)
    rest = residual(case.equation, case.function)
    text = '0' if rest.is_zero else rest.to_text()
    document: Dict[str, Any] = {'case': case.name, 'residual': text, 'is_solution': rest.is_zero}
    lines = [f"residual = {text}"]
    if not rest.is_zero:
        witness = rest.terms[0]
        document['witness'] = ExPoly((witness,)).to_text()
        lines.append(f"término testigo: {document['witness']}")
    if args.samples:
        worst = numeric_cross_check(case, args.samples, args.precision)
        document['numeric_max_abs'] = worst
        lines.append(f"verificación numérica ({args.samples} puntos): |residuo| <= {worst:.3e}")
    emit(args, document, lines)
    return EXIT_OK if rest.is_zero else EXIT_MISMATCH


def cmd_classify(args: argparse.Namespace) -> int:
    case = load_case(args.case)
    result = classify(case.function)
    witnesses = [
        {'p': coeff.to_text(), 'alpha': exponent.to_text()} for coeff, exponent in result.witnesses
    ]
    document = {
        'case': case.name,
        'class': result.tag.value,
        'members': [tag.value for tag in result.members],
        'polynomial_part': result.polynomial_part.to_text(),
        'witnesses': witnesses,
    }
    lines = [f"clase: {result.tag.value}", f"pertenece a: {', '.join(document['members']) or '-'}"]
    lines.extend(f"  p = {w['p']}, alpha = {w['alpha']}" for w in witnesses)
    emit(args, document, lines)
    return EXIT_OK


def cmd_theorem(args: argparse.Namespace) -> int:
    case = load_case(args.case)
    report = check_theorem(case.equation, case.function, args.precision)
    lines = [f"{c.name:<12} {c.status.value:<15} {c.detail}".rstrip() for c in report.clauses]
    emit(args, {'case': case.name, 'clauses': report.to_dict()}, lines)
    if report.counterexamples:
        return EXIT_MISMATCH
    if report.has_undecided:
        return EXIT_UNDECIDED
    return EXIT_OK


def cmd_hull(args: argparse.Namespace) -> int:
    points = ExpressionParser(source_name='cli').parse_list(args.points)
    hull = convex_hull(FrequencySet.of(points), args.precision)
    document = {
        'kind': hull.kind.value,
        'vertices': [v.to_text() for v in hull.vertices],
        'circumference': hull.circumference_exact.to_text(),
        'circumference_value': float(hull.circumference.mid),
    }
    lines = [hull.describe(), f"vértices: {', '.join(document['vertices'])}",
             f"C ≈ {document['circumference_value']:.15g}"]
    emit(args, document, lines)
    return EXIT_OK


def cmd_growth(args: argparse.Namespace) -> int:
    case = load_case(args.case)
    report = indicators(case.function, args.precision)
    document = dict(report.to_dict(), case=case.name)
    lines = [
        f"rho = {report.rho}",
        f"lambda = {report.lam}",
        f"T_leading = {document['T_leading']}",
        f"N_leading = {document['N_leading']}",
        f"tipo medio: {'sí' if report.mean_type else 'no'}",
    ]
    emit(args, document, lines)
    return EXIT_OK


def cmd_corpus(args: argparse.Namespace) -> int:
    directory = Path(args.directory) if args.directory else get_settings().corpus_dir
    files = sorted(directory.glob('*.case'))
    if not files:
        raise ExpolError(f"No hay archivos .case en {directory}")

    results = []
    for path in files:
        try:
            mismatches = evaluate_case(load_case(path), args.precision)
            status = EXIT_OK if not mismatches else EXIT_MISMATCH
        except CaseSyntaxError as e:
            mismatches, status = [str(e)], EXIT_SYNTAX
        except UndecidedError as e:
            mismatches, status = [f"INDECIDIDO: {e}"], EXIT_UNDECIDED
        except ExpolError as e:
            mismatches, status = [str(e)], EXIT_MISMATCH
        results.append({'case': path.name, 'ok': status == EXIT_OK, 'exit': status, 'mismatches': mismatches})

    statuses = {r['exit'] for r in results}
    code = next((c for c in (EXIT_SYNTAX, EXIT_UNDECIDED, EXIT_MISMATCH) if c in statuses), EXIT_OK)

    if args.json:
        emit(args, {'cases': results, 'exit': code}, [])
        return code
    print_separator("EXPOL - Corpus de casos")
    for result in results:
        print_status(result['ok'], result['case'])
        for mismatch in result['mismatches']:
            print(f"   {mismatch}")
    print_summary({
        'Casos': len(results),
        'Correctos': sum(1 for r in results if r['ok']),
        'Fallidos': sum(1 for r in results if not r['ok']),
    })
    return code


def cmd_synth(args: argparse.Namespace) -> int:
    settings = get_settings()
    count = args.count or settings.synth_cases
    seed = settings.synth_seed if args.seed is None else args.seed
    results = falsify(count, seed, precision=args.precision)

    per_family = {family.value: 0 for family in Family}
    counterexamples = []
    undecided = 0
    for index, result in enumerate(results):
        per_family[result.family.value] += 1
        undecided += result.report.has_undecided
        for clause in result.report.counterexamples:
            counterexamples.append({
                'index': index,
                'family': result.family.value,
                'clause': clause.name,
                'f': result.solution.to_text(),
                'L': result.equation.L.to_text(),
                'detail': clause.detail,
            })

    document = {'count': count, 'seed': seed, 'families': per_family,
                'undecided': undecided, 'counterexamples': counterexamples}
    if args.json:
        emit(args, document, [])
    else:
        print_separator(f"EXPOL - Falsación por síntesis ({count} casos, semilla {seed})")
        for item in counterexamples:
            print_status(False, f"#{item['index']} {item['family']} {item['clause']}: f = {item['f']}, L = {item['L']}")
        print_summary(dict(per_family, Indecididos=undecided, Contraejemplos=len(counterexamples)))
    return EXIT_MISMATCH if counterexamples else EXIT_OK


COMMANDS = {
    'verify': cmd_verify,
    'classify': cmd_classify,
    'theorem': cmd_theorem,
    'hull': cmd_hull,
    'growth': cmd_growth,
    'corpus': cmd_corpus,
    'synth': cmd_synth,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='expol',
        description='Verificador de soluciones polinomio-exponenciales de ecuaciones de retardo-diferencial',
    )
    parser.add_argument('--precision', type=int, default=None,
                        help='Dígitos de la aritmética de intervalos (por defecto EXPOL_PRECISION)')
    parser.add_argument('--json', action='store_true', help='Salida legible por máquina')
    commands = parser.add_subparsers(dest='command', required=True)

    verify = commands.add_parser('verify', help='Residuo de la ecuación')
    verify.add_argument('case')
    verify.add_argument('--samples', type=int, default=0,
                        help='Puntos de verificación numérica del residuo')
    for name, text in (('classify', 'Clase de la solución'), ('theorem', 'Cláusulas del teorema'),
                       ('growth', 'Indicadores de crecimiento')):
        commands.add_parser(name, help=text).add_argument('case')

    hull = commands.add_parser('hull', help='Envolvente convexa de una lista de puntos')
    hull.add_argument('points', help="Constantes separadas por comas, p. ej. '0,1,i'")

    corpus = commands.add_parser('corpus', help='Ejecuta los casos del corpus')
    corpus.add_argument('directory', nargs='?', default=None)

    synth = commands.add_parser('synth', help='Falsación por síntesis directa')
    synth.add_argument('--count', type=int, default=None)
    synth.add_argument('--seed', type=int, default=None)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Función principal; devuelve el código de salida."""
    args = build_parser().parse_args(argv)
    try:
        settings = get_settings()
        if args.precision is None:
            args.precision = settings.precision
        with use_precision(args.precision, settings.ladder):
            return COMMANDS[args.command](args)
    except CaseSyntaxError as e:
        print(f"[ERROR] {getattr(args, 'case', 'cli')}: {e}")
        return EXIT_SYNTAX
    except UndecidedError as e:
        print(f"[ERROR] INDECIDIDO: {e}")
        return EXIT_UNDECIDED
    except ExpolError as e:
        print(f"[ERROR] {e}")
        return EXIT_MISMATCH
    except KeyboardInterrupt:
        print("\n\n[WARN] Proceso cancelado por el usuario")
        return EXIT_MISMATCH
    except Exception as e:
        print(f"\n[ERROR] Error: {e}")
        return EXIT_MISMATCH


if __name__ == '__main__':
    sys.exit(main())

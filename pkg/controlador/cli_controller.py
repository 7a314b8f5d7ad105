# controlador/cli_controller.py
"""
Controlador de la línea de comandos.

Responsabilidades:
- Definir los subcomandos y sus opciones (argparse)
- Leer las secuencias de entrada (--inline, --file, --name, --method)
- Llamar al modelo y entregar el reporte a la vista
- Traducir resultados y errores a códigos de salida

Códigos de salida: 0 la afirmación se cumple, 1 no se cumple (resultado
negativo bien formado), 2 error de uso o de entrada.
"""

import argparse
import math
import sys
import time
from typing import Any, Callable, Dict, List, Optional, Tuple

from modelo import constructions, containment, lemmas, search
from modelo.catalogo import Catalogo
from modelo.configuracion import ENGINES, ajustes
from modelo.errores import DomainError, FormatError, RosaryError
from modelo.formato_texto import leer_archivo, parse_secuencia
from modelo.reportes import Report, cotas_a_csv, cotas_a_json, cotas_a_texto, version_completa
from modelo.seqcore import (
    Cycle,
    Permutation,
    code_of_cycle,
    code_of_string,
    lambda_decomposition,
    maximal_blocks,
    string_runs,
)
from vista.salida import Salida

EXIT_OK = 0
EXIT_FALSO = 1
EXIT_USO = 2

# Desde este n la verificación imprime progreso
N_PROGRESO = 9


# ─────────────────────────────────────────────────────────
# ENTRADA
# ─────────────────────────────────────────────────────────

def _agregar_fuente(parser: argparse.ArgumentParser, requerida: bool = True):
    grupo = parser.add_mutually_exclusive_group(required=requerida)
    grupo.add_argument('--inline', help='secuencia en línea, p. ej. "1,2,1,3"')
    grupo.add_argument('--file', help='archivo en el formato de texto compartido (se usa la primera secuencia)')
    grupo.add_argument('--name', help='clave del catálogo, p. ej. fig2-n6')
    grupo.add_argument('--method', choices=['naive', 'theorem'], help='construcción para --n')


def _leer_valores(args) -> Tuple[Tuple[int, ...], str]:
    """Valores de la secuencia de entrada y una descripción de su origen."""
    if args.inline is not None:
        return parse_secuencia(args.inline), "inline"
    if args.file is not None:
        entradas = leer_archivo(args.file)
        if not entradas:
            raise FormatError(f"{args.file} no contiene ninguna secuencia")
        return entradas[0].valores, args.file
    if args.name is not None:
        return Catalogo().get(args.name), args.name
    if args.n is None:
        raise DomainError(f"--method {args.method} requiere --n")
    ciclo = constructions.naive_rosary(args.n) if args.method == 'naive' else constructions.theorem_rosary(args.n)
    return ciclo.values, f"{args.method}(n={args.n})"


def _leer_ciclo(args) -> Tuple[Cycle, str]:
    valores, origen = _leer_valores(args)
    n = getattr(args, 'n', None)
    return Cycle.of(valores, n), origen


def _bloque_dict(b) -> Dict[str, Any]:
    return {'start': b.start, 'length': b.length, 'values': list(b.values)}


# ─────────────────────────────────────────────────────────
# COMANDOS
# ─────────────────────────────────────────────────────────

def cmd_construct(args, salida: Salida) -> int:
    if args.method in ('naive', 'theorem') and args.n is None:
        raise DomainError(f"--method {args.method} requiere --n")
    if args.method == 'naive':
        ciclo, nombre = constructions.naive_rosary(args.n), "Naive"
    elif args.method == 'theorem':
        ciclo, nombre = constructions.theorem_rosary(args.n), str(constructions.construction_id(args.n))
    else:
        if not args.name:
            raise DomainError("--method catalog requiere --name")
        ciclo, nombre = constructions.catalog(args.name), f"Catalog({args.name})"
        if args.n is not None and ciclo.n != args.n:
            raise DomainError(f"{args.name} es de grado {ciclo.n}, no {args.n}")

    resultado = {
        'n': ciclo.n,
        'method': args.method,
        'construction': nombre,
        'length': len(ciclo),
        'cycle': list(ciclo.values),
    }
    salida.mostrar(_reporte(args, {'n': args.n, 'method': args.method, 'name': args.name}, resultado))
    return EXIT_OK


def cmd_verify(args, salida: Salida) -> int:
    ciclo, origen = _leer_ciclo(args)
    n = args.n if args.n is not None else ciclo.n
    reporte = containment.is_rosary(
        ciclo, n,
        engine=args.engine,
        workers=args.parallel,
        witness_cap=args.witness_cap,
        early_exit=args.early_exit,
        quiet=args.quiet or n < N_PROGRESO,
    )
    resultado = reporte.to_dict()
    resultado['source'] = origen
    salida.mostrar(_reporte(args, {'source': origen, 'n': n, 'engine': reporte.engine,
                                   'early_exit': args.early_exit}, resultado))
    return EXIT_OK if reporte.is_rosary else EXIT_FALSO


def cmd_contains(args, salida: Salida) -> int:
    ciclo, origen = _leer_ciclo(args)
    patron = parse_secuencia(args.perm)
    veredicto = containment.cycle_contains_permutation(ciclo, Permutation.of(patron), engine=args.engine)
    resultado = {
        'contained': veredicto.contained,
        'start_index': veredicto.start_index,
        'case_key': veredicto.case_key,
    }
    salida.mostrar(_reporte(args, {'source': origen, 'perm': list(patron)}, resultado))
    return EXIT_OK if veredicto.contained else EXIT_FALSO


def cmd_cyclic_contains(args, salida: Salida) -> int:
    ciclo, origen = _leer_ciclo(args)
    patron = parse_secuencia(args.pattern)
    contenida = containment.cyclic_contains(ciclo, patron, engine=args.engine)
    salida.mostrar(_reporte(args, {'source': origen, 'pattern': list(patron)}, {'contained': contenida}))
    return EXIT_OK if contenida else EXIT_FALSO


def cmd_blocks(args, salida: Salida) -> int:
    ciclo, origen = _leer_ciclo(args)
    bloques = maximal_blocks(ciclo)
    ascensos, descensos = string_runs(ciclo.values) if len(ciclo) >= 2 else (0, 0)
    resultado = {
        'increasing': [_bloque_dict(b) for b in bloques.increasing],
        'decreasing': [_bloque_dict(b) for b in bloques.decreasing],
        'string_runs': {'ascents': ascensos, 'descents': descensos},
    }
    salida.mostrar(_reporte(args, {'source': origen}, resultado))
    return EXIT_OK


def cmd_code(args, salida: Salida) -> int:
    valores, origen = _leer_valores(args)
    codigo = code_of_string(valores) if args.string else code_of_cycle(valores)
    resultado: Dict[str, Any] = {
        'kind': 'cyclic' if codigo.cyclic else 'string',
        'bits': list(codigo.bits),
        'lambda': None,
    }
    if codigo.cyclic and codigo.ones:
        ld = lambda_decomposition(codigo)
        resultado['lambda'] = {'x': ld.x, 'y': ld.y, 'lambdas': list(ld.lambdas), 'anchor': ld.anchor}
    salida.mostrar(_reporte(args, {'source': origen, 'string': args.string}, resultado))
    return EXIT_OK


def cmd_search(args, salida: Salida) -> int:
    cfg = search.SearchConfig(
        n=args.n,
        target_length=args.length,
        prefix=parse_secuencia(args.prefix) if args.prefix else None,
        time_budget=args.budget,
        node_budget=args.nodes,
        max_results=args.max_results,
        prune_adjacent=not args.no_prune_adjacent,
        prune_sample=not args.no_prune_sample,
        sample_size=args.sample_size,
        seed=args.seed,
    )
    salida_busqueda = search.search_rosaries(cfg, workers=args.parallel, quiet=args.quiet)
    entradas = {
        'n': cfg.n,
        'length': cfg.target_length,
        'prefix': list(cfg.prefix),
        'budget': cfg.time_budget,
        'nodes': cfg.node_budget,
        'max_results': cfg.max_results,
        'seed': ajustes({'seed': args.seed}).seed,
    }
    salida.mostrar(_reporte(args, entradas, salida_busqueda.to_dict()))
    return EXIT_OK if salida_busqueda.found else EXIT_FALSO


def cmd_exact(args, salida: Salida) -> int:
    r, testigo = search.exact_r(args.n, max_n=args.max_n, quiet=args.quiet)
    resultado = {
        'n': args.n,
        'r': r,
        'witness': list(testigo.values),
        'source': 'computed',
    }
    salida.mostrar(_reporte(args, {'n': args.n}, resultado))
    return EXIT_OK


def cmd_table(args, salida: Salida) -> int:
    filas = constructions.bounds_table(args.max_n)
    reporte = _reporte(args, {'max_n': args.max_n, 'format': args.format}, {'rows': cotas_a_json(filas)})
    if args.format == 'csv' and not salida.json_mode:
        salida.mostrar(reporte, cotas_a_csv(filas))
    elif args.format == 'json':
        Salida(json_mode=True).mostrar(reporte)
    else:
        salida.mostrar(reporte, cotas_a_texto(filas))
    return EXIT_OK


def _exigir(args, *nombres: str):
    faltan = [f"--{n}" for n in nombres if getattr(args, n) is None]
    if faltan:
        raise DomainError(f"lemma --kind {args.kind} requiere {', '.join(faltan)}")


def cmd_lemma(args, salida: Salida) -> int:
    tipo = args.kind
    entradas = {'kind': tipo, 'perm': args.perm, 'K': args.K, 'M': args.M, 'N': args.N, 'n': args.n}

    if tipo in ('sweep1', 'sweep2'):
        _exigir(args, 'n')
        barrido = lemmas.lemma1_sweep(args.n) if tipo == 'sweep1' else lemmas.lemma2_sweep(args.n)
        resultado = {
            'kind': tipo,
            'n': barrido.n,
            'cases': barrido.cases,
            'fired': barrido.fired,
            'confirmed': barrido.confirmed,
            'violations': [[list(caso[0]), *caso[1:]] for caso in barrido.violations],
        }
        salida.mostrar(_reporte(args, entradas, resultado))
        return EXIT_OK if not barrido.violations else EXIT_FALSO

    if tipo == 'params':
        _exigir(args, 'n')
        parametros = lemmas.theorem_parameters(args.n)
        resultado = {'kind': tipo, 'parameters': {k: list(v) for k, v in parametros.items()}}
        salida.mostrar(_reporte(args, entradas, resultado))
        return EXIT_OK

    _exigir(args, 'perm', 'K', 'M')
    perm = Permutation.of(parse_secuencia(args.perm))
    resultado = {'kind': tipo}
    if tipo == 'lemma1':
        chequeo = lemmas.check_lemma1(perm, args.K, args.M)
        resultado['target_length'] = len(lemmas.lemma1_target(perm.n, args.K, args.M))
    else:
        _exigir(args, 'N')
        query = lemmas.LuckyIndexQuery(args.K, args.M, args.N)
        resultado['lucky_indices'] = list(lemmas.lucky_indices(perm, query))
        chequeo = lemmas.check_lemma2(perm, args.K, args.M, args.N)
        resultado['target_length'] = len(lemmas.lemma2_target(perm.n, args.K, args.M, args.N))

    resultado.update({
        'predicate_fired': chequeo.predicate_fired,
        'containment_confirmed': chequeo.containment_confirmed,
        'index': chequeo.index,
    })
    salida.mostrar(_reporte(args, entradas, resultado))
    return EXIT_OK if chequeo.predicate_fired and chequeo.containment_confirmed else EXIT_FALSO


def cmd_counterexample(args, salida: Salida) -> int:
    permutacion, ciclo = constructions.counterexample_instance(args.case)
    veredicto = containment.cycle_contains_permutation(ciclo, permutacion, engine=args.engine)
    ld = lemmas.decomposition_of(permutacion)
    bloques = maximal_blocks(permutacion)
    ascensos, descensos = string_runs(permutacion.values)
    resultado = {
        'case': args.case,
        'n': permutacion.n,
        'cycle_length': len(ciclo),
        'contained': veredicto.contained,
        'start_index': veredicto.start_index,
        'claim_confirmed': not veredicto.contained,
        'x': ld.x,
        'y': ld.y,
        'lambdas': list(ld.lambdas),
        'increasing_blocks': len(bloques.increasing),
        'decreasing_blocks': len(bloques.decreasing),
        'string_runs': {'ascents': ascensos, 'descents': descensos},
    }
    salida.mostrar(_reporte(args, {'case': args.case}, resultado))
    return EXIT_OK if not veredicto.contained else EXIT_FALSO


def cmd_string_check(args, salida: Salida) -> int:
    valores, origen = _leer_valores(args)
    n = args.n if args.n is not None else max(valores)
    contiene, primera = containment.string_contains_all_permutations(valores, n)
    resultado = {
        'n': n,
        'length': len(valores),
        'contains_all': contiene,
        'checked': None if primera else math.factorial(n),
        'first_missing': list(primera) if primera else None,
    }
    salida.mostrar(_reporte(args, {'source': origen, 'n': n}, resultado))
    return EXIT_OK if contiene else EXIT_FALSO


# ─────────────────────────────────────────────────────────
# PARSER
# ─────────────────────────────────────────────────────────

def _reporte(args, entradas: Dict[str, Any], resultado: Dict[str, Any]) -> Report:
    return Report(
        command=args.command,
        inputs=entradas,
        result=resultado,
        elapsed_ms=(time.perf_counter() - args._inicio) * 1000,
    )


COMANDOS: Dict[str, Callable[[Any, Salida], int]] = {
    'construct': cmd_construct,
    'verify': cmd_verify,
    'contains': cmd_contains,
    'cyclic-contains': cmd_cyclic_contains,
    'blocks': cmd_blocks,
    'code': cmd_code,
    'search': cmd_search,
    'exact': cmd_exact,
    'table': cmd_table,
    'lemma': cmd_lemma,
    'counterexample': cmd_counterexample,
    'string-check': cmd_string_check,
}


def crear_parser() -> argparse.ArgumentParser:
    comunes = argparse.ArgumentParser(add_help=False)
    comunes.add_argument('--json', action='store_true', help='todo stdout como un reporte JSON')
    comunes.add_argument('--quiet', action='store_true', help='sin mensajes de progreso en stderr')

    motor = argparse.ArgumentParser(add_help=False)
    motor.add_argument('--engine', choices=ENGINES, default=None, help='motor de contención')

    parser = argparse.ArgumentParser(
        prog='rosarios',
        description='Construcción, verificación y búsqueda de rosarios',
    )
    parser.add_argument('--version', action='version', version=f"%(prog)s {version_completa()}")
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('construct', parents=[comunes], help='construye un rosario')
    p.add_argument('--n', type=int)
    p.add_argument('--method', choices=['naive', 'theorem', 'catalog'], required=True)
    p.add_argument('--name', help='clave del catálogo (con --method catalog)')

    p = sub.add_parser('verify', parents=[comunes, motor], help='verifica la propiedad de rosario')
    _agregar_fuente(p)
    p.add_argument('--n', type=int)
    p.add_argument('--parallel', type=int, default=None, help='procesos de verificación')
    p.add_argument('--witness-cap', type=int, default=None)
    p.add_argument('--early-exit', action='store_true')

    p = sub.add_parser('contains', parents=[comunes, motor], help='¿la permutación está en el ciclo?')
    _agregar_fuente(p)
    p.add_argument('--n', type=int)
    p.add_argument('--perm', required=True)

    p = sub.add_parser('cyclic-contains', parents=[comunes, motor], help='¿alguna rotación del patrón está en el ciclo?')
    _agregar_fuente(p)
    p.add_argument('--n', type=int)
    p.add_argument('--pattern', required=True)

    p = sub.add_parser('blocks', parents=[comunes], help='bloques monótonos maximales')
    _agregar_fuente(p)
    p.add_argument('--n', type=int)

    p = sub.add_parser('code', parents=[comunes], help='código de ascensos y descomposición λ')
    _agregar_fuente(p)
    p.add_argument('--n', type=int)
    p.add_argument('--string', action='store_true', help='código de cadena en lugar de cíclico')

    p = sub.add_parser('search', parents=[comunes], help='búsqueda de rosarios de longitud dada')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--length', type=int, required=True)
    p.add_argument('--prefix', help='prefijo fijo (por defecto 1,2,...,n)')
    p.add_argument('--budget', type=float, default=None, help='segundos')
    p.add_argument('--nodes', type=int, default=None, help='máximo de nodos')
    p.add_argument('--max-results', type=int, default=1)
    p.add_argument('--no-prune-adjacent', action='store_true')
    p.add_argument('--no-prune-sample', action='store_true')
    p.add_argument('--sample-size', type=int, default=None)
    p.add_argument('--seed', type=int, default=None)
    p.add_argument('--parallel', type=int, default=None)

    p = sub.add_parser('exact', parents=[comunes], help='r(n) exacto para n pequeño')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--max-n', type=int, default=None, help='tope de n (modo largo)')

    p = sub.add_parser('table', parents=[comunes], help='tabla de cotas')
    p.add_argument('--max-n', type=int, default=10)
    p.add_argument('--format', choices=['text', 'json', 'csv'], default='text')

    p = sub.add_parser('lemma', parents=[comunes], help='predicados de los lemas')
    p.add_argument('--kind', choices=['lemma1', 'lucky', 'sweep1', 'sweep2', 'params'], required=True)
    p.add_argument('--perm')
    p.add_argument('--K', type=int)
    p.add_argument('--M', type=int)
    p.add_argument('--N', type=int)
    p.add_argument('--n', type=int)

    p = sub.add_parser('counterexample', parents=[comunes, motor], help='casos n=21 y n=33')
    p.add_argument('--case', choices=['n21', 'n33'], required=True)

    p = sub.add_parser('string-check', parents=[comunes], help='¿la cadena contiene todas las permutaciones?')
    _agregar_fuente(p)
    p.add_argument('--n', type=int)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = crear_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # --help y --version salen con 0; errores de argparse con 2
        return e.code if isinstance(e.code, int) else EXIT_USO

    args._inicio = time.perf_counter()
    salida = Salida(json_mode=args.json, quiet=args.quiet)
    try:
        return COMANDOS[args.command](args, salida)
    except RosaryError as e:
        salida.error(str(e))
        return EXIT_USO


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""
Verificación de punta a punta de las construcciones y resultados conocidos.

Revisa las construcciones de los teoremas, los rosarios del catálogo,
los contraejemplos n=21 y n=33, los barridos de los lemas, la tabla de
cotas, la desigualdad de duplicación y los mínimos exactos.

Uso:
    python tools/verificar_resultados.py [--rapido] [--parallel N] [--search-budget SEG]

Opciones:
    --rapido          Omite n=9, el barrido n=6, la búsqueda y r(4)
    --parallel N      Procesos para la verificación de n=9
    --search-budget   Segundos para la búsqueda de longitud 17 (default: 600)
"""

import argparse
import os
import sys
import time

# Agregar path del proyecto
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from modelo import constructions, containment, lemmas, search
from modelo.catalogo import Catalogo
from modelo.errores import RosaryError
from modelo.seqcore import Cycle

# ─────────────────────────────────────────────────────────
# CONFIGURACIÓN
# ─────────────────────────────────────────────────────────

LONGITUDES_PARES = {4: 8, 6: 18, 8: 32}
LONGITUDES_IMPARES = {5: 12, 7: 25, 9: 41}
LONGITUDES_FIG1 = {'fig1-n2': 2, 'fig1-n3': 4, 'fig1-n4': 8, 'fig1-n5': 12}
CLAVES_17 = ['fig2-n6'] + [f'list-n6-{i:02d}' for i in range(1, 11)]


class Verificador:
    """Acumula resultados de verificación con mensajes ✓ / ✗."""

    def __init__(self):
        self.fallas = 0
        self.total = 0

    def revisar(self, descripcion: str, condicion: bool, detalle: str = ""):
        self.total += 1
        if condicion:
            print(f"✓ {descripcion}")
        else:
            self.fallas += 1
            print(f"✗ {descripcion}{': ' + detalle if detalle else ''}")


def _rosario(c: Cycle, n: int, workers: int = 1) -> bool:
    return containment.is_rosary(c, n, workers=workers, early_exit=True).is_rosary


def _duplicado_contiene_todo(c: Cycle, n: int) -> bool:
    contiene, _ = containment.string_contains_all_permutations(c.values + c.values, n)
    return contiene


def verificar_teoremas(v: Verificador, rapido: bool, workers: int):
    print("\n→ Construcciones de los teoremas")
    for n, largo in LONGITUDES_PARES.items():
        c = constructions.theorem1_rosary(n)
        v.revisar(f"Teorema n par, n={n}: longitud {len(c)} y rosario",
                  len(c) == largo and _rosario(c, n))

    for n, largo in LONGITUDES_IMPARES.items():
        if rapido and n == 9:
            print("⚠ n=9 omitido (--rapido)")
            continue
        inicio = time.perf_counter()
        c = constructions.theorem2_rosary(n)
        ok = len(c) == largo and len(c) == constructions.theorem_length(n) and _rosario(c, n, workers)
        v.revisar(f"Teorema n impar, n={n}: longitud {len(c)} y rosario "
                  f"({time.perf_counter() - inicio:.1f} s)", ok)


def verificar_catalogo(v: Verificador):
    print("\n→ Rosarios del catálogo")
    for clave, largo in LONGITUDES_FIG1.items():
        c = constructions.catalog(clave)
        v.revisar(f"{clave}: longitud {largo} y rosario", len(c) == largo and _rosario(c, c.n))

    for clave in CLAVES_17:
        c = constructions.catalog(clave)
        v.revisar(f"{clave}: longitud 17 y rosario", len(c) == 17 and _rosario(c, 6))

    c = constructions.catalog('n8-31')
    v.revisar("n8-31: longitud 31 y rosario", len(c) == 31 and _rosario(c, 8))


def verificar_contraejemplos(v: Verificador):
    print("\n→ Contraejemplos")
    for caso, largo in (('n21', 221), ('n33', 544)):
        permutacion, ciclo = constructions.counterexample_instance(caso)
        veredicto = containment.cycle_contains_permutation(ciclo, permutacion)
        v.revisar(f"{caso}: la permutación no está en el ciclo de longitud {largo}",
                  len(ciclo) == largo and not veredicto.contained)


def verificar_lemas(v: Verificador, rapido: bool):
    print("\n→ Barridos de los lemas")
    for n in (4, 5, 6):
        if rapido and n == 6:
            print("⚠ barrido n=6 omitido (--rapido)")
            continue
        for nombre, barrido in (("Lema 1", lemmas.lemma1_sweep), ("Lema 2", lemmas.lemma2_sweep)):
            res = barrido(n)
            v.revisar(f"{nombre}, n={n}: {res.fired} disparos, {len(res.violations)} violaciones",
                      not res.violations and res.fired == res.confirmed)


def verificar_cotas(v: Verificador):
    print("\n→ Tabla de cotas")
    filas = constructions.bounds_table(101)
    v.revisar("corollary_ok en todas las filas n ≤ 101", all(f.corollary_ok for f in filas))
    impares = [f for f in filas if f.n % 2 and f.theorem_length is not None]
    v.revisar("longitud del teorema < n²/2 + n/4 - 1 para n impar ≤ 101",
              all(f.theorem_length < f.odd_bound for f in impares))


def verificar_duplicacion(v: Verificador):
    print("\n→ Desigualdad de duplicación")
    ciclos = [constructions.catalog(k) for k in list(LONGITUDES_FIG1) + CLAVES_17]
    ciclos += [constructions.theorem_rosary(n) for n in (4, 5, 6, 7)]
    v.revisar(f"{len(ciclos)} rosarios duplicados contienen todas las permutaciones",
              all(_duplicado_contiene_todo(c, c.n) for c in ciclos))


def verificar_busqueda(v: Verificador, rapido: bool, presupuesto: float, workers: int):
    print("\n→ Búsqueda y mínimos exactos")
    r2, _ = search.exact_r(2)
    v.revisar(f"r(2) = {r2}", r2 == 2)
    r3, testigo3 = search.exact_r(3)
    v.revisar(f"r(3) = {r3} ≤ 4, testigo {testigo3.values}", r3 <= 4 and _rosario(testigo3, 3))
    if rapido:
        print("⚠ r(4) y búsqueda de longitud 17 omitidos (--rapido)")
        return

    r4, testigo4 = search.exact_r(4, quiet=False)
    v.revisar(f"r(4) = {r4} ≤ 8", r4 <= 8 and _rosario(testigo4, 4))

    cfg = search.SearchConfig(n=6, target_length=17, time_budget=presupuesto)
    res = search.search_rosaries(cfg, workers=workers, quiet=False)
    detalle = ""
    if res.found:
        canonica = search.canonical_form(res.found[0])
        conocidas = {search.canonical_form(constructions.catalog(k)) for k in CLAVES_17}
        detalle = f"forma canónica {canonica.values}{' (en el catálogo)' if canonica in conocidas else ''}"
        print(f"  {detalle}")
    v.revisar(f"búsqueda n=6, L=17: {len(res.found)} rosario(s) en {res.nodes} nodos", bool(res.found), detalle)


def main(argv=None):
    parser = argparse.ArgumentParser(description='Verificación de las construcciones y resultados conocidos sobre rosarios')
    parser.add_argument('--rapido', action='store_true',
                        help='Omite las verificaciones largas')
    parser.add_argument('--parallel', type=int, default=1,
                        help='Procesos para la verificación de n=9 y la búsqueda (default: 1)')
    parser.add_argument('--search-budget', type=float, default=600.0,
                        help='Segundos para la búsqueda de longitud 17 (default: 600)')
    args = parser.parse_args(argv)

    print("=" * 60)
    print("Rosarios - Verificación de resultados")
    print(f"Catálogo: {Catalogo().checksum()}")
    print("=" * 60)

    v = Verificador()
    try:
        verificar_teoremas(v, args.rapido, args.parallel)
        verificar_catalogo(v)
        verificar_contraejemplos(v)
        verificar_lemas(v, args.rapido)
        verificar_cotas(v)
        verificar_duplicacion(v)
        verificar_busqueda(v, args.rapido, args.search_budget, args.parallel)
    except RosaryError as e:
        print(f"✗ Error: {e}")
        return 2

    print()
    print("=" * 60)
    print(f"{v.total - v.fallas}/{v.total} verificaciones correctas")
    print("=" * 60)
    return 0 if v.fallas == 0 else 1


if __name__ == '__main__':
    sys.exit(main())

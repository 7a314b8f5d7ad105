# vista/salida.py
"""
Vista de la línea de comandos.

Todo el resultado va a stdout (texto legible o, con --json, un único
reporte JSON); los diagnósticos ✓ ✗ ⚠ → van a stderr.
"""

import sys
from typing import Any, Callable, Dict, List

from modelo.formato_texto import formatear
from modelo.reportes import Report


def _lista(valores: List[int]) -> str:
    return "(" + ",".join(str(v) for v in valores) + ")"


def _si_no(valor: bool) -> str:
    return "sí" if valor else "no"


# ─────────────────────────────────────────────────────────
# RENDERIZADO POR COMANDO
# ─────────────────────────────────────────────────────────

def texto_construct(r: Dict[str, Any]) -> str:
    return formatear(r['cycle'], f"{r['construction']}, longitud {r['length']}") + "\n"


def texto_verify(r: Dict[str, Any]) -> str:
    lineas = [
        f"rosario: {_si_no(r['is_rosary'])}",
        f"n: {r['n']}  longitud: {r['length']}  motor: {r['engine']}",
        f"revisadas: {r['checked']}  faltantes: {r['missing_count']}",
    ]
    if r['missing']:
        lineas.append("permutaciones faltantes:")
        lineas.extend(formatear(m) for m in r['missing'])
        if r['missing_count'] > len(r['missing']):
            lineas.append(f"# ... y {r['missing_count'] - len(r['missing'])} más")
    return "\n".join(lineas) + "\n"


def texto_contains(r: Dict[str, Any]) -> str:
    if not r['contained']:
        return "no contenida\n"
    return f"contenida desde el índice {r['start_index']} (inicio {r['case_key']})\n"


def texto_cyclic_contains(r: Dict[str, Any]) -> str:
    return "contenida (cíclicamente)\n" if r['contained'] else "no contenida (cíclicamente)\n"


def _bloques(titulo: str, bloques: List[Dict[str, Any]]) -> List[str]:
    lineas = [f"{titulo}: {len(bloques)}"]
    for b in bloques:
        lineas.append(f"  [{b['start']}, +{b['length']}] {_lista(b['values'])}")
    return lineas


def texto_blocks(r: Dict[str, Any]) -> str:
    lineas = _bloques("crecientes", r['increasing']) + _bloques("decrecientes", r['decreasing'])
    lineas.append(f"rachas de cadena: {r['string_runs']['ascents']} de ascensos, "
                  f"{r['string_runs']['descents']} de descensos")
    return "\n".join(lineas) + "\n"


def texto_code(r: Dict[str, Any]) -> str:
    lineas = [f"código ({r['kind']}): {','.join(str(b) for b in r['bits'])}"]
    if r.get('lambda'):
        ld = r['lambda']
        lineas.append(f"x={ld['x']}  y={ld['y']}  λ={_lista(ld['lambdas'])}  ancla={ld['anchor']}")
    return "\n".join(lineas) + "\n"


def texto_search(r: Dict[str, Any]) -> str:
    lineas = [formatear(c, f"rosario {i}") for i, c in enumerate(r['found'], start=1)]
    estado = "espacio agotado" if r['exhausted'] else f"detenida ({r['stop_reason']})"
    lineas.append(f"# {len(r['found'])} encontrado(s), {r['nodes']} nodos, {estado}")
    return "\n".join(lineas) + "\n"


def texto_exact(r: Dict[str, Any]) -> str:
    return f"r({r['n']}) = {r['r']}\n{formatear(r['witness'], 'testigo canónico')}\n"


def texto_lemma(r: Dict[str, Any]) -> str:
    tipo = r['kind']
    if tipo in ("sweep1", "sweep2"):
        lineas = [
            f"n={r['n']}: {r['cases']} casos, el predicado disparó en {r['fired']}, "
            f"contención confirmada en {r['confirmed']}",
            f"violaciones: {len(r['violations'])}",
        ]
        lineas.extend(f"  {v}" for v in r['violations'][:10])
        return "\n".join(lineas) + "\n"
    if tipo == "params":
        return "\n".join(f"{k}: {tuple(v)}" for k, v in r['parameters'].items()) + "\n"
    if tipo == "lucky":
        indices = r['lucky_indices']
        lineas = [f"índices afortunados: {_lista(indices) if indices else 'ninguno'}"]
    else:
        lineas = [f"predicado: {'i = ' + str(r['index']) if r['predicate_fired'] else 'no dispara'}"]
    if r['predicate_fired']:
        lineas.append(f"contención en el ciclo objetivo (longitud {r['target_length']}): "
                      f"{_si_no(r['containment_confirmed'])}")
    return "\n".join(lineas) + "\n"


def texto_counterexample(r: Dict[str, Any]) -> str:
    return (
        f"caso {r['case']}: permutación de grado {r['n']}, ciclo de longitud {r['cycle_length']}\n"
        f"x={r['x']}  y={r['y']}  λ={_lista(r['lambdas'])}\n"
        f"bloques crecientes: {r['increasing_blocks']}  decrecientes: {r['decreasing_blocks']}\n"
        f"rachas de cadena: {r['string_runs']['ascents']} de ascensos, "
        f"{r['string_runs']['descents']} de descensos\n"
        f"{'no contenida' if not r['contained'] else 'contenida'}: "
        f"la afirmación {'se confirma' if r['claim_confirmed'] else 'NO se confirma'}\n"
    )


def texto_string_check(r: Dict[str, Any]) -> str:
    if r['contains_all']:
        return f"la cadena contiene las {r['checked']} permutaciones\n"
    return f"falta al menos una permutación; primera: {formatear(r['first_missing'])}\n"


RENDERIZADORES: Dict[str, Callable[[Dict[str, Any]], str]] = {
    'construct': texto_construct,
    'verify': texto_verify,
    'contains': texto_contains,
    'cyclic-contains': texto_cyclic_contains,
    'blocks': texto_blocks,
    'code': texto_code,
    'search': texto_search,
    'exact': texto_exact,
    'lemma': texto_lemma,
    'counterexample': texto_counterexample,
    'string-check': texto_string_check,
}


# ─────────────────────────────────────────────────────────
# SALIDA
# ─────────────────────────────────────────────────────────

class Salida:
    """Canal de salida de un comando (modo JSON o texto, silencioso o no)."""

    def __init__(self, json_mode: bool = False, quiet: bool = False):
        self.json_mode = json_mode
        self.quiet = quiet

    def mostrar(self, reporte: Report, texto: str = None):
        """Imprime el reporte completo; `texto` reemplaza el renderizado por defecto."""
        if self.json_mode:
            print(reporte.to_json())
            return
        if texto is None:
            texto = RENDERIZADORES[reporte.command](reporte.result)
        sys.stdout.write(texto)

    def error(self, mensaje: str):
        print(f"✗ {mensaje}", file=sys.stderr)

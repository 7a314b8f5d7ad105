# modelo/containment.py
"""
Procedimientos de decisión exactos: contención de una permutación en un
ciclo, contención cíclica, verificación completa de rosarios y
verificación de cadenas que contienen todas las permutaciones.

Una lectura desde j recorre exactamente una vuelta: c_j, ..., c_{j+r-1};
la posición j+r ya no se usa.
"""

import itertools
import math
import sys
import time
from abc import ABC, abstractmethod
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from modelo.configuracion import ajustes
from modelo.errores import AlphabetError, CostLimitError, DomainError
from modelo.seqcore import Cycle, Permutation

# Máximo de permutaciones por bloque lexicográfico y por lote vectorizado
BLOQUE_MAX = 40320
LOTE = 8192


# ─────────────────────────────────────────────────────────
# TIPOS
# ─────────────────────────────────────────────────────────

@dataclass(frozen=True)
class ContainmentVerdict:
    """
    Resultado de buscar una permutación en un ciclo.

    `start_index` es el inicio (1-based) más a la izquierda que funciona;
    `case_key` es su etiqueta de ocurrencia, p. ej. "1_2".
    """
    contained: bool
    start_index: Optional[int] = None
    case_key: Optional[str] = None


@dataclass(frozen=True)
class RosaryReport:
    n: int
    length: int
    is_rosary: bool
    checked: int
    missing: Tuple[Tuple[int, ...], ...]
    missing_count: int
    elapsed_ms: float
    engine: str
    early_exit: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'length': self.length,
            'is_rosary': self.is_rosary,
            'checked': self.checked,
            'missing': [list(m) for m in self.missing],
            'missing_count': self.missing_count,
            'elapsed_ms': round(self.elapsed_ms, 3),
            'engine': self.engine,
            'early_exit': self.early_exit,
        }


class NextOccurrenceTable:
    """
    Tabla de siguiente ocurrencia sobre un texto fijo.

    tabla[i, v] es el menor j ≥ i con text[j] = v (0-based), o el
    centinela len(text) si no existe. Las filas len y len+1 son centinela,
    así un avance después de fallar sigue fallando.
    """

    def __init__(self, text: Sequence[int], n: int):
        t = np.asarray(tuple(text), dtype=np.int64)
        largo = len(t)
        if largo and (t.min() < 1 or t.max() > n):
            raise AlphabetError(f"El texto tiene valores fuera de [1, {n}]")

        tabla = np.full((largo + 2, n + 1), largo, dtype=np.int64)
        for i in range(largo - 1, -1, -1):
            tabla[i] = tabla[i + 1]
            tabla[i, t[i]] = i

        self.text = tuple(int(v) for v in t)
        self.n = n
        self.sentinel = largo
        self.tabla = tabla

    @classmethod
    def doubled(cls, c: Cycle) -> "NextOccurrenceTable":
        """Tabla sobre c·c: cubre todas las lecturas de una vuelta."""
        return cls(c.values + c.values, c.n)

    def next(self, i: int, v: int) -> Optional[int]:
        q = int(self.tabla[i, v])
        return None if q == self.sentinel else q

    def advance(self, pos: np.ndarray, valores: np.ndarray) -> np.ndarray:
        """Un paso voraz vectorizado: posición siguiente al match de cada valor."""
        return self.tabla[pos, valores] + 1


# ─────────────────────────────────────────────────────────
# CADENAS
# ─────────────────────────────────────────────────────────

def string_contains(text: Sequence[int], pattern: Sequence[int]) -> bool:
    """Subsecuencia (no necesariamente contigua), por emparejamiento voraz."""
    it = iter(text)
    return all(any(t == v for t in it) for v in pattern)


def start_label(c: Cycle, index: int) -> str:
    """Etiqueta "v_j": el inicio es la j-ésima ocurrencia del valor v."""
    v = c.at(index)
    ocurrencia = c.values[:index].count(v)
    return f"{v}_{ocurrencia}"


# ─────────────────────────────────────────────────────────
# MOTORES
# ─────────────────────────────────────────────────────────

class ContainmentEngine(ABC):
    """
    Interfaz de los motores de contención.
    Ambos motores deben dar exactamente los mismos veredictos.
    """

    name = ""

    @abstractmethod
    def first_starts(self, c: Cycle, patterns: np.ndarray) -> np.ndarray:
        """
        Para cada fila de `patterns`, el inicio 1-based más a la izquierda
        cuya lectura de una vuelta la contiene, o 0 si no existe.
        """
        pass

    def contains(self, c: Cycle, pattern: Sequence[int]) -> ContainmentVerdict:
        fila = np.asarray([tuple(pattern)], dtype=np.int64).reshape(1, -1)
        inicio = int(self.first_starts(c, fila)[0])
        if inicio == 0:
            return ContainmentVerdict(False)
        return ContainmentVerdict(True, inicio, start_label(c, inicio))


class NaiveEngine(ContainmentEngine):
    """Voraz por rotación, en Python puro."""

    name = "naive"

    def first_starts(self, c: Cycle, patterns: np.ndarray) -> np.ndarray:
        r = len(c)
        lecturas = [c.linearization(j) for j in range(1, r + 1)]
        salida = np.zeros(len(patterns), dtype=np.int64)
        for fila, patron in enumerate(patterns.tolist()):
            for j, lectura in enumerate(lecturas, start=1):
                if string_contains(lectura, patron):
                    salida[fila] = j
                    break
        return salida


@lru_cache(maxsize=256)
def tabla_duplicada(c: Cycle) -> NextOccurrenceTable:
    """Tabla de c·c, reutilizada entre llamadas con el mismo ciclo."""
    return NextOccurrenceTable.doubled(c)


class NextTableEngine(ContainmentEngine):
    """
    Tabla de siguiente ocurrencia sobre el texto duplicado; avanza todas
    las filas y todos los inicios a la vez con numpy.
    """

    name = "nexttable"

    def first_starts(self, c: Cycle, patterns: np.ndarray, tabla: Optional[NextOccurrenceTable] = None) -> np.ndarray:
        tabla = tabla or tabla_duplicada(c)
        r = len(c)
        inicios = np.arange(r, dtype=np.int64)
        salida = np.zeros(len(patterns), dtype=np.int64)

        for desde in range(0, len(patterns), LOTE):
            lote = patterns[desde:desde + LOTE]
            pos = np.tile(inicios, (len(lote), 1))
            for k in range(lote.shape[1]):
                pos = tabla.advance(pos, lote[:, k][:, None])
            ok = pos <= inicios + r
            hay = ok.any(axis=1)
            salida[desde:desde + len(lote)] = np.where(hay, ok.argmax(axis=1) + 1, 0)
        return salida


ENGINES: Dict[str, ContainmentEngine] = {
    NaiveEngine.name: NaiveEngine(),
    NextTableEngine.name: NextTableEngine(),
}


def get_engine(name: str) -> ContainmentEngine:
    if name not in ENGINES:
        raise DomainError(f"Motor desconocido: {name} (opciones: {', '.join(ENGINES)})")
    return ENGINES[name]


# ─────────────────────────────────────────────────────────
# CONTENCIÓN
# ─────────────────────────────────────────────────────────

def _patron(p: Union[Permutation, Cycle, Sequence[int]]) -> Tuple[int, ...]:
    if isinstance(p, (Permutation, Cycle)):
        return p.values
    return tuple(int(v) for v in p)


def _validar_alfabeto(c: Cycle, valores: Iterable[int]):
    fuera = sorted({v for v in valores if not 1 <= v <= c.n})
    if fuera:
        raise AlphabetError(f"El patrón usa valores fuera del alfabeto del ciclo [1, {c.n}]: {fuera}")


def cycle_contains_permutation(c: Cycle, p: Union[Permutation, Sequence[int]],
                               engine: Optional[str] = None) -> ContainmentVerdict:
    """¿Existe j tal que p es subsecuencia de c_j, ..., c_{j+r-1}? Sin motor se usa el configurado."""
    patron = _patron(p)
    _validar_alfabeto(c, patron)
    return get_engine(ajustes({'engine': engine}).engine).contains(c, patron)


def cyclic_contains(c: Cycle, a: Union[Permutation, Cycle, Sequence[int]],
                    engine: Optional[str] = None) -> bool:
    """
    Contención cíclica: alguna rotación de a está contenida en c.
    Es más débil que exigir todas las rotaciones.
    """
    patron = _patron(a)
    _validar_alfabeto(c, patron)
    m = len(patron)
    if m == 0:
        return True
    rotaciones = np.asarray([patron[k:] + patron[:k] for k in range(m)], dtype=np.int64)
    return bool(get_engine(ajustes({'engine': engine}).engine).first_starts(c, rotaciones).any())


# ─────────────────────────────────────────────────────────
# VERIFICACIÓN DE ROSARIOS
# ─────────────────────────────────────────────────────────

def _profundidad_prefijo(n: int) -> int:
    """Menor d tal que cada bloque (prefijo de largo d fijo) tenga ≤ BLOQUE_MAX permutaciones."""
    d = 0
    while d < n and math.factorial(n - d) > BLOQUE_MAX:
        d += 1
    return d


def prefijos(n: int) -> List[Tuple[int, ...]]:
    """Prefijos que parten el espacio en rangos lexicográficos contiguos."""
    return list(itertools.permutations(range(1, n + 1), _profundidad_prefijo(n)))


def permutaciones_con_prefijo(n: int, prefijo: Tuple[int, ...]) -> np.ndarray:
    """Todas las permutaciones con ese prefijo, en orden lexicográfico."""
    resto = [v for v in range(1, n + 1) if v not in prefijo]
    cola = np.asarray(list(itertools.permutations(resto)), dtype=np.int64).reshape(-1, len(resto))
    cabeza = np.tile(np.asarray(prefijo, dtype=np.int64), (len(cola), 1))
    return np.hstack([cabeza, cola]) if len(prefijo) else cola


@dataclass
class _ResultadoBloque:
    checked: int
    missing_count: int
    missing: List[Tuple[int, ...]] = field(default_factory=list)


def _verificar_bloque(valores: Tuple[int, ...], n: int, prefijo: Tuple[int, ...],
                      motor: str, tope: int, parar: bool) -> _ResultadoBloque:
    # Función de módulo para poder enviarla a otros procesos
    c = Cycle(valores, n)
    perms = permutaciones_con_prefijo(n, prefijo)
    inicios = get_engine(motor).first_starts(c, perms)
    faltan = np.flatnonzero(inicios == 0)

    if parar and len(faltan):
        primero = int(faltan[0])
        return _ResultadoBloque(primero + 1, 1, [tuple(int(v) for v in perms[primero])])

    testigos = [tuple(int(v) for v in perms[i]) for i in faltan[:tope]]
    return _ResultadoBloque(len(perms), len(faltan), testigos)


def _costo(n: int, r: int) -> int:
    return math.factorial(n) * r


def is_rosary(c: Cycle, n: int, engine: Optional[str] = None, workers: Optional[int] = None,
              witness_cap: Optional[int] = None, early_exit: bool = False,
              max_n: Optional[int] = None, quiet: bool = True) -> RosaryReport:
    """
    Verifica las n! permutaciones de {1..n} contra c.

    Las permutaciones se recorren en orden lexicográfico, en bloques
    contiguos que pueden repartirse entre procesos; la fusión es por orden
    de bloque, así el reporte no depende del reparto.
    """
    cfg = ajustes({'engine': engine, 'workers': workers, 'witness_cap': witness_cap, 'max_n': max_n})

    if n < 2:
        raise DomainError(f"La verificación requiere n ≥ 2 (recibido {n})")
    if n > cfg.max_n:
        raise CostLimitError(
            f"n={n} excede el límite {cfg.max_n}: {math.factorial(n)} permutaciones × {len(c)} inicios "
            f"≈ {_costo(n, len(c)):.3g} pasos",
            estimado=_costo(n, len(c)),
        )
    ciclo = Cycle(tuple(c), n)

    inicio = time.perf_counter()
    if not quiet:
        print(f"→ Verificando {math.factorial(n)} permutaciones (n={n}, longitud {len(ciclo)}, "
              f"motor {cfg.engine}, {cfg.workers} proceso(s))", file=sys.stderr)

    bloques = prefijos(n)
    args = [(ciclo.values, n, pre, cfg.engine, cfg.witness_cap, early_exit) for pre in bloques]

    checked = 0
    missing_count = 0
    testigos: List[Tuple[int, ...]] = []

    if cfg.workers > 1 and len(bloques) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            resultados = pool.map(_verificar_bloque, *zip(*args))
            for res in resultados:
                checked += res.checked
                missing_count += res.missing_count
                testigos.extend(res.missing)
                if early_exit and res.missing_count:
                    break
    else:
        for a in args:
            res = _verificar_bloque(*a)
            checked += res.checked
            missing_count += res.missing_count
            testigos.extend(res.missing)
            if early_exit and res.missing_count:
                break

    total = math.factorial(n)
    es_rosario = missing_count == 0 and checked == total
    elapsed = (time.perf_counter() - inicio) * 1000

    if not quiet:
        simbolo = "✓" if es_rosario else "✗"
        print(f"{simbolo} {checked} permutaciones revisadas, faltan {missing_count} ({elapsed:.0f} ms)",
              file=sys.stderr)

    return RosaryReport(
        n=n,
        length=len(ciclo),
        is_rosary=es_rosario,
        checked=checked,
        missing=tuple(sorted(testigos)[:cfg.witness_cap]),
        missing_count=missing_count,
        elapsed_ms=elapsed,
        engine=cfg.engine,
        early_exit=early_exit,
    )


def string_contains_all_permutations(s: Sequence[int], n: int,
                                     max_n: Optional[int] = None) -> Tuple[bool, Optional[Tuple[int, ...]]]:
    """
    ¿La cadena lineal s contiene todas las permutaciones de {1..n}?
    Devuelve también la primera que falta en orden lexicográfico.
    """
    cfg = ajustes({'max_n': max_n})
    if n > cfg.max_n:
        raise CostLimitError(f"n={n} excede el límite {cfg.max_n}", estimado=_costo(n, len(s)))

    tabla = NextOccurrenceTable(s, n)
    for pre in prefijos(n):
        perms = permutaciones_con_prefijo(n, pre)
        for desde in range(0, len(perms), LOTE):
            lote = perms[desde:desde + LOTE]
            pos = np.zeros(len(lote), dtype=np.int64)
            for k in range(n):
                pos = tabla.advance(pos, lote[:, k])
            faltan = np.flatnonzero(pos > len(tabla.text))
            if len(faltan):
                return False, tuple(int(v) for v in lote[int(faltan[0])])
    return True, None

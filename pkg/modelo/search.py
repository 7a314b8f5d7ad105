# modelo/search.py
"""
Búsqueda de rosarios: DFS con poda sobre las compleciones de un prefijo
fijo y cálculo exacto de r(n) para n pequeño.

Ningún resultado se autocertifica: cada hoja que sobrevive la poda se
verifica con `is_rosary`.
"""

import itertools
import math
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from modelo.configuracion import ajustes
from modelo.constructions import naive_rosary, theorem_length
from modelo.containment import NextOccurrenceTable, is_rosary
from modelo.errores import CostLimitError, DomainError
from modelo.seqcore import Cycle

# Mayor n admitido sin ningún presupuesto
N_EXHAUSTIVO = 7

# Cada cuántos nodos se consulta el reloj
PASO_RELOJ = 1024


# ─────────────────────────────────────────────────────────
# TIPOS
# ─────────────────────────────────────────────────────────

@dataclass(frozen=True)
class SearchConfig:
    """
    Parámetros de la búsqueda. `prefix` por defecto es (1, ..., n);
    `time_budget` (segundos) y `node_budget` en None significan sin límite.
    """
    n: int
    target_length: int
    prefix: Optional[Tuple[int, ...]] = None
    time_budget: Optional[float] = None
    node_budget: Optional[int] = None
    max_results: int = 1
    prune_adjacent: bool = True
    prune_sample: bool = True
    sample_size: Optional[int] = None
    seed: Optional[int] = None

    def __post_init__(self):
        if self.n < 2:
            raise DomainError(f"La búsqueda requiere n ≥ 2 (recibido {self.n})")
        prefijo = tuple(range(1, self.n + 1)) if self.prefix is None else tuple(int(v) for v in self.prefix)
        object.__setattr__(self, 'prefix', prefijo)

        if self.target_length < self.n:
            raise DomainError(f"L={self.target_length} es menor que n={self.n}")
        if len(prefijo) > self.target_length:
            raise DomainError(f"El prefijo ({len(prefijo)}) es más largo que L={self.target_length}")
        if any(not 1 <= v <= self.n for v in prefijo):
            raise DomainError(f"El prefijo usa valores fuera de [1, {self.n}]")
        if self.time_budget is not None and self.time_budget <= 0:
            raise DomainError("El presupuesto de tiempo debe ser positivo")
        if self.node_budget is not None and self.node_budget <= 0:
            raise DomainError("El presupuesto de nodos debe ser positivo")
        if self.max_results < 1:
            raise DomainError("max_results debe ser ≥ 1")
        if self.n > N_EXHAUSTIVO and self.time_budget is None and self.node_budget is None:
            raise CostLimitError(
                f"n={self.n} > {N_EXHAUSTIVO} requiere un presupuesto de tiempo o de nodos",
                estimado=(self.n - 1) ** (self.target_length - len(prefijo)),
            )

    @property
    def libres(self) -> int:
        return self.target_length - len(self.prefix)


@dataclass(frozen=True)
class SearchOutcome:
    found: Tuple[Cycle, ...]
    nodes: int
    exhausted: bool
    elapsed_ms: float
    stop_reason: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'found': [list(c.values) for c in self.found],
            'nodes': self.nodes,
            'exhausted': self.exhausted,
            'elapsed_ms': round(self.elapsed_ms, 3),
            'stop_reason': self.stop_reason,
        }


# ─────────────────────────────────────────────────────────
# FILTRO POR MUESTRA
# ─────────────────────────────────────────────────────────

def muestra_permutaciones(n: int, tamano: int, seed: int) -> np.ndarray:
    """
    Muestra determinista de permutaciones; si n! no supera el tamaño
    se usan todas.
    """
    if math.factorial(n) <= tamano:
        return np.asarray(list(itertools.permutations(range(1, n + 1))), dtype=np.int64)
    rng = np.random.default_rng(seed)
    base = np.tile(np.arange(1, n + 1, dtype=np.int64), (tamano, 1))
    return rng.permuted(base, axis=1)


def compleciones_posibles(conocido: Tuple[int, ...], libres: int, n: int, muestra: np.ndarray) -> bool:
    """
    False si alguna permutación de la muestra no cabe en ninguna
    compleción del ciclo `conocido` + `libres` posiciones desconocidas.

    Las posiciones desconocidas son comodines, así que la respuesta nunca
    descarta una compleción que contenga a toda la muestra.
    """
    if libres >= n:
        return True
    m = len(conocido)
    tabla = NextOccurrenceTable(conocido, n)
    S = len(muestra)

    # Inicio j en la parte conocida: K[j:m], comodines, K[0:j]
    inicios = np.arange(m, dtype=np.int64)
    pos = np.tile(inicios, (S, 1))
    cubiertos = np.zeros((S, m), dtype=np.int64)
    for k in range(n):
        pos = tabla.advance(pos, muestra[:, k][:, None])
        cubiertos += pos <= m
    salto = np.minimum(cubiertos + libres, n)
    pos = np.zeros((S, m), dtype=np.int64)
    for k in range(n):
        activo = k >= salto
        pos = np.where(activo, tabla.advance(pos, muestra[:, k][:, None]), pos)
    ok = (salto >= n) | (pos <= inicios)

    # Inicio dentro de la parte desconocida: s comodines, K entero, el resto comodines
    if libres:
        saltos = np.arange(1, libres + 1, dtype=np.int64)
        pos = np.zeros((S, libres), dtype=np.int64)
        cubiertos = np.zeros((S, libres), dtype=np.int64)
        for k in range(n):
            activo = k >= saltos
            pos = np.where(activo, tabla.advance(pos, muestra[:, k][:, None]), pos)
            cubiertos += activo & (pos <= m)
        ok = np.hstack([ok, cubiertos >= n - libres])

    return bool(ok.any(axis=1).all())


# ─────────────────────────────────────────────────────────
# DFS
# ─────────────────────────────────────────────────────────

class _Explorador:
    """Estado de una búsqueda en profundidad (una por proceso)."""

    def __init__(self, cfg: SearchConfig, limite_nodos: Optional[int], fin: Optional[float]):
        self.cfg = cfg
        self.n = cfg.n
        self.L = cfg.target_length
        self.limite_nodos = limite_nodos
        self.fin = fin

        base = ajustes({'sample_size': cfg.sample_size, 'seed': cfg.seed})
        self.muestra = muestra_permutaciones(cfg.n, base.sample_size, base.seed) if cfg.prune_sample else None

        self.secuencia: List[int] = list(cfg.prefix)
        self.usos = [0] * (cfg.n + 1)
        for v in cfg.prefix:
            self.usos[v] += 1
        self.faltantes = sum(1 for v in range(1, cfg.n + 1) if self.usos[v] == 0)

        self.nodos = 0
        self.encontrados: List[Cycle] = []
        self.motivo: Optional[str] = None

    def _presupuesto_agotado(self) -> bool:
        if self.limite_nodos is not None and self.nodos > self.limite_nodos:
            self.motivo = "nodes"
        elif self.fin is not None and self.nodos % PASO_RELOJ == 0 and time.time() > self.fin:
            self.motivo = "time"
        return self.motivo is not None

    def _hoja(self):
        ciclo = Cycle(tuple(self.secuencia), self.n)
        if is_rosary(ciclo, self.n, early_exit=True, workers=1).is_rosary:
            self.encontrados.append(ciclo)
            if len(self.encontrados) >= self.cfg.max_results:
                self.motivo = "results"

    def _poner(self, v: int):
        self.secuencia.append(v)
        self.usos[v] += 1
        if self.usos[v] == 1:
            self.faltantes -= 1

    def _quitar(self):
        v = self.secuencia.pop()
        self.usos[v] -= 1
        if self.usos[v] == 0:
            self.faltantes += 1

    def candidatos(self) -> List[int]:
        m = len(self.secuencia)
        simbolos = list(range(1, self.n + 1))
        if self.cfg.prune_adjacent and m:
            simbolos = [v for v in simbolos if v != self.secuencia[-1]]
            if m == self.L - 1:
                simbolos = [v for v in simbolos if v != self.secuencia[0]]
        return simbolos

    def explorar(self, primeros: Optional[List[int]] = None):
        """DFS desde el estado actual; `primeros` restringe el primer nivel."""
        self.nodos += 1
        if self._presupuesto_agotado():
            return

        m = len(self.secuencia)
        restantes = self.L - m
        if restantes == 0:
            self._hoja()
            return
        # Cada valor de {1..n} debe aparecer
        if self.faltantes > restantes:
            return
        if self.muestra is not None and not compleciones_posibles(tuple(self.secuencia), restantes, self.n, self.muestra):
            return

        for v in (primeros if primeros is not None else self.candidatos()):
            self._poner(v)
            self.explorar()
            self._quitar()
            if self.motivo is not None:
                return


def _explorar_rama(cfg: SearchConfig, simbolo: Optional[int], limite_nodos: Optional[int],
                   fin: Optional[float]) -> Tuple[List[Tuple[int, ...]], int, Optional[str]]:
    # Función de módulo para poder enviarla a otros procesos
    explorador = _Explorador(cfg, limite_nodos, fin)
    explorador.explorar(None if simbolo is None else [simbolo])
    return [c.values for c in explorador.encontrados], explorador.nodos, explorador.motivo


def search_rosaries(cfg: SearchConfig, workers: Optional[int] = None, quiet: bool = True) -> SearchOutcome:
    """
    Busca rosarios de longitud L que empiezan con el prefijo.

    Con `exhausted=True` y `found` vacío, no existe ningún rosario con
    esas restricciones. Con varios procesos, cada rama del primer nivel
    es independiente y los resultados se fusionan por índice de rama.
    """
    base = ajustes({'workers': workers})
    if cfg.n > base.max_n:
        raise CostLimitError(f"n={cfg.n} excede el límite de verificación {base.max_n}",
                             estimado=math.factorial(cfg.n) * cfg.target_length)

    inicio = time.perf_counter()
    fin = time.time() + cfg.time_budget if cfg.time_budget is not None else None
    if not quiet:
        print(f"→ Buscando rosarios de grado {cfg.n} y longitud {cfg.target_length} "
              f"({cfg.libres} posiciones libres)", file=sys.stderr)

    ramas = _Explorador(cfg, None, None).candidatos() if cfg.libres > 0 else []
    if base.workers > 1 and len(ramas) > 1:
        limite = None if cfg.node_budget is None else max(1, cfg.node_budget // len(ramas))
        with ProcessPoolExecutor(max_workers=base.workers) as pool:
            resultados = list(pool.map(_explorar_rama, [cfg] * len(ramas), ramas,
                                       [limite] * len(ramas), [fin] * len(ramas)))
        encontrados = [Cycle(v, cfg.n) for res in resultados for v in res[0]]
        nodos = sum(res[1] for res in resultados)
        motivos = [res[2] for res in resultados if res[2] is not None]
        if len(encontrados) >= cfg.max_results:
            motivo = "results"
        else:
            motivo = motivos[0] if motivos else None
        encontrados = encontrados[:cfg.max_results]
    else:
        explorador = _Explorador(cfg, cfg.node_budget, fin)
        explorador.explorar()
        encontrados, nodos, motivo = explorador.encontrados, explorador.nodos, explorador.motivo

    elapsed = (time.perf_counter() - inicio) * 1000
    resultado = SearchOutcome(
        found=tuple(encontrados),
        nodes=nodos,
        exhausted=motivo is None,
        elapsed_ms=elapsed,
        stop_reason=motivo,
    )
    if not quiet:
        estado = "espacio agotado" if resultado.exhausted else f"detenida por {motivo}"
        simbolo = "✓" if resultado.found else "✗"
        print(f"{simbolo} {len(resultado.found)} rosario(s), {nodos} nodos, {estado} ({elapsed:.0f} ms)",
              file=sys.stderr)
    return resultado


# ─────────────────────────────────────────────────────────
# SIMETRÍAS Y r(n) EXACTO
# ─────────────────────────────────────────────────────────

def _por_primera_aparicion(valores: Tuple[int, ...]) -> Tuple[int, ...]:
    etiquetas: Dict[int, int] = {}
    for v in valores:
        if v not in etiquetas:
            etiquetas[v] = len(etiquetas) + 1
    return tuple(etiquetas[v] for v in valores)


def canonical_form(c: Cycle) -> Cycle:
    """
    Menor representante lexicográfico de la órbita de c bajo rotaciones,
    reetiquetados de valores e inversión.
    """
    r = len(c)
    invertido = tuple(reversed(c.values))
    candidatos = (
        _por_primera_aparicion(lectura[k:] + lectura[:k])
        for lectura in (c.values, invertido)
        for k in range(r)
    )
    return Cycle(min(candidatos), c.n)


def _cadenas_crecimiento(L: int, n: int):
    """
    Cadenas de crecimiento restringido de largo L sobre n símbolos, sin
    repeticiones cíclicas adyacentes y usando los n valores.
    """
    s = [1]

    def extender(maximo: int):
        m = len(s)
        if m == L:
            if maximo == n and (L == 1 or s[-1] != s[0]):
                yield tuple(s)
            return
        if n - maximo > L - m:
            return
        for v in range(1, min(maximo + 1, n) + 1):
            if v == s[-1]:
                continue
            s.append(v)
            yield from extender(max(maximo, v))
            s.pop()

    yield from extender(1)


def exact_r(n: int, max_n: Optional[int] = None, quiet: bool = True) -> Tuple[int, Cycle]:
    """
    Menor L que admite un rosario de grado n, con un testigo en forma
    canónica. Recorre L = n, n+1, ... hasta la cota constructiva.
    """
    cfg = ajustes({'exact_max_n': max_n})
    if n < 2:
        raise DomainError(f"r(n) exacto requiere n ≥ 2 (recibido {n})")
    if n > cfg.exact_max_n:
        raise CostLimitError(
            f"n={n} excede el tope de la búsqueda exacta ({cfg.exact_max_n}); usar --max-n para el modo largo",
            estimado=(n - 1) ** (n * n),
        )

    cota = min(v for v in (len(naive_rosary(n)), theorem_length(n)) if v is not None)
    inicio = time.perf_counter()
    for L in range(n, cota + 1):
        if not quiet:
            print(f"→ Probando longitud {L}", file=sys.stderr)
        for valores in _cadenas_crecimiento(L, n):
            ciclo = Cycle(valores, n)
            if canonical_form(ciclo) != ciclo:
                continue
            if is_rosary(ciclo, n, early_exit=True, workers=1).is_rosary:
                if not quiet:
                    print(f"✓ r({n}) = {L} ({(time.perf_counter() - inicio) * 1000:.0f} ms)", file=sys.stderr)
                return L, ciclo

    # Inalcanzable: la construcción ingenua (o la del teorema) es un rosario de largo `cota`
    raise DomainError(f"No se encontró rosario de grado {n} hasta la longitud {cota}")

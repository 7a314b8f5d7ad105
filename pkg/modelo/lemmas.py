# modelo/lemmas.py
"""
Formas ejecutables de los dos lemas de contención cíclica.

Lema 1: si alguna ventana λ_{i+1} + ... + λ_{i+K} ≥ y - M + 1, el ciclo
está contenido en (1..n)_{M-1} (1..n-1) (n..1)_{K-1} (n..2).

Lema 2: si existe un índice (K, M, N)-afortunado (ventana ≥ y - M y fin
de bloque decreciente ≤ N), el ciclo está contenido en
(1..n)_M (1..N) (n..1)_K.

Los umbrales difieren en uno; por eso son dos operaciones separadas.
"""

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from modelo.constructions import ascendente, construction_id, descendente, repetir
from modelo.containment import cyclic_contains
from modelo.errores import DomainError
from modelo.seqcore import (
    Cycle,
    LambdaDecomposition,
    Permutation,
    block_end,
    code_of_cycle,
    lambda_decomposition,
)


@dataclass(frozen=True)
class LuckyIndexQuery:
    K: int
    M: int
    N: int

    def __post_init__(self):
        if self.K < 1 or self.M < 1 or self.N < 1:
            raise DomainError(f"K, M y N deben ser ≥ 1 (recibido K={self.K}, M={self.M}, N={self.N})")


@dataclass(frozen=True)
class LemmaCheck:
    """Registro de consistencia: el predicado disparó y la contención se confirmó."""
    predicate_fired: bool
    containment_confirmed: Optional[bool]
    index: Optional[int] = None


@dataclass(frozen=True)
class SweepResult:
    n: int
    cases: int
    fired: int
    confirmed: int
    violations: Tuple[Tuple, ...]


def _permutacion(p: Union[Permutation, Sequence[int]]) -> Permutation:
    return p if isinstance(p, Permutation) else Permutation.of(p)


def decomposition_of(p: Union[Permutation, Sequence[int]]) -> LambdaDecomposition:
    """Descomposición λ de una permutación vista como ciclo."""
    return lambda_decomposition(code_of_cycle(_permutacion(p)))


def _validar_ventana(ld: LambdaDecomposition, K: int):
    if K < 1:
        raise DomainError(f"K debe ser ≥ 1 (recibido {K})")
    if K > ld.x:
        raise DomainError(f"K={K} excede x={ld.x} (la ventana no puede dar más de una vuelta)")


# ─────────────────────────────────────────────────────────
# LEMA 1
# ─────────────────────────────────────────────────────────

def lemma1_predicate(ld: LambdaDecomposition, K: int, M: int) -> Optional[int]:
    """Menor i ∈ [1, x] con λ_{i+1} + ... + λ_{i+K} ≥ y - M + 1, o None."""
    _validar_ventana(ld, K)
    if M < 1:
        raise DomainError(f"M debe ser ≥ 1 (recibido {M})")
    umbral = ld.y - M + 1
    for i in range(1, ld.x + 1):
        if ld.window_sum(i, K) >= umbral:
            return i
    return None


def lemma1_target(n: int, K: int, M: int) -> Cycle:
    """(1, ..., n)_{M-1} (1, ..., n-1) (n, ..., 1)_{K-1} (n, ..., 2)."""
    if n < 2 or K < 1 or M < 1:
        raise DomainError(f"Parámetros inválidos: n={n}, K={K}, M={M}")
    valores = (repetir(ascendente(1, n), M - 1) + ascendente(1, n - 1)
               + repetir(descendente(n, 1), K - 1) + descendente(n, 2))
    return Cycle(tuple(valores), n)


# ─────────────────────────────────────────────────────────
# LEMA 2
# ─────────────────────────────────────────────────────────

def lucky_block_end(p: Union[Permutation, Sequence[int]], i: int) -> int:
    """
    Fin del bloque decreciente que cierra la parte 1 (0)_{λ_i}: el valle
    de la bajada que empieza en el pico siguiente al i-ésimo 1 del código
    anclado.
    """
    perm = _permutacion(p)
    bits = code_of_cycle(perm).bits
    ld = lambda_decomposition(bits)
    if not 1 <= i <= ld.x:
        raise DomainError(f"Índice fuera de rango: {i} (x={ld.x})")
    unos = [t for t, b in enumerate(bits) if b == 1]
    return block_end(perm, unos[i - 1] + 1, ld.lambdas[i - 1])


def lucky_indices(p: Union[Permutation, Sequence[int]], q: LuckyIndexQuery) -> Tuple[int, ...]:
    """Índices (K, M, N)-afortunados, en orden creciente."""
    perm = _permutacion(p)
    if q.N > perm.n:
        raise DomainError(f"N={q.N} excede n={perm.n}")
    ld = decomposition_of(perm)
    _validar_ventana(ld, q.K)

    umbral = ld.y - q.M
    return tuple(
        i for i in range(1, ld.x + 1)
        if ld.window_sum(i, q.K) >= umbral and lucky_block_end(perm, i) <= q.N
    )


def lemma2_target(n: int, K: int, M: int, N: int) -> Cycle:
    """(1, ..., n)_M (1, ..., N) (n, ..., 2, 1)_K, de longitud Mn + N + Kn."""
    if n < 2 or K < 1 or M < 0 or not 1 <= N <= n:
        raise DomainError(f"Parámetros inválidos: n={n}, K={K}, M={M}, N={N}")
    valores = repetir(ascendente(1, n), M) + ascendente(1, N) + repetir(descendente(n, 1), K)
    return Cycle(tuple(valores), n)


# ─────────────────────────────────────────────────────────
# VALIDACIÓN CRUZADA
# ─────────────────────────────────────────────────────────

def check_lemma1(p: Union[Permutation, Sequence[int]], K: int, M: int) -> LemmaCheck:
    perm = _permutacion(p)
    indice = lemma1_predicate(decomposition_of(perm), K, M)
    if indice is None:
        return LemmaCheck(False, None)
    confirmado = cyclic_contains(lemma1_target(perm.n, K, M), perm)
    return LemmaCheck(True, confirmado, indice)


def check_lemma2(p: Union[Permutation, Sequence[int]], K: int, M: int, N: int) -> LemmaCheck:
    perm = _permutacion(p)
    afortunados = lucky_indices(perm, LuckyIndexQuery(K, M, N))
    if not afortunados:
        return LemmaCheck(False, None)
    confirmado = cyclic_contains(lemma2_target(perm.n, K, M, N), perm)
    return LemmaCheck(True, confirmado, afortunados[0])


def theorem_parameters(n: int) -> Dict[str, Tuple[int, ...]]:
    """
    Parámetros con que los teoremas usan los lemas para este n:
    'lemma1' = (K, M) y, para n impar, 'lemma2' = (K, M, N).
    """
    cid = construction_id(n)
    k = cid.k
    if cid.kind == "Thm1a":
        return {'lemma1': (k, k)}
    if cid.kind == "Thm1b":
        return {'lemma1': (k, k + 1)}
    if cid.kind == "Thm2a":
        return {'lemma1': (k, k), 'lemma2': (k, k, 3 * k)}
    return {'lemma1': (k + 1, k), 'lemma2': (k + 1, k, 3 * k + 2)}


def _todas(n: int) -> List[Permutation]:
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def lemma1_sweep(n: int) -> SweepResult:
    """Todas las permutaciones, todo K ∈ [1, x] y M ∈ [1, n]."""
    casos = disparos = confirmados = 0
    violaciones = []
    for perm in _todas(n):
        ld = decomposition_of(perm)
        for K in range(1, ld.x + 1):
            for M in range(1, n + 1):
                casos += 1
                if lemma1_predicate(ld, K, M) is None:
                    continue
                disparos += 1
                if cyclic_contains(lemma1_target(n, K, M), perm):
                    confirmados += 1
                else:
                    violaciones.append((perm.values, K, M))
    return SweepResult(n, casos, disparos, confirmados, tuple(violaciones))


def lemma2_sweep(n: int) -> SweepResult:
    """Todas las permutaciones, todo K ∈ [1, x], M ∈ [1, n] y N ∈ [1, n]."""
    casos = disparos = confirmados = 0
    violaciones = []
    for perm in _todas(n):
        ld = decomposition_of(perm)
        finales = [lucky_block_end(perm, i) for i in range(1, ld.x + 1)]
        for K in range(1, ld.x + 1):
            ventanas = [ld.window_sum(i, K) for i in range(1, ld.x + 1)]
            for M in range(1, n + 1):
                for N in range(1, n + 1):
                    casos += 1
                    if not any(v >= ld.y - M and f <= N for v, f in zip(ventanas, finales)):
                        continue
                    disparos += 1
                    if cyclic_contains(lemma2_target(n, K, M, N), perm):
                        confirmados += 1
                    else:
                        violaciones.append((perm.values, K, M, N))
    return SweepResult(n, casos, disparos, confirmados, tuple(violaciones))

# modelo/constructions.py
"""
Construcciones explícitas de rosarios y fórmulas de longitud.

Notación: (x_1, ..., x_m)_k es la yuxtaposición de k copias; k = 0
produce la secuencia vacía.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from modelo.catalogo import Catalogo
from modelo.errores import DomainError, UnknownCatalogKeyError
from modelo.seqcore import Cycle, Permutation


@dataclass(frozen=True)
class ConstructionId:
    """Naive, Thm1a(k), Thm1b(k), Thm2a(k), Thm2b(k) o Catalog(name)."""
    kind: str
    k: Optional[int] = None
    name: Optional[str] = None

    def __str__(self) -> str:
        if self.kind == "Catalog":
            return f"Catalog({self.name})"
        return self.kind if self.k is None else f"{self.kind}({self.k})"


@dataclass(frozen=True)
class BoundsRow:
    n: int
    naive_length: int
    theorem_length: Optional[int]
    catalog_length: Optional[int]
    conjecture_target: float
    odd_bound: Optional[float]
    corollary_ok: bool

    @property
    def best_length(self) -> int:
        return min(v for v in (self.naive_length, self.theorem_length, self.catalog_length) if v is not None)


def repetir(seq: Sequence[int], k: int) -> List[int]:
    """(seq)_k."""
    if k < 0:
        raise DomainError(f"Número de repeticiones negativo: {k}")
    return list(seq) * k


def ascendente(a: int, b: int) -> List[int]:
    """(a, a+1, ..., b); vacío si b < a."""
    return list(range(a, b + 1))


def descendente(a: int, b: int) -> List[int]:
    """(a, a-1, ..., b); vacío si a < b."""
    return list(range(a, b - 1, -1))


# ─────────────────────────────────────────────────────────
# CONSTRUCCIONES
# ─────────────────────────────────────────────────────────

def naive_rosary(n: int) -> Cycle:
    """1 (2, ..., n)_{n-2} 2, de longitud n² - 3n + 4."""
    if n < 2:
        raise DomainError(f"El rosario ingenuo requiere n ≥ 2 (recibido {n})")
    if n == 2:
        return Cycle((1, 2), 2)
    return Cycle(tuple([1] + repetir(ascendente(2, n), n - 2) + [2]), n)


def construction_id(n: int) -> ConstructionId:
    """Caso del teorema que cubre n (n par ≥ 4 o impar ≥ 5)."""
    if n >= 4 and n % 4 == 0:
        return ConstructionId("Thm1a", n // 4)
    if n >= 6 and n % 4 == 2:
        return ConstructionId("Thm1b", (n - 2) // 4)
    if n >= 5 and n % 4 == 1:
        return ConstructionId("Thm2a", (n - 1) // 4)
    if n >= 7 and n % 4 == 3:
        return ConstructionId("Thm2b", (n - 3) // 4)
    raise DomainError(f"Ningún teorema cubre n={n} (pares requieren n ≥ 4, impares n ≥ 5)")


def theorem1_rosary(n: int) -> Cycle:
    """
    n = 4k:   (1, ..., n)_k     (1, n, n-1, ..., 2)_k
    n = 4k+2: (1, ..., n)_{k+1} (1, n, n-1, ..., 2)_k
    Longitud n²/2 en ambos casos.
    """
    if n % 2 != 0:
        raise DomainError(f"El teorema de n par requiere n par (recibido n={n}, impar)")
    if n < 4:
        raise DomainError(f"El teorema de n par requiere n ≥ 4 (recibido {n})")

    cid = construction_id(n)
    bajada = [1] + descendente(n, 2)
    if cid.kind == "Thm1a":
        valores = repetir(ascendente(1, n), cid.k) + repetir(bajada, cid.k)
    else:
        valores = repetir(ascendente(1, n), cid.k + 1) + repetir(bajada, cid.k)
    return Cycle(tuple(valores), n)


def odd_template(n: int, k: int, middle: int, descents: int) -> Cycle:
    """(1, ..., n)_k (1, ..., middle) (n, ..., 2, 1)_descents (n, ..., 2)."""
    valores = (repetir(ascendente(1, n), k) + ascendente(1, middle)
               + repetir(descendente(n, 1), descents) + descendente(n, 2))
    return Cycle(tuple(valores), n)


def theorem2_rosary(n: int) -> Cycle:
    """
    n = 4k+1: (1, ..., n)_k (1, ..., 3k)   (n, ..., 1)_{k-1} (n, ..., 2)
    n = 4k+3: (1, ..., n)_k (1, ..., 3k+2) (n, ..., 1)_k     (n, ..., 2)
    """
    if n % 2 == 0:
        raise DomainError(f"El teorema de n impar requiere n impar (recibido n={n}, par)")
    if n < 5:
        raise DomainError(f"El teorema de n impar requiere n ≥ 5; n={n} se cubre con el rosario ingenuo o el catálogo")

    cid = construction_id(n)
    k = cid.k
    if cid.kind == "Thm2a":
        return odd_template(n, k, 3 * k, k - 1)
    return odd_template(n, k, 3 * k + 2, k)


def theorem_rosary(n: int) -> Cycle:
    """Despacha al teorema que corresponde a la paridad de n."""
    return theorem1_rosary(n) if n % 2 == 0 else theorem2_rosary(n)


def theorem_length(n: int) -> Optional[int]:
    """Longitud cerrada de la construcción del teorema, o None si no aplica."""
    try:
        cid = construction_id(n)
    except DomainError:
        return None
    k = cid.k
    if cid.kind in ("Thm1a", "Thm1b"):
        return n * n // 2
    if cid.kind == "Thm2a":
        return 8 * k * k + 5 * k - 1
    return 8 * k * k + 13 * k + 4


def theorem1_proof_string(n: int) -> Tuple[int, ...]:
    """
    Cadena donde cae toda permutación que empieza en 1 en el caso de
    igualdad: (1, n, ..., 2)_k (1, ..., n)_k para n=4k y
    (1, n, ..., 2)_k (1, ..., n)_{k+1} para n=4k+2.
    """
    cid = construction_id(n)
    if cid.kind not in ("Thm1a", "Thm1b"):
        raise DomainError(f"n={n} no es par ≥ 4")
    bajada = [1] + descendente(n, 2)
    subidas = cid.k if cid.kind == "Thm1a" else cid.k + 1
    return tuple(repetir(bajada, cid.k) + repetir(ascendente(1, n), subidas))


# ─────────────────────────────────────────────────────────
# CATÁLOGO
# ─────────────────────────────────────────────────────────

def catalog(name: str) -> Cycle:
    """Ciclo exacto del catálogo."""
    return Cycle.of(Catalogo().get(name))


def catalog_permutation(name: str) -> Permutation:
    """Permutación del catálogo (cx-*-perm, ex-*); se valida al cargar."""
    return Permutation.of(Catalogo().get(name))


_CONTRAEJEMPLOS = {
    # caso: (n, k, bloque intermedio, repeticiones descendentes)
    "n21": (21, 5, 12, 4),
    "n33": (33, 8, 17, 7),
}


def counterexample_instance(case: str) -> Tuple[Permutation, Cycle]:
    """Permutación y ciclo de los casos n21 / n33."""
    clave = case[3:] if case.startswith("cx-") else case
    if clave not in _CONTRAEJEMPLOS:
        raise UnknownCatalogKeyError(f"Caso desconocido: {case} (opciones: n21, n33)")

    n, k, medio, bajadas = _CONTRAEJEMPLOS[clave]
    ciclo = odd_template(n, k, medio, bajadas)
    if catalog(f"cx-{clave}").values != ciclo.values:
        raise DomainError(f"El catálogo cx-{clave} no coincide con su plantilla")

    permutacion = catalog_permutation(f"cx-{clave}-perm")
    if permutacion.n != n:
        raise DomainError(f"La permutación cx-{clave}-perm no es de grado {n}")
    return permutacion, ciclo


# ─────────────────────────────────────────────────────────
# COTAS
# ─────────────────────────────────────────────────────────

def catalog_lengths() -> dict:
    """Longitud mínima de rosario del catálogo por grado."""
    mejores = {}
    cat = Catalogo()
    for clave in cat.claves_rosario():
        c = catalog(clave)
        mejores[c.n] = min(mejores.get(c.n, len(c)), len(c))
    return mejores


def bounds_table(n_max: int) -> List[BoundsRow]:
    """Una fila por n en [2, n_max]."""
    if n_max < 2:
        raise DomainError(f"n_max debe ser ≥ 2 (recibido {n_max})")

    por_catalogo = catalog_lengths()
    filas = []
    for n in range(2, n_max + 1):
        ingenuo = 2 if n == 2 else n * n - 3 * n + 4
        teorema = theorem_length(n)
        objetivo = n * n / 2
        cota_impar = n * n / 2 + n / 4 - 1 if n % 2 else None
        mejor = min(v for v in (ingenuo, teorema, por_catalogo.get(n)) if v is not None)

        ok = mejor < n * n / 2 + n / 4
        if cota_impar is not None and teorema is not None:
            ok = ok and teorema < cota_impar

        filas.append(BoundsRow(
            n=n,
            naive_length=ingenuo,
            theorem_length=teorema,
            catalog_length=por_catalogo.get(n),
            conjecture_target=objetivo,
            odd_bound=cota_impar,
            corollary_ok=ok,
        ))
    return filas

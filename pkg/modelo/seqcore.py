# modelo/seqcore.py
"""
Tipos base: ciclos, permutaciones, códigos de ascenso/descenso,
descomposición λ y bloques monótonos maximales.

Todos los índices públicos son 1-based, como en la notación usual
de rosarios. Los valores son inmutables y seguros entre hilos.
"""

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple, Union

from modelo.errores import (
    AlphabetError,
    DegenerateInputError,
    DomainError,
    NoAscentError,
    NotAPermutationError,
)


# ─────────────────────────────────────────────────────────
# TIPOS
# ─────────────────────────────────────────────────────────

@dataclass(frozen=True)
class Cycle:
    """
    Secuencia cíclica sobre {1..n}.

    La igualdad de dataclass es posicional; para igualdad como ciclo
    usar `rotation_equal`.
    """
    values: Tuple[int, ...]
    n: int

    def __post_init__(self):
        if len(self.values) < 1:
            raise DegenerateInputError("Un ciclo necesita al menos un elemento")
        if self.n < 1:
            raise DomainError(f"Grado inválido: {self.n}")
        fuera = [v for v in self.values if not 1 <= v <= self.n]
        if fuera:
            raise AlphabetError(f"Valores fuera de [1, {self.n}]: {sorted(set(fuera))}")

    @classmethod
    def of(cls, values: Iterable[int], n: Optional[int] = None) -> "Cycle":
        """Construye un ciclo; n por defecto es el máximo valor."""
        vals = tuple(int(v) for v in values)
        if not vals:
            raise DegenerateInputError("Un ciclo necesita al menos un elemento")
        return cls(vals, n if n is not None else max(vals))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def at(self, i: int) -> int:
        """Valor en el índice cíclico i (1-based)."""
        return self.values[(i - 1) % len(self.values)]

    def linearization(self, j: int) -> Tuple[int, ...]:
        """Lectura de una vuelta empezando en j: c_j, ..., c_{j+r-1}."""
        r = len(self.values)
        k = (j - 1) % r
        return self.values[k:] + self.values[:k]

    def covers_alphabet(self) -> bool:
        """True si cada valor de {1..n} aparece al menos una vez."""
        return set(self.values) == set(range(1, self.n + 1))

    def missing_values(self) -> Tuple[int, ...]:
        return tuple(v for v in range(1, self.n + 1) if v not in set(self.values))


@dataclass(frozen=True)
class Permutation:
    """Ordenación de {1..n} tratada como cadena (o como ciclo)."""
    values: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.values) != list(range(1, len(self.values) + 1)):
            raise NotAPermutationError(f"No es una permutación de 1..{len(self.values)}: {self.values}")

    @classmethod
    def of(cls, values: Iterable[int]) -> "Permutation":
        return cls(tuple(int(v) for v in values))

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def as_cycle(self) -> Cycle:
        return Cycle(self.values, len(self.values))


@dataclass(frozen=True)
class Code:
    """Bits de ascenso (1) / descenso (0); cíclico o de cadena."""
    bits: Tuple[int, ...]
    cyclic: bool

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self):
        return iter(self.bits)

    @property
    def ones(self) -> int:
        return sum(self.bits)

    @property
    def zeros(self) -> int:
        return len(self.bits) - sum(self.bits)


@dataclass(frozen=True)
class LambdaDecomposition:
    """
    Estadísticas del código cíclico: x unos, y ceros y el vector λ.

    λ_i cuenta los ceros entre el i-ésimo 1 y el siguiente (cíclico);
    `anchor` es el índice (1-based) del 1 que abre λ_1.
    """
    x: int
    y: int
    lambdas: Tuple[int, ...]
    anchor: int

    def window_sum(self, i: int, K: int) -> int:
        """λ_{i+1} + ... + λ_{i+K}, índices cíclicos 1-based."""
        x = self.x
        return sum(self.lambdas[(i + t - 1) % x] for t in range(1, K + 1))

    def rebuild_code(self) -> Tuple[int, ...]:
        """1 (0)_{λ1} 1 (0)_{λ2} ... reubicado para que el primer 1 quede en `anchor`."""
        bits = []
        for lam in self.lambdas:
            bits.append(1)
            bits.extend([0] * lam)
        m = len(bits)
        shift = (self.anchor - 1) % m
        return tuple(bits[(i - shift) % m] for i in range(m))


@dataclass(frozen=True)
class Block:
    """Bloque de posiciones consecutivas (cíclicas) de un ciclo."""
    start: int
    length: int
    values: Tuple[int, ...]


@dataclass(frozen=True)
class BlockDecomposition:
    """
    Bloques maximales crecientes y decrecientes.

    Bloques adyacentes comparten su elemento frontera. Hay un bloque
    decreciente por cada 1 del código cíclico y uno creciente por cada 0;
    los elementos con descensos a ambos lados forman bloques crecientes
    de un solo elemento, y viceversa.
    """
    increasing: Tuple[Block, ...]
    decreasing: Tuple[Block, ...]


SequenceLike = Union[Cycle, Permutation, Sequence[int]]


def _valores(seq: SequenceLike) -> Tuple[int, ...]:
    if isinstance(seq, (Cycle, Permutation)):
        return seq.values
    return tuple(int(v) for v in seq)


def H(t: int) -> int:
    """Escalón de Heaviside con H(0) = 1."""
    return 1 if t >= 0 else 0


# ─────────────────────────────────────────────────────────
# CÓDIGOS
# ─────────────────────────────────────────────────────────

def code_of_cycle(c: SequenceLike) -> Code:
    """Código cíclico: H(a2-a1), ..., H(a1-an)."""
    vals = _valores(c)
    r = len(vals)
    if r < 2:
        raise DegenerateInputError(f"El código de un ciclo requiere longitud ≥ 2 (recibido {r})")
    return Code(tuple(H(vals[(i + 1) % r] - vals[i]) for i in range(r)), cyclic=True)


def code_of_string(s: SequenceLike) -> Code:
    """Código de cadena: longitud r-1, sin el bit de cierre."""
    vals = _valores(s)
    if len(vals) < 2:
        raise DegenerateInputError(f"El código de una cadena requiere longitud ≥ 2 (recibido {len(vals)})")
    return Code(tuple(H(b - a) for a, b in zip(vals, vals[1:])), cyclic=False)


def lambda_decomposition(code: Union[Code, Sequence[int]]) -> LambdaDecomposition:
    """Vector λ anclado en el primer 1 del código tal como está almacenado."""
    bits = tuple(code.bits if isinstance(code, Code) else code)
    unos = [i for i, b in enumerate(bits) if b == 1]
    if not unos:
        raise NoAscentError("El código no contiene ningún 1")

    m = len(bits)
    lambdas = []
    for k, i in enumerate(unos):
        siguiente = unos[(k + 1) % len(unos)]
        distancia = (siguiente - i) % m or m
        lambdas.append(distancia - 1)

    return LambdaDecomposition(
        x=len(unos),
        y=m - len(unos),
        lambdas=tuple(lambdas),
        anchor=unos[0] + 1,
    )


# ─────────────────────────────────────────────────────────
# BLOQUES
# ─────────────────────────────────────────────────────────

def _bloques_desde_bit(vals: Tuple[int, ...], bits: Tuple[int, ...], abre: int) -> Tuple[Block, ...]:
    # Cada bit `abre` en t inicia un bloque en la posición t+1 que se
    # extiende mientras sigan los bits opuestos.
    r = len(vals)
    bloques = []
    for t in range(r):
        if bits[t] != abre:
            continue
        largo = 1
        while largo <= r and bits[(t + largo) % r] != abre:
            largo += 1
        inicio = (t + 1) % r
        valores = tuple(vals[(inicio + s) % r] for s in range(largo))
        bloques.append(Block(start=inicio + 1, length=largo, values=valores))
    return tuple(sorted(bloques, key=lambda b: b.start))


def maximal_blocks(c: SequenceLike) -> BlockDecomposition:
    """Bloques maximales de un ciclo (convención cíclica)."""
    vals = _valores(c)
    bits = code_of_cycle(vals).bits

    if all(bits):
        # Ciclo constante: un único bloque creciente
        return BlockDecomposition(
            increasing=(Block(1, len(vals), vals),),
            decreasing=(),
        )

    return BlockDecomposition(
        increasing=_bloques_desde_bit(vals, bits, 0),
        decreasing=_bloques_desde_bit(vals, bits, 1),
    )


def string_runs(s: SequenceLike) -> Tuple[int, int]:
    """(rachas de ascensos, rachas de descensos) del código de cadena."""
    bits = code_of_string(s).bits
    ascensos = descensos = 0
    previo = None
    for b in bits:
        if b != previo:
            if b:
                ascensos += 1
            else:
                descensos += 1
        previo = b
    return ascensos, descensos


def block_end(vals: SequenceLike, one_index: int, lam: int) -> int:
    """
    Último elemento del bloque decreciente abierto por el 1 en `one_index`.

    La parte 1 (0)_λ codifica a_t < a_{t+1} > ... > a_{t+λ+1}; se devuelve
    a_{t+λ+1}. `one_index` es 1-based sobre el código.
    """
    v = _valores(vals)
    return v[(one_index + lam) % len(v)]


# ─────────────────────────────────────────────────────────
# SIMETRÍAS
# ─────────────────────────────────────────────────────────

def rotate(c: Cycle, j: int) -> Cycle:
    """Ciclo que empieza en la posición j (1-based)."""
    if not 1 <= j <= len(c):
        raise DomainError(f"Índice de rotación fuera de rango: {j} (longitud {len(c)})")
    return Cycle(c.linearization(j), c.n)


def relabel(c: Cycle, sigma: Union[Permutation, Sequence[int]]) -> Cycle:
    """Aplica σ punto a punto: v → σ(v)."""
    s = sigma if isinstance(sigma, Permutation) else Permutation.of(sigma)
    if s.n != c.n:
        raise DomainError(f"σ tiene grado {s.n}, el ciclo tiene grado {c.n}")
    return Cycle(tuple(s.values[v - 1] for v in c.values), c.n)


def reverse(c: Cycle) -> Cycle:
    return Cycle(tuple(reversed(c.values)), c.n)


def rotation_equal(a: Cycle, b: Cycle) -> bool:
    """Igualdad como ciclos: b es una rotación de a."""
    if len(a) != len(b):
        return False
    doble = a.values + a.values
    r = len(b)
    return any(doble[k:k + r] == b.values for k in range(len(a)))

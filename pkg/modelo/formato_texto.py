# modelo/formato_texto.py
"""
Formato de texto compartido para ciclos y permutaciones.

Una secuencia por línea, enteros decimales separados por comas,
comentarios con `#` y líneas en blanco permitidas. El comentario al
final de una línea se conserva (el catálogo lo usa como clave).
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from modelo.errores import FormatError


@dataclass(frozen=True)
class Entrada:
    """Una secuencia leída, con su comentario final y su número de línea."""
    valores: Tuple[int, ...]
    comentario: str
    linea: int


def parse_secuencia(texto: str, linea: int = 0) -> Tuple[int, ...]:
    """Convierte "1,2,3" (espacios opcionales) en una tupla de enteros."""
    partes = [p.strip() for p in texto.split(',')]
    if not partes or any(p == '' for p in partes):
        raise FormatError(f"secuencia vacía o coma sobrante: {texto!r}", linea)
    try:
        return tuple(int(p) for p in partes)
    except ValueError as e:
        raise FormatError(f"entero inválido en {texto!r}", linea) from e


def leer_entradas(texto: str) -> List[Entrada]:
    """Lee todas las secuencias de un texto en el formato compartido."""
    entradas = []
    for numero, cruda in enumerate(texto.splitlines(), start=1):
        cuerpo, _, comentario = cruda.partition('#')
        cuerpo = cuerpo.strip()
        if not cuerpo:
            continue
        entradas.append(Entrada(parse_secuencia(cuerpo, numero), comentario.strip(), numero))
    return entradas


def leer_archivo(ruta: str) -> List[Entrada]:
    try:
        with open(ruta, 'r', encoding='utf-8') as f:
            return leer_entradas(f.read())
    except OSError as e:
        raise FormatError(f"no se pudo leer {ruta}: {e}") from e


def formatear(valores: Iterable[int], comentario: Optional[str] = None) -> str:
    """Una línea del formato compartido."""
    linea = ",".join(str(v) for v in valores)
    return f"{linea}  # {comentario}" if comentario else linea

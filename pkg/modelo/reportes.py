# modelo/reportes.py
"""
Reportes de la herramienta: sobre común {command, inputs, result,
version, elapsed_ms} y serialización a JSON, CSV y texto.
"""
import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence

from modelo.catalogo import Catalogo
from modelo.constructions import BoundsRow

VERSION = "1.0.0"


def version_completa() -> str:
    """Versión con la huella del catálogo, para detectar cambios de datos."""
    return f"{VERSION}+catalogo.{Catalogo().checksum()}"


@dataclass(frozen=True)
class Report:
    """Sobre de todos los comandos; el esquema de `result` es fijo por comando."""
    command: str
    inputs: Dict[str, Any]
    result: Dict[str, Any]
    elapsed_ms: float = 0.0
    version: str = field(default_factory=version_completa)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'command': self.command,
            'inputs': self.inputs,
            'result': self.result,
            'version': self.version,
            'elapsed_ms': round(self.elapsed_ms, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)

    @classmethod
    def from_json(cls, texto: str) -> "Report":
        datos = json.loads(texto)
        return cls(
            command=datos['command'],
            inputs=datos['inputs'],
            result=datos['result'],
            elapsed_ms=datos.get('elapsed_ms', 0.0),
            version=datos['version'],
        )


# ─────────────────────────────────────────────────────────
# TABLA DE COTAS
# ─────────────────────────────────────────────────────────

COLUMNAS_COTAS = ['n', 'naive', 'theorem', 'catalog', 'best', 'n2_over_2', 'odd_bound', 'corollary_ok']


def _celda(valor: Any) -> str:
    if valor is None:
        return "-"
    if isinstance(valor, bool):
        return "si" if valor else "no"
    if isinstance(valor, float):
        return f"{valor:g}"
    return str(valor)


def fila_cotas(fila: BoundsRow) -> Dict[str, Any]:
    return {
        'n': fila.n,
        'naive': fila.naive_length,
        'theorem': fila.theorem_length,
        'catalog': fila.catalog_length,
        'best': fila.best_length,
        'n2_over_2': fila.conjecture_target,
        'odd_bound': fila.odd_bound,
        'corollary_ok': fila.corollary_ok,
    }


def cotas_a_json(filas: Sequence[BoundsRow]) -> List[Dict[str, Any]]:
    return [fila_cotas(f) for f in filas]


def cotas_a_csv(filas: Sequence[BoundsRow]) -> str:
    salida = io.StringIO()
    escritor = csv.DictWriter(salida, fieldnames=COLUMNAS_COTAS, lineterminator="\n")
    escritor.writeheader()
    for f in filas:
        escritor.writerow({k: ("" if v is None else v) for k, v in fila_cotas(f).items()})
    return salida.getvalue()


def cotas_a_texto(filas: Sequence[BoundsRow]) -> str:
    """Tabla alineada por columnas, encabezado incluido."""
    datos = [COLUMNAS_COTAS] + [[_celda(v) for v in fila_cotas(f).values()] for f in filas]
    anchos = [max(len(fila[i]) for fila in datos) for i in range(len(COLUMNAS_COTAS))]
    lineas = ["  ".join(celda.rjust(ancho) for celda, ancho in zip(fila, anchos)) for fila in datos]
    return "\n".join(lineas) + "\n"

# modelo/catalogo.py
"""
Catálogo de rosarios esporádicos, contraejemplos y ejemplos trabajados.

Se carga una sola vez desde data/catalogo.txt (formato compartido; el
comentario final de cada línea es la clave).
"""

import hashlib
import os
from typing import Dict, List, Tuple

from modelo.errores import FormatError, UnknownCatalogKeyError
from modelo.formato_texto import leer_entradas

CATALOGO_PATH = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data", "catalogo.txt")

# Prefijos de claves que son rosarios (y no permutaciones o ciclos de prueba)
PREFIJOS_ROSARIO = ("fig1-", "fig2-", "list-", "n8-")


class Catalogo:
    """
    Catálogo en memoria.

    Las claves son estables: fig1-n2..fig1-n5, fig2-n6, list-n6-01..10,
    n8-31, cx-n21, cx-n33 (más cx-*-perm y ex-* para permutaciones).
    """

    _instance = None

    def __new__(cls):
        """Singleton."""
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        if hasattr(self, '_initialized'):
            return

        self._initialized = True
        self.path = CATALOGO_PATH
        with open(self.path, 'r', encoding='utf-8') as f:
            self._texto = f.read()
        self._entradas: Dict[str, Tuple[int, ...]] = {}
        for entrada in leer_entradas(self._texto):
            if not entrada.comentario:
                raise FormatError("entrada de catálogo sin clave", entrada.linea)
            if entrada.comentario in self._entradas:
                raise FormatError(f"clave duplicada: {entrada.comentario}", entrada.linea)
            self._entradas[entrada.comentario] = entrada.valores

    def get(self, clave: str) -> Tuple[int, ...]:
        if clave not in self._entradas:
            raise UnknownCatalogKeyError(
                f"Clave desconocida: {clave} (disponibles: {', '.join(self.claves())})"
            )
        return self._entradas[clave]

    def claves(self) -> List[str]:
        return list(self._entradas)

    def claves_rosario(self) -> List[str]:
        return [k for k in self._entradas if k.startswith(PREFIJOS_ROSARIO)]

    def checksum(self) -> str:
        """Huella del archivo de datos (se incluye en --version)."""
        return hashlib.sha256(self._texto.encode('utf-8')).hexdigest()[:12]

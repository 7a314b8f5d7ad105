# modelo/configuracion.py
"""
Configuración de la herramienta.

Se lee una sola vez por proceso desde `rosary-config.json` (ruta
sobreescribible con ROSARY_CONFIG). Si el archivo no existe se usan
los valores por defecto. ROSARY_WORKERS fija el paralelismo por defecto.
"""

import json
import os
import sys
from dataclasses import dataclass, replace
from typing import Any, Dict, Optional

from modelo.errores import ConfigError

CONFIG_PATH = "rosary-config.json"
ENV_CONFIG = "ROSARY_CONFIG"
ENV_WORKERS = "ROSARY_WORKERS"

ENGINES = ("naive", "nexttable")


@dataclass(frozen=True)
class Ajustes:
    """Valores efectivos de configuración."""
    max_n: int = 10
    witness_cap: int = 16
    workers: int = 1
    engine: str = "nexttable"
    sample_size: int = 64
    seed: int = 2024
    exact_max_n: int = 4


def _validar(datos: Dict[str, Any]) -> Ajustes:
    base = Ajustes()
    campos = {}
    for clave, valor in datos.items():
        if not hasattr(base, clave):
            raise ConfigError(f"Clave de configuración desconocida: {clave}")
        if clave == "engine":
            if valor not in ENGINES:
                raise ConfigError(f"Motor desconocido: {valor} (opciones: {', '.join(ENGINES)})")
        elif clave == "seed":
            if not isinstance(valor, int):
                raise ConfigError("seed debe ser entero")
        elif not isinstance(valor, int) or isinstance(valor, bool) or valor < 1:
            raise ConfigError(f"{clave} debe ser un entero positivo (recibido: {valor!r})")
        campos[clave] = valor
    return replace(base, **campos)


class Configuracion:
    """
    Singleton con los ajustes del proceso.

    Orden de precedencia: valores por defecto < archivo JSON < variables
    de entorno.
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
        self.ajustes = self._cargar()

    def _cargar(self) -> Ajustes:
        ruta = os.environ.get(ENV_CONFIG, CONFIG_PATH)
        datos: Dict[str, Any] = {}

        if os.path.exists(ruta):
            try:
                with open(ruta, 'r', encoding='utf-8') as f:
                    datos = json.load(f)
            except json.JSONDecodeError as e:
                raise ConfigError(f"{ruta} no es JSON válido: {e}") from e
            if not isinstance(datos, dict):
                raise ConfigError(f"{ruta} debe contener un objeto JSON")
        elif ENV_CONFIG in os.environ:
            # Solo avisamos si el usuario pidió un archivo explícito
            print(f"⚠ No se encontró {ruta}, usando configuración por defecto", file=sys.stderr)

        workers = os.environ.get(ENV_WORKERS)
        if workers:
            try:
                datos['workers'] = int(workers)
            except ValueError as e:
                raise ConfigError(f"{ENV_WORKERS} debe ser entero (recibido: {workers!r})") from e

        return _validar(datos)

    @classmethod
    def reset(cls):
        """Olvida la instancia (usado por las pruebas)."""
        cls._instance = None


def ajustes(override: Optional[Dict[str, Any]] = None) -> Ajustes:
    """Ajustes efectivos, con reemplazos opcionales ya validados."""
    base = Configuracion().ajustes
    if not override:
        return base
    limpio = {k: v for k, v in override.items() if v is not None}
    return replace(base, **{k: getattr(_validar(limpio), k) for k in limpio})

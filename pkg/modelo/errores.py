# modelo/errores.py
"""
Jerarquía de errores del modelo.

El modelo lanza; solo el controlador traduce a códigos de salida.
"""


class RosaryError(Exception):
    """Base de todos los errores del dominio."""
    pass


class DegenerateInputError(RosaryError):
    """Secuencia demasiado corta para la operación (p. ej. código de longitud < 2)."""
    pass


class DomainError(RosaryError):
    """Parámetros fuera del dominio de una construcción o predicado."""
    pass


class NoAscentError(RosaryError):
    """Código cíclico sin ningún 1 (no hay ascensos)."""
    pass


class AlphabetError(RosaryError):
    """Valores fuera de [1, n] o alfabeto que no cubre al patrón."""
    pass


class NotAPermutationError(RosaryError):
    """La secuencia no es una biyección sobre {1..n}."""
    pass


class CostLimitError(RosaryError):
    """La enumeración excede el límite configurado."""

    def __init__(self, mensaje: str, estimado: int = 0):
        super().__init__(mensaje)
        self.estimado = estimado


class UnknownCatalogKeyError(RosaryError):
    """Clave de catálogo desconocida."""
    pass


class FormatError(RosaryError):
    """Error de lectura del formato de texto compartido."""

    def __init__(self, mensaje: str, linea: int = 0):
        super().__init__(f"línea {linea}: {mensaje}" if linea else mensaje)
        self.linea = linea


class ConfigError(RosaryError):
    """Valor de configuración inválido."""
    pass

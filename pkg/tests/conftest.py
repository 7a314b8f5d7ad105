# tests/conftest.py
import os
import sys

import pytest

# Agregar path del proyecto
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from modelo.configuracion import Configuracion


@pytest.fixture(autouse=True)
def configuracion_limpia(monkeypatch):
    """Cada prueba parte de los valores por defecto."""
    monkeypatch.delenv("ROSARY_CONFIG", raising=False)
    monkeypatch.delenv("ROSARY_WORKERS", raising=False)
    Configuracion.reset()
    yield
    Configuracion.reset()

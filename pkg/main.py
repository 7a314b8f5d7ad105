# /main.py
import os
import sys

# Agrega el directorio del proyecto al path de Python
# (los paquetes son 'modelo', 'vista' y 'controlador')
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from controlador.cli_controller import main

if __name__ == "__main__":
    sys.exit(main())

"""Punto de entrada de la línea de comandos: ``python cli.py <subcomando> ...``."""

import sys

from app.cli import main

if __name__ == "__main__":
    sys.exit(main())

"""
Infraestructura de la aplicación.
Contiene los cargadores de archivos de entrada y los exportadores de resultados.
"""

# Re-exportar funciones principales para facilitar importaciones
from infrastructure.loaders import detect_load, load_config, load_presentation

__all__ = ["detect_load", "load_config", "load_presentation"]

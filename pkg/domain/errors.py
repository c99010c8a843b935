"""
Excepciones del dominio.

DomainError cubre parámetros fuera de rango en las operaciones matemáticas;
ConfigError cubre configuraciones de experimento y archivos de entrada inválidos.
Ambas heredan de ValueError, igual que los errores que ya lanzaba el pipeline.
"""


class DomainError(ValueError):
    """Parámetro fuera del dominio de una operación."""


class ConfigError(ValueError):
    """Configuración o archivo de entrada inválido."""

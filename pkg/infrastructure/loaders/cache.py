"""
Caché de objetos deterministas costosos (archivos leídos, conjuntos de
tuplas explícitos) para el explorador y la CLI.
"""

from functools import lru_cache
from pathlib import Path
from typing import Optional

from domain.experiments.config import ExperimentConfig
from domain.groups.models import RelatorSet

_CACHE_SIZE = 8


@lru_cache(maxsize=_CACHE_SIZE)
def cached_config(path: str, mtime: float) -> ExperimentConfig:
    from .config_loader import load_config
    return load_config(path)


@lru_cache(maxsize=_CACHE_SIZE)
def cached_presentation(path: str, mtime: float) -> RelatorSet:
    from .presentation import load_presentation
    return load_presentation(path)


def get_config(path: "str | Path") -> ExperimentConfig:
    """Configuración cacheada; la clave incluye la fecha de modificación del archivo."""
    path = Path(path)
    return cached_config(str(path.resolve()), _mtime(path))


def get_presentation(path: "str | Path") -> RelatorSet:
    path = Path(path)
    return cached_presentation(str(path.resolve()), _mtime(path))


def _mtime(path: Path) -> Optional[float]:
    return path.stat().st_mtime if path.exists() else None


def clear() -> None:
    cached_config.cache_clear()
    cached_presentation.cache_clear()

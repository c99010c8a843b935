"""
Carga y detección automática de archivos de entrada.
Detecta el tipo de archivo por su firma y usa el cargador correspondiente.
"""

import logging
from pathlib import Path
from typing import Union

from domain.errors import ConfigError
from domain.experiments.config import ExperimentConfig
from domain.groups.models import RelatorSet
from domain.multidim import TupleSet

from .cache import clear as clear_cache, get_config, get_presentation
from .config_loader import config_from_dict, load_config, read_json
from .presentation import load_presentation, parse_presentation
from .tuple_sets import load_tuple_set, tuple_set_from_description

log = logging.getLogger("infrastructure.loaders")

# Firmas para detectar el tipo de archivo JSON
_SIGNATURES: dict[str, set[str]] = {
    "config": {"kind"},
    "tuple_set": {"family"},
}


def detect_load(path: Union[str, Path]) -> Union[ExperimentConfig, RelatorSet, TupleSet]:
    """Carga una configuración, una presentación o un conjunto de tuplas según su contenido."""
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"No existe el archivo: {path}")
    head = path.read_text(encoding="utf-8").lstrip()
    if head.startswith("{"):
        keys = set(read_json(path).keys())
        if _SIGNATURES["config"].issubset(keys):
            return load_config(path)
        if _SIGNATURES["tuple_set"].issubset(keys):
            return load_tuple_set(path)
        raise ConfigError(f"Formato de archivo no reconocido. Claves encontradas: {keys}")
    first = next((ln for ln in head.splitlines() if ln.strip() and not ln.lstrip().startswith("#")), "")
    if first.startswith("rank"):
        return load_presentation(path)
    raise ConfigError(f"Formato de archivo no reconocido: {path}")


__all__ = [
    "detect_load", "load_config", "config_from_dict", "read_json", "load_presentation",
    "parse_presentation", "load_tuple_set", "tuple_set_from_description",
    "get_config", "get_presentation", "clear_cache",
]

"""
Carga de configuraciones de experimentos desde JSON.
"""

import json
import logging
from pathlib import Path
from typing import Any, Union

from pydantic import ValidationError

from domain.errors import ConfigError
from domain.experiments.config import ExperimentConfig

log = logging.getLogger("infrastructure.loaders")


def read_json(path: Union[str, Path]) -> Any:
    """Lee un JSON y traduce errores de E/S o de sintaxis a ConfigError."""
    path = Path(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except FileNotFoundError:
        raise ConfigError(f"No existe el archivo: {path}") from None
    except json.JSONDecodeError as e:
        raise ConfigError(f"JSON inválido en {path}: {e}") from None


def config_from_dict(data: dict[str, Any]) -> ExperimentConfig:
    """Valida un dict como ExperimentConfig; los errores de pydantic se informan como ConfigError."""
    try:
        return ExperimentConfig.model_validate(data)
    except ValidationError as e:
        raise ConfigError(f"Configuración inválida: {e}") from None


def load_config(path: Union[str, Path]) -> ExperimentConfig:
    data = read_json(path)
    if not isinstance(data, dict):
        raise ConfigError(f"Se esperaba un objeto JSON en {path}")
    cfg = config_from_dict(data)
    log.info("Configuración %s cargada desde %s (%s ensayos)", cfg.kind, path, cfg.trials)
    return cfg

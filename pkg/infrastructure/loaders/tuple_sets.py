"""
Descripciones JSON de conjuntos de tuplas:

    {"family": "full"}
    {"family": "star", "center": 0}
    {"family": "random", "alpha": 0.9}
    {"family": "explicit", "tuples": [[0, 1], [1, 2]]}

``n`` y ``k`` pueden venir en el archivo o como argumentos.
"""

import logging
from pathlib import Path
from typing import Any, Optional, Union

from domain.errors import ConfigError, DomainError
from domain.multidim import TupleSet, build_tuple_set
from domain.samplers import RandomSource

from .config_loader import read_json

log = logging.getLogger("infrastructure.loaders")

FAMILIES = {"full", "star", "random", "explicit"}


def tuple_set_from_description(
    description: dict[str, Any], n: Optional[int] = None, k: Optional[int] = None,
    seed: Optional[RandomSource] = None,
) -> TupleSet:
    family = description.get("family")
    if family not in FAMILIES:
        raise ConfigError(f"Familia de tuplas desconocida: {family!r}")
    n = n if n is not None else description.get("n")
    k = k if k is not None else description.get("k", 2)
    if n is None:
        raise ConfigError("Falta el tamaño de universo n para el conjunto de tuplas")
    try:
        return build_tuple_set(description, int(n), int(k), seed)
    except (DomainError, ValueError) as e:
        raise ConfigError(f"Conjunto de tuplas inválido: {e}") from None


def load_tuple_set(
    path: Union[str, Path], n: Optional[int] = None, k: Optional[int] = None,
    seed: Optional[RandomSource] = None,
) -> TupleSet:
    description = read_json(path)
    if not isinstance(description, dict):
        raise ConfigError(f"Se esperaba un objeto JSON en {path}")
    x = tuple_set_from_description(description, n, k, seed)
    log.info("Conjunto de tuplas %s con |X| = %s leído de %s", x.family, x.cardinality, path)
    return x

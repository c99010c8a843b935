"""
Archivos de presentación: primera línea ``rank m``, luego un relator por
línea (a..z generadores, A..Z inversos). Se ignoran líneas vacías y las que
empiezan con ``#``.
"""

import logging
from pathlib import Path
from typing import Union

from domain.errors import ConfigError, DomainError
from domain.groups.models import RelatorSet, Word
from domain.groups.words import cyclic_reduce

log = logging.getLogger("infrastructure.loaders")


def parse_presentation(text: str, source: str = "<texto>") -> RelatorSet:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ConfigError(f"Presentación vacía: {source}")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "rank" or not header[1].isdigit():
        raise ConfigError(f"La primera línea debe ser 'rank m' en {source}, se leyó {lines[0]!r}")
    m = int(header[1])
    relators: list[Word] = []
    seen: set[tuple[int, ...]] = set()
    for lineno, raw in enumerate(lines[1:], start=2):
        try:
            word = Word.parse(raw, m)
        except (DomainError, ValueError) as e:
            raise ConfigError(f"{source}, relator {lineno - 1}: {e}") from None
        reduced = cyclic_reduce(word)
        if reduced.letters != word.letters:
            log.warning("Relator %r no cíclicamente reducido; se usa %r", raw, str(reduced))
        if not reduced.letters:
            raise ConfigError(f"{source}: el relator {raw!r} se reduce a la palabra vacía")
        if reduced.letters in seen:
            raise ConfigError(f"{source}: relator repetido {str(reduced)!r}")
        seen.add(reduced.letters)
        relators.append(reduced)
    try:
        return RelatorSet(m=m, relators=tuple(relators))
    except ValueError as e:
        raise ConfigError(f"Presentación inválida en {source}: {e}") from None


def load_presentation(path: Union[str, Path]) -> RelatorSet:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise ConfigError(f"No existe el archivo: {path}") from None
    relators = parse_presentation(text, str(path))
    log.info("Presentación de rango %s con %s relatores leída de %s", relators.m, len(relators.relators), path)
    return relators

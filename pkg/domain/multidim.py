"""
Universos de k-tuplas E^{(k)}, conjuntos de tuplas fijos y la condición de
autointersección pequeña.

Familias de conjuntos de tuplas:
- ExplicitTupleSet: arreglo numpy (|X| ≤ EXPLICIT_TUPLE_LIMIT).
- FullTupleSet:     E^{(k)} completo, perfil en forma cerrada.
- StarTupleSet:     {c}×(E\\{c}), perfil en forma cerrada.
- random_tuple_set: subconjunto fijo uniforme de E^{(k)} de tamaño ⌊|E^{(k)}|^α⌋.

El perfil de autointersección clasifica pares (x, y) ∈ X² según cuántos
elementos comparten sus conjuntos de entradas; tuplas distintas que son
permutaciones entre sí caen en Y_k.
"""

from __future__ import annotations

import logging
import math
from abc import abstractmethod
from itertools import combinations
from typing import Any, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_serializer, field_validator, model_validator

from domain.errors import ConfigError, DomainError
from domain.models import SelfIntersectionProfile, SmallSelfIntersectionReport, SubsetSample
from domain.moments import falling_factorial
from domain.samplers import RandomSource, generator_for, uniform_indices
from domain.universe import floor_density_size
from settings import settings

log = logging.getLogger("multidim")


def tuple_universe_size(n: int, k: int) -> int:
    """|E^{(k)}| = n(n−1)…(n−k+1)."""
    if k < 1:
        raise DomainError(f"La aridad debe ser ≥ 1 (k={k})")
    return falling_factorial(n, k)


def induced_tuple_count(a: SubsetSample, k: int) -> int:
    """|A^{(k)}| = |a|(|a|−1)…(|a|−k+1)."""
    if k < 1:
        raise DomainError(f"La aridad debe ser ≥ 1 (k={k})")
    return falling_factorial(a.cardinality, k)


# ------------------------------------------------------------------
# Familias de conjuntos de tuplas
# ------------------------------------------------------------------

class TupleSet(BaseModel):
    """Conjunto fijo X ⊂ E^{(k)} sobre el universo {0..n−1}."""
    n: int = Field(..., ge=2, description="Tamaño del universo")
    k: int = Field(..., ge=1, description="Aridad de las tuplas")

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    family: str = "abstract"

    @property
    @abstractmethod
    def cardinality(self) -> int: ...

    @abstractmethod
    def count_within(self, mask: np.ndarray, size_a: int) -> int:
        """Número de tuplas con todas sus entradas marcadas en ``mask``."""

    @abstractmethod
    def profile(self) -> SelfIntersectionProfile: ...

    @abstractmethod
    def contains(self, t: tuple[int, ...]) -> bool: ...

    @abstractmethod
    def witnesses(self, mask: np.ndarray, limit: int) -> list[tuple[int, ...]]: ...

    @property
    def alpha(self) -> float:
        """Densidad finita de X en E^{(k)}."""
        size = self.cardinality
        if size == 0:
            return -math.inf
        return math.log(size) / math.log(tuple_universe_size(self.n, self.k))


class ExplicitTupleSet(TupleSet):
    """Tuplas guardadas como arreglo (|X|, k) de int64, sin filas repetidas."""
    tuples: Any = Field(..., description="Arreglo numpy (|X|, k) de sólo lectura")
    family: str = "explicit"

    @field_validator("tuples", mode="before")
    @classmethod
    def _as_array(cls, v: Any) -> np.ndarray:
        arr = np.array(v, dtype=np.int64)
        if arr.size == 0:
            arr = arr.reshape(0, -1) if arr.ndim == 2 else np.empty((0, 0), dtype=np.int64)
        arr.setflags(write=False)
        return arr

    @model_validator(mode="after")
    def _check_tuples(self) -> "ExplicitTupleSet":
        arr = self.tuples
        if arr.shape[0] == 0:
            object.__setattr__(self, "tuples", np.empty((0, self.k), dtype=np.int64))
            return self
        if arr.ndim != 2 or arr.shape[1] != self.k:
            raise ValueError(f"Se esperaban tuplas de aridad {self.k}")
        if arr.shape[0] > settings.EXPLICIT_TUPLE_LIMIT:
            raise ValueError(f"Demasiadas tuplas explícitas ({arr.shape[0]})")
        if arr.min() < 0 or arr.max() >= self.n:
            raise ValueError("Entradas fuera del universo")
        ordered = np.sort(arr, axis=1)
        if self.k > 1 and bool(np.any(np.diff(ordered, axis=1) == 0)):
            raise ValueError("Cada tupla debe tener entradas distintas")
        if np.unique(arr, axis=0).shape[0] != arr.shape[0]:
            raise ValueError("Tuplas repetidas")
        return self

    @field_serializer("tuples")
    def _dump_tuples(self, v: np.ndarray) -> list[list[int]]:
        return v.tolist()

    @property
    def cardinality(self) -> int:
        return int(self.tuples.shape[0])

    def count_within(self, mask: np.ndarray, size_a: int) -> int:
        if self.cardinality == 0:
            return 0
        return int(np.count_nonzero(mask[self.tuples].all(axis=1)))

    def witnesses(self, mask: np.ndarray, limit: int) -> list[tuple[int, ...]]:
        if self.cardinality == 0:
            return []
        rows = self.tuples[mask[self.tuples].all(axis=1)][:limit]
        return [tuple(int(x) for x in row) for row in rows]

    def contains(self, t: tuple[int, ...]) -> bool:
        if len(t) != self.k or self.cardinality == 0:
            return False
        return bool(np.any(np.all(self.tuples == np.asarray(t, dtype=np.int64), axis=1)))

    def profile(self) -> SelfIntersectionProfile:
        """
        Conteo por subconjuntos compartidos en lugar de recorrer X².

        N_j = Σ_S m_S² sobre los j-subconjuntos S de entradas, con m_S el
        número de tuplas que contienen S; N_j = Σ_i C(i,j)|Y_i| y se invierte
        |Y_i| = Σ_{j≥i} (−1)^{j−i} C(j,i) N_j, con N_0 = |X|².
        """
        size = self.cardinality
        k = self.k
        counts = [size * size]
        ordered = np.sort(self.tuples, axis=1)
        for j in range(1, k + 1):
            if size == 0:
                counts.append(0)
                continue
            keys = np.concatenate([ordered[:, list(cols)] for cols in combinations(range(k), j)])
            _, mult = np.unique(keys, axis=0, return_counts=True)
            counts.append(int(np.sum(mult.astype(np.int64) ** 2)))
        sizes = tuple(
            sum((-1) ** (j - i) * math.comb(j, i) * counts[j] for j in range(i, k + 1))
            for i in range(k + 1)
        )
        return SelfIntersectionProfile(k=k, sizes=sizes)


class FullTupleSet(TupleSet):
    """X = E^{(k)}."""
    family: str = "full"

    @property
    def cardinality(self) -> int:
        return tuple_universe_size(self.n, self.k)

    def count_within(self, mask: np.ndarray, size_a: int) -> int:
        return falling_factorial(size_a, self.k)

    def witnesses(self, mask: np.ndarray, limit: int) -> list[tuple[int, ...]]:
        members = np.flatnonzero(mask).tolist()
        out = []
        for combo in combinations(members, self.k):
            out.append(tuple(combo))
            if len(out) >= limit:
                break
        return out

    def contains(self, t: tuple[int, ...]) -> bool:
        return len(t) == self.k and len(set(t)) == self.k and all(0 <= x < self.n for x in t)

    def profile(self) -> SelfIntersectionProfile:
        # para x fijo, las y ∈ E^{(k)} con i elementos comunes: C(k,i)·C(n−k,k−i)·k!
        total = self.cardinality
        k, n = self.k, self.n
        sizes = tuple(
            total * math.comb(k, i) * math.comb(n - k, k - i) * math.factorial(k)
            for i in range(k + 1)
        )
        return SelfIntersectionProfile(k=k, sizes=sizes)


class StarTupleSet(TupleSet):
    """X = {c}×(E\\{c}) ⊂ E^{(2)}: todas las tuplas comparten la primera coordenada."""
    center: int = Field(0, ge=0, description="Elemento c fijo en la primera coordenada")
    family: str = "star"

    @model_validator(mode="after")
    def _check_star(self) -> "StarTupleSet":
        if self.k != 2:
            raise ValueError("La familia estrella sólo existe para k = 2")
        if self.center >= self.n:
            raise ValueError("El centro debe pertenecer al universo")
        return self

    @property
    def cardinality(self) -> int:
        return self.n - 1

    def count_within(self, mask: np.ndarray, size_a: int) -> int:
        return size_a - 1 if mask[self.center] else 0

    def witnesses(self, mask: np.ndarray, limit: int) -> list[tuple[int, ...]]:
        if not mask[self.center]:
            return []
        others = [int(x) for x in np.flatnonzero(mask) if x != self.center]
        return [(self.center, x) for x in others[:limit]]

    def contains(self, t: tuple[int, ...]) -> bool:
        return len(t) == 2 and t[0] == self.center and t[1] != self.center and 0 <= t[1] < self.n

    def profile(self) -> SelfIntersectionProfile:
        n = self.n
        return SelfIntersectionProfile(k=2, sizes=(0, (n - 1) * (n - 2), n - 1))


def decode_tuple_indices(indices: np.ndarray, n: int, k: int) -> np.ndarray:
    """
    Índice en [0, |E^{(k)}|) → k-tupla de entradas distintas.

    Dígitos en base mixta n, n−1, …; el dígito j elige el j-ésimo elemento
    no usado, corrigiendo contra las entradas previas en orden creciente.
    """
    digits = np.empty((indices.size, k), dtype=np.int64)
    rest = indices.astype(np.int64).copy()
    radices = [falling_factorial(n - j - 1, k - j - 1) for j in range(k)]
    for j in range(k):
        digits[:, j], rest = np.divmod(rest, radices[j])
    out = np.empty_like(digits)
    for j in range(k):
        value = digits[:, j].copy()
        if j:
            previous = np.sort(out[:, :j], axis=1)
            for col in range(j):
                value += value >= previous[:, col]
        out[:, j] = value
    return out


def random_tuple_set(n: int, k: int, alpha: float, seed: RandomSource) -> ExplicitTupleSet:
    """Subconjunto fijo uniforme de E^{(k)} de tamaño ⌊|E^{(k)}|^α⌋."""
    if not 0 <= alpha <= 1:
        raise DomainError(f"α fuera de [0,1] (α={alpha})")
    total = tuple_universe_size(n, k)
    size = floor_density_size(total, alpha)
    if size > settings.EXPLICIT_TUPLE_LIMIT:
        raise DomainError(f"|X| = {size} supera el límite explícito {settings.EXPLICIT_TUPLE_LIMIT}")
    indices = uniform_indices(generator_for(seed), total, size)
    log.debug("Conjunto de tuplas aleatorio: n=%s k=%s |X|=%s", n, k, size)
    return ExplicitTupleSet(n=n, k=k, tuples=decode_tuple_indices(indices, n, k))


# ------------------------------------------------------------------
# Operaciones
# ------------------------------------------------------------------

def self_intersection_profile(x: TupleSet) -> SelfIntersectionProfile:
    return x.profile()


def small_self_intersection_check(
    profile: SelfIntersectionProfile, size_x: int, n: int, k: int, d: float,
) -> SmallSelfIntersectionReport:
    """
    Márgenes α + (d−1)·i/(2k) − dens Y_i para i = 1..k−1, medidos a n fijo.

    α se mide en base |E^{(k)}| y dens Y_i en base |E^{(k)}|²; un Y_i vacío
    tiene densidad −∞ y margen +∞. La condición vale si ε₀ = min > 0.
    """
    if not 0 < d < 1:
        raise DomainError(f"Se requiere 0 < d < 1 (d={d})")
    if size_x < 1:
        raise DomainError("X debe ser no vacío")
    if profile.k != k:
        raise DomainError(f"El perfil es de aridad {profile.k}, no {k}")
    log_total = math.log(tuple_universe_size(n, k))
    alpha = math.log(size_x) / log_total
    margins = []
    for i in range(1, k):
        y = profile.sizes[i]
        if y == 0:
            margins.append(math.inf)
            continue
        dens_y = math.log(y) / (2 * log_total)
        margins.append(alpha + (d - 1) * i / (2 * k) - dens_y)
    epsilon0 = min(margins, default=math.inf)
    return SmallSelfIntersectionReport(
        d=d, alpha=alpha, per_i_margin=tuple(margins), epsilon0=epsilon0, holds=epsilon0 > 0,
    )


def intersect_tuples(
    a: SubsetSample, x: TupleSet, witnesses: bool = False, limit: int = 10,
) -> "int | tuple[int, list[tuple[int, ...]]]":
    """|A^{(k)} ∩ X|: tuplas de X con todas sus entradas en a."""
    if a.universe != x.n:
        raise DomainError(f"Universos distintos: {a.universe} ≠ {x.n}")
    mask = a.mask()
    count = x.count_within(mask, a.cardinality)
    if witnesses:
        return count, x.witnesses(mask, limit)
    return count


def build_tuple_set(description: dict, n: int, k: int, seed: Optional[RandomSource] = None) -> TupleSet:
    """Construye una familia a partir de su descripción {"family": ...}; una descripción inválida es ConfigError."""
    try:
        return _build_family(description, n, k, seed)
    except ValidationError as e:
        raise ConfigError(f"Conjunto de tuplas inválido (n={n}, k={k}): {e}") from None


def _build_family(description: dict, n: int, k: int, seed: Optional[RandomSource]) -> TupleSet:
    family = description.get("family")
    if family == "full":
        return FullTupleSet(n=n, k=k)
    if family == "star":
        return StarTupleSet(n=n, k=k, center=int(description.get("center", 0)))
    if family == "explicit":
        return ExplicitTupleSet(n=n, k=k, tuples=description.get("tuples", []))
    if family == "random":
        if seed is None:
            raise DomainError("La familia aleatoria requiere una semilla")
        return random_tuple_set(n, k, float(description["alpha"]), seed)
    raise DomainError(f"Familia de tuplas desconocida: {family!r}")

"""
Modelos canónicos de subconjuntos aleatorios con densidad.

Todas las clases son inmutables (``frozen``) y validan sus invariantes al
instanciarse, de modo que cualquier inconsistencia se detecta en el borde.

NIVELES:
UniverseSize → SubsetSample        (realizaciones)
CardinalityLaw + SeedSpec          (modelos invariantes por permutación)
MomentPair / ExactMomentPair       (oráculos deterministas)
SelfIntersectionProfile → SmallSelfIntersectionReport  (tuplas)
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Any, Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator, model_validator

from domain.errors import DomainError

DENSITY_SLACK = 1e-12
WEIGHT_SLACK = 1e-9
UINT64_LIMIT = 2**64


# ------------------------------------------------------------------
# 1.  Universo y densidad
# ------------------------------------------------------------------

class UniverseSize(BaseModel):
    """Cardinal de E_n = {0..n−1}; la base del logaritmo debe superar 1."""
    n: int = Field(..., ge=2, description="Número de elementos del universo")

    model_config = ConfigDict(frozen=True)

    def __int__(self) -> int:
        return self.n


def universe_size(n: "int | UniverseSize") -> int:
    """Normaliza un tamaño de universo y verifica n ≥ 2."""
    value = n.n if isinstance(n, UniverseSize) else int(n)
    if value < 2:
        raise DomainError(f"El universo debe tener al menos 2 elementos (n={value})")
    return value


class Density(BaseModel):
    """Densidad extendida: −∞ como variante explícita o un real en [0,1]."""
    neg_infinity: bool = Field(False, description="True si el subconjunto medido es vacío")
    value: float = Field(0.0, description="Valor real en [0,1]; ignorado si neg_infinity")

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_range(self) -> "Density":
        if self.neg_infinity:
            if self.value != 0.0:
                raise ValueError("Una densidad −∞ no lleva valor real")
            return self
        if not (-DENSITY_SLACK <= self.value <= 1 + DENSITY_SLACK):
            raise ValueError(f"Densidad fuera de [0,1]: {self.value}")
        clamped = min(1.0, max(0.0, self.value))
        if clamped != self.value:
            object.__setattr__(self, "value", clamped)
        return self

    @classmethod
    def of(cls, value: float) -> "Density":
        if value == -math.inf:
            return cls.neg_inf()
        try:
            return cls(value=value)
        except ValueError as exc:
            raise DomainError(str(exc)) from exc

    @classmethod
    def neg_inf(cls) -> "Density":
        return cls(neg_infinity=True)

    def __float__(self) -> float:
        return -math.inf if self.neg_infinity else self.value

    def isclose(self, other: "Density | float", tol: float) -> bool:
        """Compara con tolerancia explícita; −∞ sólo es igual a −∞."""
        other_value = float(other)
        if self.neg_infinity or other_value == -math.inf:
            return self.neg_infinity and other_value == -math.inf
        return abs(self.value - other_value) <= tol

    def __str__(self) -> str:
        return "-inf" if self.neg_infinity else f"{self.value:.6f}"


def as_density(d: "Density | float") -> Density:
    return d if isinstance(d, Density) else Density.of(float(d))


class SubsetSample(BaseModel):
    """Subconjunto realizado de {0..n−1}, con ids únicos y ordenados."""
    universe: int = Field(..., ge=2, description="n = |E_n|")
    members: Any = Field(..., description="ids estrictamente crecientes en [0, n) (numpy int64, sólo lectura)")

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @field_validator("members", mode="before")
    @classmethod
    def _as_array(cls, v: Any) -> np.ndarray:
        arr = np.array(v, dtype=np.int64).reshape(-1)
        arr.setflags(write=False)
        return arr

    @model_validator(mode="after")
    def _check_members(self) -> "SubsetSample":
        arr = self.members
        if arr.size:
            if arr[0] < 0 or arr[-1] >= self.universe:
                raise ValueError("Elementos fuera del universo")
            if arr.size > 1 and not bool(np.all(np.diff(arr) > 0)):
                raise ValueError("Los elementos deben ser únicos y estar ordenados")
        return self

    @classmethod
    def trusted(cls, universe: int, members: np.ndarray) -> "SubsetSample":
        """Construye sin validar; para arreglos ya ordenados y únicos producidos internamente."""
        arr = np.asarray(members, dtype=np.int64)
        arr.setflags(write=False)
        return cls.model_construct(universe=universe, members=arr)

    @field_serializer("members")
    def _dump_members(self, v: np.ndarray) -> list[int]:
        return v.tolist()

    @property
    def cardinality(self) -> int:
        return int(self.members.size)

    def __len__(self) -> int:
        return self.cardinality

    def __contains__(self, x: object) -> bool:
        if not isinstance(x, (int, np.integer)):
            return False
        i = int(np.searchsorted(self.members, x))
        return i < self.members.size and int(self.members[i]) == x

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubsetSample):
            return NotImplemented
        return self.universe == other.universe and np.array_equal(self.members, other.members)

    def __hash__(self) -> int:
        return hash((self.universe, self.members.tobytes()))

    def mask(self) -> np.ndarray:
        """Vector booleano de pertenencia de longitud n."""
        out = np.zeros(self.universe, dtype=bool)
        out[self.members] = True
        return out


# ------------------------------------------------------------------
# 2.  Leyes de cardinal y semillas
# ------------------------------------------------------------------

class CardinalityLaw(BaseModel):
    """Ley de |A| que, junto con la uniformidad condicional, define un modelo invariante."""
    variant: Literal["point_mass", "binomial", "explicit"]
    n: int = Field(..., ge=2, description="Tamaño del universo sobre el que se define la ley")
    k: Optional[int] = Field(None, description="Cardinal fijo (point_mass)")
    p: Optional[float] = Field(None, description="Probabilidad por elemento (binomial)")
    weights: Optional[tuple[float, ...]] = Field(None, description="Pesos sobre 0..n (explicit)")

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_variant(self) -> "CardinalityLaw":
        if self.variant == "point_mass":
            if self.k is None or not 0 <= self.k <= self.n:
                raise ValueError(f"PointMass requiere 0 ≤ k ≤ n (k={self.k}, n={self.n})")
        elif self.variant == "binomial":
            if self.p is None or not 0.0 <= self.p <= 1.0:
                raise ValueError(f"Binomial requiere p en [0,1] (p={self.p})")
        else:
            w = self.weights
            if w is None or len(w) != self.n + 1:
                raise ValueError("ExplicitVector requiere n+1 pesos sobre 0..n")
            if min(w) < 0:
                raise ValueError("Los pesos deben ser no negativos")
            if abs(math.fsum(w) - 1.0) > WEIGHT_SLACK:
                raise ValueError(f"Los pesos deben sumar 1 (suma={math.fsum(w)})")
        return self

    @classmethod
    def point_mass(cls, n: int, k: int) -> "CardinalityLaw":
        return cls(variant="point_mass", n=n, k=k)

    @classmethod
    def binomial(cls, n: int, p: float) -> "CardinalityLaw":
        return cls(variant="binomial", n=n, p=p)

    @classmethod
    def explicit(cls, weights: "list[float] | tuple[float, ...]") -> "CardinalityLaw":
        return cls(variant="explicit", n=len(weights) - 1, weights=tuple(float(w) for w in weights))

    @classmethod
    def mixture(cls, n: int, masses: dict[int, float]) -> "CardinalityLaw":
        """Vector explícito a partir de un dict {cardinal: peso}."""
        weights = [0.0] * (n + 1)
        for k, w in masses.items():
            if not 0 <= k <= n:
                raise DomainError(f"Cardinal {k} fuera de 0..{n}")
            weights[k] += w
        return cls(variant="explicit", n=n, weights=tuple(weights))

    def mean(self) -> float:
        if self.variant == "point_mass":
            return float(self.k)
        if self.variant == "binomial":
            return self.n * self.p
        return math.fsum(k * w for k, w in enumerate(self.weights))


class SeedSpec(BaseModel):
    """Par (semilla maestra, índice de flujo); el estado del generador es función pura de ambos."""
    master_seed: int = Field(..., ge=0, lt=UINT64_LIMIT)
    stream_index: int = Field(0, ge=0, lt=UINT64_LIMIT)

    model_config = ConfigDict(frozen=True)

    @classmethod
    def for_trial(cls, master_seed: int, cell_index: int, trial_index: int) -> "SeedSpec":
        """Subflujo por ensayo: (master_seed, cell_index·2³² + trial_index)."""
        return cls(master_seed=master_seed, stream_index=(cell_index << 32) + trial_index)

    def entropy_words(self) -> list[int]:
        """Cuatro palabras de 32 bits de ancho fijo; sin ambigüedad entre pares."""
        mask = 0xFFFFFFFF
        return [
            self.master_seed & mask, self.master_seed >> 32,
            self.stream_index & mask, self.stream_index >> 32,
        ]


# ------------------------------------------------------------------
# 3.  Momentos
# ------------------------------------------------------------------

class MomentPair(BaseModel):
    """Esperanza y varianza de un cardinal aleatorio."""
    mean: float
    variance: float = Field(..., description="Varianza (≥ 0)")

    model_config = ConfigDict(frozen=True)

    @field_validator("variance")
    @classmethod
    def _non_negative(cls, v: float) -> float:
        # redondeo de sumas con cancelación
        if -1e-9 * max(1.0, abs(v)) <= v < 0:
            return 0.0
        if v < 0:
            raise ValueError(f"Varianza negativa: {v}")
        return v


class ExactMomentPair(BaseModel):
    """Versión racional de MomentPair para el modo oráculo."""
    mean: Fraction
    variance: Fraction

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @field_validator("variance")
    @classmethod
    def _non_negative(cls, v: Fraction) -> Fraction:
        if v < 0:
            raise ValueError(f"Varianza negativa: {v}")
        return v

    @field_serializer("mean", "variance")
    def _dump_fraction(self, v: Fraction) -> str:
        return str(v)

    def to_float(self) -> MomentPair:
        return MomentPair(mean=float(self.mean), variance=float(self.variance))


# ------------------------------------------------------------------
# 4.  Autointersección de conjuntos de tuplas
# ------------------------------------------------------------------

class SelfIntersectionProfile(BaseModel):
    """Tamaños |Y_0|..|Y_k| de la partición de X² por elementos compartidos."""
    k: int = Field(..., ge=1, description="Aridad de las tuplas")
    sizes: tuple[int, ...] = Field(..., description="|Y_0|, …, |Y_k|")

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_sizes(self) -> "SelfIntersectionProfile":
        if len(self.sizes) != self.k + 1:
            raise ValueError(f"Se esperaban {self.k + 1} tamaños, hay {len(self.sizes)}")
        if min(self.sizes) < 0:
            raise ValueError("Los tamaños deben ser no negativos")
        return self

    @property
    def total(self) -> int:
        return sum(self.sizes)

    def check_consistent(self, size_x: int) -> None:
        """Σ|Y_i| = |X|² y |Y_k| ≥ |X| (igualdad si X no repite conjuntos)."""
        if self.total != size_x * size_x:
            raise DomainError(f"Perfil inconsistente: Σ|Y_i| = {self.total} ≠ |X|² = {size_x * size_x}")
        if self.sizes[-1] < size_x:
            raise DomainError(f"Perfil inconsistente: |Y_k| = {self.sizes[-1]} < |X| = {size_x}")


class SmallSelfIntersectionReport(BaseModel):
    """Márgenes α + (d−1)·i/(2k) − dens Y_i para i = 1..k−1 y su mínimo ε₀."""
    d: float
    alpha: float = Field(..., description="Densidad de X en E^(k)")
    per_i_margin: tuple[float, ...] = Field(..., description="Margen para i = 1..k−1 (+inf si Y_i = Ø)")
    epsilon0: float = Field(..., description="Mínimo de los márgenes; +inf si no hay clases")
    holds: bool

    model_config = ConfigDict(frozen=True, ser_json_inf_nan="constants")

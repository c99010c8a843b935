"""
Universos finitos, densidades, codensidades y operaciones de conjuntos.

Los elementos son siempre enteros canónicos 0..n−1; cualquier universo
etiquetado se traduce con una biyección al ingresar (la invariancia por
permutación hace irrelevantes las etiquetas).
"""

from __future__ import annotations

import math
from typing import Iterable, Optional

import numpy as np

from domain.errors import DomainError
from domain.models import Density, SubsetSample, UniverseSize, as_density, universe_size

CRITICAL_TOL = 1e-9
DENSITY_GUARD = 1e-12


def density_of(cardinality: int, universe: "int | UniverseSize") -> Density:
    """dens_E(A) = log_{|E|} |A|, con −∞ para el vacío."""
    n = universe_size(universe)
    if cardinality < 0 or cardinality > n:
        raise DomainError(f"Cardinal {cardinality} fuera de [0, {n}]")
    if cardinality == 0:
        return Density.neg_inf()
    return Density.of(math.log(cardinality) / math.log(n))


def codensity(d: "Density | float") -> Density:
    """codens A = 1 − dens A; indefinida para −∞."""
    d = as_density(d)
    if d.neg_infinity:
        raise DomainError("La codensidad de un conjunto vacío no está definida")
    return Density.of(1.0 - d.value)


def floor_density_size(n: int, d: float) -> int:
    """⌊n^d⌋ protegiendo potencias exactas (100^0.5 = 10) del redondeo hacia abajo."""
    if d == -math.inf:
        return 0
    raw = float(n) ** d
    k = math.floor(raw * (1 + DENSITY_GUARD))
    return max(0, min(k, n))


def _check_same_universe(a: SubsetSample, b: SubsetSample) -> None:
    if a.universe != b.universe:
        raise DomainError(f"Universos distintos: {a.universe} ≠ {b.universe}")


def intersect(a: SubsetSample, b: SubsetSample) -> SubsetSample:
    _check_same_universe(a, b)
    return SubsetSample.trusted(a.universe, np.intersect1d(a.members, b.members, assume_unique=True))


def union(a: SubsetSample, b: SubsetSample) -> SubsetSample:
    _check_same_universe(a, b)
    return SubsetSample.trusted(a.universe, np.union1d(a.members, b.members))


def complement(a: SubsetSample) -> SubsetSample:
    keep = np.ones(a.universe, dtype=bool)
    keep[a.members] = False
    return SubsetSample.trusted(a.universe, np.flatnonzero(keep))


def set_ops(a: SubsetSample, b: Optional[SubsetSample], op: str) -> SubsetSample:
    """Despacho por nombre: "intersect", "union" o "complement" (b se ignora)."""
    if op == "complement":
        return complement(a)
    if b is None:
        raise DomainError(f"La operación {op!r} requiere dos conjuntos")
    if op == "intersect":
        return intersect(a, b)
    if op == "union":
        return union(a, b)
    raise DomainError(f"Operación desconocida: {op!r}")


# ------------------------------------------------------------------
# Predicciones de la fórmula de intersección
# ------------------------------------------------------------------

def predict_intersection(densities: Iterable["Density | float"]) -> Optional[Density]:
    """
    Densidad predicha de la intersección de conjuntos independientes.

    Con s = Σ codens: 1 − s si s < 1, −∞ si s > 1 y None en la línea crítica.
    """
    dens = [as_density(d) for d in densities]
    if len(dens) < 2:
        raise DomainError("Se necesitan al menos dos densidades")
    if any(d.neg_infinity for d in dens):
        return Density.neg_inf()
    s = math.fsum(1.0 - d.value for d in dens)
    if abs(s - 1.0) <= CRITICAL_TOL:
        return None
    if s > 1.0:
        return Density.neg_inf()
    return Density.of(1.0 - s)


def predict_union(a: "Density | float", b: "Density | float") -> Density:
    """La unión de dos conjuntos densables tiene la mayor de las densidades."""
    a, b = as_density(a), as_density(b)
    return a if float(a) >= float(b) else b


def in_density_window(cardinality: int, n: int, d: "Density | float", epsilon: float) -> bool:
    """n^{d−ε} ≤ |A| ≤ n^{d+ε}; para d = −∞ exige |A| = 0."""
    d = as_density(d)
    if d.neg_infinity:
        return cardinality == 0
    if cardinality == 0:
        return False
    exponent = math.log(cardinality) / math.log(n)
    return d.value - epsilon <= exponent <= d.value + epsilon

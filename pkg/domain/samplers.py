"""
Muestreadores de subconjuntos aleatorios con semilla reproducible.

Generador: numpy ``PCG64`` inicializado con ``SeedSequence`` sobre las cuatro
palabras de 32 bits de (master_seed, stream_index). El estado inicial es una
función pura de la SeedSpec y el algoritmo es el mismo en todas las
plataformas que soporta numpy.

Algoritmos:
- Bernoulli: saltos geométricos entre éxitos cuando p < 0.1, máscara por
  bloques en otro caso; p = 1 devuelve el universo completo.
- Uniforme: selección de Floyd (k ≤ n/2) o Floyd sobre el complemento.
- Binomial: ``Generator.binomial`` (inversión si n·p < 30, BTPE si no).
"""

from __future__ import annotations

import logging
import math
from typing import Literal, Union

import numpy as np

from domain.errors import DomainError
from domain.models import CardinalityLaw, SeedSpec, SubsetSample, UniverseSize, universe_size
from domain.universe import floor_density_size

log = logging.getLogger("samplers")

RandomSource = Union[SeedSpec, np.random.Generator]
Model = Literal["uniform", "bernoulli", "mixture", "function_image"]

GEOMETRIC_MAX_P = 0.1
MASK_CHUNK = 1 << 22


def generator_for(seed: RandomSource) -> np.random.Generator:
    """Generator determinista para una SeedSpec (o el mismo Generator si ya lo es)."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed.entropy_words())))


# ------------------------------------------------------------------
# Núcleos sobre arreglos
# ------------------------------------------------------------------

def _floyd_indices(rng: np.random.Generator, n: int, k: int) -> np.ndarray:
    """k índices distintos de [0, n) con la selección de Floyd; salida ordenada."""
    if k == 0:
        return np.empty(0, dtype=np.int64)
    highs = np.arange(n - k + 1, n + 1, dtype=np.int64)
    draws = rng.integers(0, highs).tolist()
    chosen: set[int] = set()
    for j, t in zip(range(n - k, n), draws):
        chosen.add(j if t in chosen else t)
    return np.sort(np.fromiter(chosen, dtype=np.int64, count=k))


def uniform_indices(rng: np.random.Generator, n: int, k: int) -> np.ndarray:
    """k-subconjunto uniforme de [0, n) como arreglo ordenado."""
    if k < 0 or k > n:
        raise DomainError(f"Cardinal {k} fuera de [0, {n}]")
    if k == n:
        return np.arange(n, dtype=np.int64)
    if 2 * k <= n:
        return _floyd_indices(rng, n, k)
    dropped = _floyd_indices(rng, n, n - k)
    keep = np.ones(n, dtype=bool)
    keep[dropped] = False
    return np.flatnonzero(keep)


def _bernoulli_indices(rng: np.random.Generator, n: int, p: float) -> np.ndarray:
    if p >= 1.0:
        return np.arange(n, dtype=np.int64)
    if p <= 0.0:
        return np.empty(0, dtype=np.int64)
    if p < GEOMETRIC_MAX_P:
        # saltos geométricos: posiciones = sumas acumuladas de huecos ≥ 1
        parts = []
        position = -1
        batch = int(n * p + 6 * math.sqrt(n * p) + 16)
        while True:
            gaps = rng.geometric(p, size=batch)
            positions = position + np.cumsum(gaps)
            inside = positions[positions < n]
            parts.append(inside)
            if inside.size < positions.size:
                break
            position = int(positions[-1])
        return np.concatenate(parts).astype(np.int64)
    parts = []
    for start in range(0, n, MASK_CHUNK):
        size = min(MASK_CHUNK, n - start)
        parts.append(np.flatnonzero(rng.random(size) < p) + start)
    return np.concatenate(parts).astype(np.int64)


def _draw_cardinality(rng: np.random.Generator, law: CardinalityLaw) -> int:
    if law.variant == "point_mass":
        return law.k
    if law.variant == "binomial":
        return int(rng.binomial(law.n, law.p))
    cumulative = np.cumsum(law.weights)
    k = int(np.searchsorted(cumulative, rng.random() * cumulative[-1], side="right"))
    return min(k, law.n)


# ------------------------------------------------------------------
# Operaciones públicas
# ------------------------------------------------------------------

def sample_bernoulli(n: "int | UniverseSize", d: float, seed: RandomSource) -> SubsetSample:
    """Cada elemento entra con probabilidad p = n^{d−1}, independientemente."""
    n = universe_size(n)
    if d > 1:
        raise DomainError(f"La densidad Bernoulli debe ser ≤ 1 (d={d})")
    p = 1.0 if d == 1 else float(n) ** (d - 1)
    return SubsetSample.trusted(n, _bernoulli_indices(generator_for(seed), n, p))


def sample_uniform(n: "int | UniverseSize", k: int, seed: RandomSource) -> SubsetSample:
    """Distribución uniforme sobre los k-subconjuntos de E_n."""
    n = universe_size(n)
    return SubsetSample.trusted(n, uniform_indices(generator_for(seed), n, k))


def sample_perm_invariant(n: "int | UniverseSize", law: CardinalityLaw, seed: RandomSource) -> SubsetSample:
    """Descomposición en subconjuntos uniformes: K según la ley y luego un K-subconjunto uniforme."""
    n = universe_size(n)
    if law.n != n:
        raise DomainError(f"La ley está definida sobre n={law.n}, no sobre n={n}")
    rng = generator_for(seed)
    k = _draw_cardinality(rng, law)
    return SubsetSample.trusted(n, uniform_indices(rng, n, k))


def sample_function_image(domain_size: int, n: "int | UniverseSize", seed: RandomSource) -> SubsetSample:
    """Imagen de una función uniforme {1..m} → E_n."""
    n = universe_size(n)
    if domain_size < 1:
        raise DomainError(f"El dominio debe tener al menos un elemento (m={domain_size})")
    values = generator_for(seed).integers(0, n, size=domain_size)
    return SubsetSample.trusted(n, np.unique(values).astype(np.int64))


def law_for_model(model: Model, n: int, d: float) -> CardinalityLaw:
    """Ley de cardinal del modelo de densidad d sobre E_n."""
    if model == "uniform":
        return CardinalityLaw.point_mass(n, floor_density_size(n, d))
    if model == "bernoulli":
        return CardinalityLaw.binomial(n, 1.0 if d == 1 else float(n) ** (d - 1))
    if model == "mixture":
        high = floor_density_size(n, d)
        low = min(n, math.ceil(float(n) ** d / 2))
        return CardinalityLaw.mixture(n, {high: 0.5, low: 0.5})
    raise DomainError(f"El modelo {model!r} no se describe con una ley de cardinal")


def sample_model(model: Model, n: int, d: float, seed: RandomSource) -> SubsetSample:
    """Despacha al muestreador del modelo; function_image usa dominio ⌊n^d⌋."""
    if model == "uniform":
        return sample_uniform(n, floor_density_size(n, d), seed)
    if model == "bernoulli":
        return sample_bernoulli(n, d, seed)
    if model == "mixture":
        return sample_perm_invariant(n, law_for_model(model, n, d), seed)
    if model == "function_image":
        return sample_function_image(max(1, floor_density_size(n, d)), n, seed)
    raise DomainError(f"Modelo desconocido: {model!r}")

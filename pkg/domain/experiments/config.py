"""
Configuración y registros de los experimentos Monte Carlo.

NIVELES:
ExperimentConfig                  (entrada: JSON o flags de la CLI)
TrialRecord                       (conteos crudos por ensayo)
CellSummary → SweepSummary        (proporción empírica + Wilson 95 %)
"""

from __future__ import annotations

from itertools import product
from typing import Any, Iterator, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from settings import settings

Kind = Literal["intersection", "multidim", "bernoulli_empty", "group_cprime_sweep", "trivialization_sweep"]
Verdict = Literal["pass", "fail", "critical", "condition_failed"]

REQUIRED_GRIDS: dict[str, tuple[str, ...]] = {
    "intersection": ("n", "alpha", "beta"),
    "multidim": ("n", "d"),
    "bernoulli_empty": ("n", "d"),
    "group_cprime_sweep": ("m", "ell", "d", "lam"),
    "trivialization_sweep": ("m", "ell", "d"),
}

TUPLE_FAMILIES = ("full", "star", "random", "explicit")

# Índice de ensayo reservado para objetos fijos de una celda (p. ej. el X aleatorio)
FIXTURE_TRIAL = 2**32 - 1


class ExperimentConfig(BaseModel):
    """Parámetros de un barrido; las grillas escalares se aceptan como listas de un elemento."""
    kind: Kind
    trials: int = Field(200, ge=1, lt=FIXTURE_TRIAL)
    master_seed: int = Field(default_factory=lambda: settings.MASTER_SEED, ge=0, lt=2**64)
    epsilon: float = Field(default_factory=lambda: settings.DEFAULT_EPSILON, gt=0, lt=1,
                           description="Holgura de la ventana de densidad")
    model: Literal["uniform", "bernoulli", "mixture", "function_image"] = "uniform"
    n: list[int] = Field(default_factory=list, description="Tamaños de universo")
    alpha: list[float] = Field(default_factory=list)
    beta: list[float] = Field(default_factory=list)
    d: list[float] = Field(default_factory=list)
    extra_densities: list[float] = Field(default_factory=list,
                                         description="Densidades de conjuntos adicionales en cada celda")
    k: int = Field(2, ge=1, description="Aridad de las tuplas")
    tuple_set: Optional[dict[str, Any]] = Field(None, description="Familia de X: full | star | random | explicit")
    m: list[int] = Field(default_factory=lambda: [2], description="Rangos del grupo libre")
    ell: list[int] = Field(default_factory=list, description="Longitudes máximas de relatores")
    lam: list[float] = Field(default_factory=list, alias="lambda")
    relators: Optional[int] = Field(None, ge=1, description="Cantidad fija de relatores por ensayo")
    pass_high: Optional[float] = Field(None, ge=0, le=1)
    pass_low: Optional[float] = Field(None, ge=0, le=1)

    model_config = ConfigDict(extra="forbid", populate_by_name=True, frozen=True)

    @field_validator("n", "alpha", "beta", "d", "extra_densities", "m", "ell", "lam", mode="before")
    @classmethod
    def _as_list(cls, v: Any) -> Any:
        if v is None:
            return []
        return v if isinstance(v, (list, tuple)) else [v]

    @field_validator("alpha", "beta", "d", "extra_densities")
    @classmethod
    def _densities(cls, v: list[float]) -> list[float]:
        bad = [x for x in v if not 0 <= x <= 1]
        if bad:
            raise ValueError(f"Densidades fuera de [0,1]: {bad}")
        return v

    @field_validator("lam")
    @classmethod
    def _lambdas(cls, v: list[float]) -> list[float]:
        bad = [x for x in v if not 0 < x < 1]
        if bad:
            raise ValueError(f"λ fuera de (0,1): {bad}")
        return v

    @field_validator("n")
    @classmethod
    def _sizes(cls, v: list[int]) -> list[int]:
        if any(x < 2 for x in v):
            raise ValueError("Cada n debe ser ≥ 2")
        return v

    @model_validator(mode="after")
    def _check_kind(self) -> "ExperimentConfig":
        missing = [name for name in REQUIRED_GRIDS[self.kind] if not getattr(self, name)]
        if missing:
            raise ValueError(f"El experimento {self.kind} requiere grillas no vacías: {', '.join(missing)}")
        if self.kind == "multidim":
            family = (self.tuple_set or {}).get("family")
            if family is None:
                raise ValueError("multidim requiere tuple_set con una familia")
            if family == "random" and "alpha" not in self.tuple_set and not self.alpha:
                raise ValueError("La familia random requiere alpha en tuple_set o en la grilla alpha")
            self._check_tuple_set(family)
        if self.kind in ("group_cprime_sweep", "trivialization_sweep") and any(x < 2 for x in self.m):
            raise ValueError("Cada m debe ser ≥ 2")
        if self.kind in ("group_cprime_sweep", "trivialization_sweep") and any(x < 1 for x in self.ell):
            raise ValueError("Cada ℓ debe ser ≥ 1")
        return self

    def _check_tuple_set(self, family: str) -> None:
        """Compatibilidad de la familia con k y con cada n de la grilla, antes de muestrear."""
        if family not in TUPLE_FAMILIES:
            raise ValueError(f"Familia de tuplas desconocida: {family!r}")
        smallest = min(self.n)
        if self.k > smallest:
            raise ValueError(f"k={self.k} supera el universo más chico n={smallest}")
        if family == "star":
            if self.k != 2:
                raise ValueError(f"La familia estrella sólo existe para k = 2 (k={self.k})")
            if not 0 <= int(self.tuple_set.get("center", 0)) < smallest:
                raise ValueError(f"El centro debe pertenecer a cada universo (n={smallest})")
        if family == "explicit":
            for t in self.tuple_set.get("tuples", []):
                if not isinstance(t, (list, tuple)) or not all(isinstance(x, int) for x in t):
                    raise ValueError(f"Tupla inválida: {t!r}")
                if len(t) != self.k:
                    raise ValueError(f"Tupla {t} de aridad {len(t)}, se esperaba k={self.k}")
                if any(not 0 <= x < smallest for x in t):
                    raise ValueError(f"Tupla {t} fuera del universo más chico n={smallest}")

    @property
    def high(self) -> float:
        return self.pass_high if self.pass_high is not None else settings.PASS_THRESHOLDS.get(self.kind, 0.95)

    @property
    def low(self) -> float:
        return self.pass_low if self.pass_low is not None else settings.PASS_THRESHOLDS["low"]

    def cells(self, *grids: str) -> Iterator[tuple[int, tuple]]:
        """(cell_index, valores) en el orden del producto cartesiano de las grillas dadas."""
        values = [getattr(self, g) if isinstance(g, str) else g for g in grids]
        yield from enumerate(product(*values))


class TrialRecord(BaseModel):
    """Resultado crudo de un ensayo."""
    cell_index: int
    trial: int
    stream_index: int
    count: Optional[int] = Field(None, description="Cardinal medido (|A∩B|, |A^(k)∩X|, |A|, |R|)")
    success: bool
    detail: Optional[str] = None

    model_config = ConfigDict(frozen=True)


class CellSummary(BaseModel):
    """Una fila del CSV de resultados más métricas adicionales de la celda."""
    kind: Kind
    m: Optional[int] = None
    n_or_ell: int
    alpha: Optional[float] = None
    beta_or_d: Optional[float] = None
    lam: Optional[float] = Field(None, serialization_alias="lambda")
    k: Optional[int] = None
    trials: int
    successes: int
    p_hat: float = Field(..., ge=0, le=1)
    wilson_lo: float = Field(..., ge=0, le=1)
    wilson_hi: float = Field(..., ge=0, le=1)
    verdict: Verdict
    extras: dict[str, Any] = Field(default_factory=dict)

    model_config = ConfigDict(frozen=True, ser_json_inf_nan="constants")

    @model_validator(mode="after")
    def _interval_contains_estimate(self) -> "CellSummary":
        if self.successes > self.trials:
            raise ValueError("successes > trials")
        if not self.wilson_lo - 1e-12 <= self.p_hat <= self.wilson_hi + 1e-12:
            raise ValueError("El intervalo de Wilson no contiene la estimación puntual")
        return self

    def sort_key(self) -> tuple:
        def key(v: Optional[float]) -> float:
            return float("-inf") if v is None else float(v)
        return tuple(key(v) for v in (self.m, self.n_or_ell, self.alpha, self.beta_or_d, self.lam, self.k))


class SweepSummary(BaseModel):
    config: ExperimentConfig
    cells: list[CellSummary]
    trials: list[TrialRecord] = Field(default_factory=list)

    model_config = ConfigDict(ser_json_inf_nan="constants")

    @model_validator(mode="after")
    def _sort_cells(self) -> "SweepSummary":
        self.cells.sort(key=CellSummary.sort_key)
        return self

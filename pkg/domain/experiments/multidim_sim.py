"""
Experimento de la fórmula de intersección multidimensional.

Exponentes en la escala de |E^(k)|: log|A^(k) ∩ X| / log|E^(k)| sobre los
ensayos con intersección no vacía; la predicción es α + d − 1 con α medido en
la misma escala.
"""

from __future__ import annotations

import logging
from typing import Optional

import numpy as np

from domain.errors import DomainError
from domain.experiments.config import FIXTURE_TRIAL, CellSummary, ExperimentConfig, SweepSummary, TrialRecord
from domain.experiments.intersection import median_exponent
from domain.models import SeedSpec, SmallSelfIntersectionReport
from domain.moments import multidim_moments, multidim_moments_bernoulli
from domain.multidim import TupleSet, build_tuple_set, intersect_tuples, small_self_intersection_check, tuple_universe_size
from domain.samplers import generator_for, sample_model
from domain.summary import at_least, summarize_cell
from domain.universe import CRITICAL_TOL, floor_density_size, in_density_window

log = logging.getLogger("experiments.multidim")


def _tuple_set_for(cfg: ExperimentConfig, cell_index: int, n: int, alpha: Optional[float]) -> TupleSet:
    description = dict(cfg.tuple_set)
    if description["family"] == "random" and alpha is not None:
        description["alpha"] = alpha
    seed = SeedSpec.for_trial(cfg.master_seed, cell_index, FIXTURE_TRIAL)
    return build_tuple_set(description, n, cfg.k, seed)


def _exact_moments(cfg: ExperimentConfig, x: TupleSet, n: int, d: float) -> Optional[dict]:
    if x.cardinality == 0:
        return None
    profile = x.profile()
    if cfg.model == "uniform":
        moments = multidim_moments(profile, x.cardinality, n, floor_density_size(n, d), cfg.k)
    elif cfg.model == "bernoulli":
        moments = multidim_moments_bernoulli(profile, x.cardinality, n, d, cfg.k)
    else:
        return None
    return {"mean": moments.mean, "variance": moments.variance, "profile": list(profile.sizes)}


def _multidim_cell(cfg: ExperimentConfig, cell_index: int, n: int, alpha: Optional[float], d: float,
                   records: list[TrialRecord]) -> CellSummary:
    x = _tuple_set_for(cfg, cell_index, n, alpha)
    total = tuple_universe_size(n, cfg.k)
    size_x = x.cardinality
    if size_x == 0:
        raise DomainError(f"El conjunto de tuplas es vacío para n={n}")
    alpha_x = x.alpha
    predicted = alpha_x + d - 1
    critical = abs(predicted) <= CRITICAL_TOL
    report: Optional[SmallSelfIntersectionReport] = None
    if 0 < d < 1:
        report = small_self_intersection_check(x.profile(), size_x, n, cfg.k, d)

    counts, outcomes = [], []
    for trial in range(cfg.trials):
        seed = SeedSpec.for_trial(cfg.master_seed, cell_index, trial)
        a = sample_model(cfg.model, n, d, generator_for(seed))
        count = intersect_tuples(a, x)
        if predicted > 0:
            success = in_density_window(count, total, predicted, cfg.epsilon)
        else:
            success = count == 0
        counts.append(count)
        outcomes.append(success)
        records.append(TrialRecord(cell_index=cell_index, trial=trial, stream_index=seed.stream_index,
                                   count=count, success=success))

    observed = median_exponent(counts, total)
    extras = {
        "family": x.family,
        "size_x": size_x,
        "predicted_exponent": predicted,
        "median_exponent": observed,
        "exponent_deviation": None if observed is None else abs(observed - predicted),
        "empty_fraction": counts.count(0) / len(counts),
        "mean_count": float(np.mean(counts)),
        "small_self_intersection": None if report is None else report.model_dump(),
        "exact_moments": _exact_moments(cfg, x, n, d),
    }
    if critical:
        verdict = "critical"
    elif predicted > 0 and report is not None and not report.holds:
        verdict = "condition_failed"
    else:
        verdict = at_least(cfg.high)
    return summarize_cell(cfg.kind, outcomes, verdict, n_or_ell=n, alpha=alpha_x, beta_or_d=d, k=cfg.k,
                          extras=extras)


def run_multidim_experiment(cfg: ExperimentConfig) -> SweepSummary:
    """
    Por celda (n, α de X, d): ventana de densidad de |A^(k) ∩ X| si α + d > 1,
    vacío si α + d < 1, junto con el reporte de autointersección pequeña de X.
    """
    if cfg.kind != "multidim":
        raise DomainError(f"Configuración de tipo {cfg.kind}, se esperaba multidim")
    alphas = cfg.alpha if cfg.tuple_set["family"] == "random" and "alpha" not in cfg.tuple_set else [None]
    cells, records = [], []
    for cell_index, (n, alpha, d) in cfg.cells("n", alphas, "d"):
        cell = _multidim_cell(cfg, cell_index, n, alpha, d, records)
        log.info("multidim n=%s α=%.4f d=%s: %s/%s (%s)", n, cell.alpha, d, cell.successes, cell.trials, cell.verdict)
        cells.append(cell)
    return SweepSummary(config=cfg, cells=cells, trials=records)

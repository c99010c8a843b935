"""
Experimentos de la fórmula de intersección y del vacío de Bernoulli en d = 0.
"""

from __future__ import annotations

import logging
import math
from typing import Optional

import numpy as np

from domain.errors import DomainError
from domain.experiments.config import CellSummary, ExperimentConfig, SweepSummary, TrialRecord
from domain.models import SeedSpec
from domain.moments import bernoulli_empty_probability, intersection_moments_uniform
from domain.samplers import generator_for, sample_bernoulli, sample_model
from domain.summary import at_least, covers, summarize_cell
from domain.universe import floor_density_size, in_density_window, intersect, predict_intersection

log = logging.getLogger("experiments.intersection")


def median_exponent(counts: list[int], base: float) -> Optional[float]:
    """Mediana de log_base(count) sobre los ensayos con intersección no vacía."""
    nonzero = [c for c in counts if c > 0]
    if not nonzero:
        return None
    return float(np.median(np.log(nonzero) / math.log(base)))


def _intersection_cell(cfg: ExperimentConfig, cell_index: int, n: int, alpha: float, beta: float,
                       records: list[TrialRecord]) -> CellSummary:
    densities = [alpha, beta, *cfg.extra_densities]
    predicted = predict_intersection(densities)
    counts, outcomes = [], []
    for trial in range(cfg.trials):
        seed = SeedSpec.for_trial(cfg.master_seed, cell_index, trial)
        rng = generator_for(seed)
        result = sample_model(cfg.model, n, densities[0], rng)
        for d in densities[1:]:
            result = intersect(result, sample_model(cfg.model, n, d, rng))
        count = result.cardinality
        success = predicted is not None and in_density_window(count, n, predicted, cfg.epsilon)
        counts.append(count)
        outcomes.append(success)
        records.append(TrialRecord(cell_index=cell_index, trial=trial, stream_index=seed.stream_index,
                                   count=count, success=success))
        log.debug("celda %s ensayo %s: |∩| = %s", cell_index, trial, count)

    extras: dict = {
        "predicted_density": None if predicted is None else float(predicted),
        "mean_count": float(np.mean(counts)),
        "empty_fraction": counts.count(0) / len(counts),
        "median_exponent": median_exponent(counts, n),
    }
    if cfg.model == "uniform" and not cfg.extra_densities:
        exact = intersection_moments_uniform(n, floor_density_size(n, alpha), floor_density_size(n, beta))
        extras["exact_mean"], extras["exact_variance"] = exact.mean, exact.variance
    verdict = "critical" if predicted is None else at_least(cfg.high)
    return summarize_cell(cfg.kind, outcomes, verdict, n_or_ell=n, alpha=alpha, beta_or_d=beta, extras=extras)


def run_intersection_experiment(cfg: ExperimentConfig) -> SweepSummary:
    """
    Por celda (n, α, β): fracción de ensayos con |A∩B| dentro de la ventana
    [n^{δ−ε}, n^{δ+ε}] de la densidad predicha δ, o vacía si δ = −∞.
    Las densidades de ``extra_densities`` suman conjuntos independientes.
    """
    if cfg.kind != "intersection":
        raise DomainError(f"Configuración de tipo {cfg.kind}, se esperaba intersection")
    cells, records = [], []
    for cell_index, (n, alpha, beta) in cfg.cells("n", "alpha", "beta"):
        cell = _intersection_cell(cfg, cell_index, n, alpha, beta, records)
        log.info("intersection n=%s α=%s β=%s: %s/%s (%s)", n, alpha, beta, cell.successes, cell.trials, cell.verdict)
        cells.append(cell)
    return SweepSummary(config=cfg, cells=cells, trials=records)


def run_bernoulli_empty(cfg: ExperimentConfig) -> SweepSummary:
    """
    Fracción de muestras de Bernoulli vacías por celda (n, d); la celda pasa si
    el intervalo de Wilson cubre la probabilidad exacta (1 − n^{d−1})^n.
    """
    if cfg.kind != "bernoulli_empty":
        raise DomainError(f"Configuración de tipo {cfg.kind}, se esperaba bernoulli_empty")
    cells, records = [], []
    for cell_index, (n, d) in cfg.cells("n", "d"):
        outcomes = []
        for trial in range(cfg.trials):
            seed = SeedSpec.for_trial(cfg.master_seed, cell_index, trial)
            count = sample_bernoulli(n, d, seed).cardinality
            outcomes.append(count == 0)
            records.append(TrialRecord(cell_index=cell_index, trial=trial, stream_index=seed.stream_index,
                                       count=count, success=count == 0))
        exact = bernoulli_empty_probability(n, d)
        cell = summarize_cell(cfg.kind, outcomes, covers(exact), n_or_ell=n, beta_or_d=d,
                              extras={"exact_empty_probability": exact, "limit": math.exp(-1) if d == 0 else None})
        log.info("bernoulli_empty n=%s d=%s: %s/%s vacías (exacta %.4f)", n, d, cell.successes, cell.trials, exact)
        cells.append(cell)
    return SweepSummary(config=cfg, cells=cells, trials=records)

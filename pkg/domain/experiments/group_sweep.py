"""
Barridos sobre el modelo de densidad de grupos aleatorios.

Cada ensayo toma round(|B_ℓ|^d) relatores distintos uniformes de B_ℓ (o una
cantidad fija ``relators``) en orden de sorteo y los alimenta a detectores
incrementales, deteniéndose en cuanto el resultado del ensayo queda decidido.
"""

from __future__ import annotations

import logging
from typing import Optional

from domain.errors import DomainError
from domain.experiments.config import CellSummary, ExperimentConfig, SweepSummary, TrialRecord
from domain.groups.models import letter_char
from domain.groups.smallcancel import CRITICAL_TOL, PieceIndex, TrivializationIndex, piece_phase_densities
from domain.groups.words import count_cyclically_reduced, iter_distinct_relators
from domain.models import SeedSpec
from domain.samplers import generator_for
from domain.summary import at_least, at_most, summarize_cell

log = logging.getLogger("experiments.groups")


def relator_count(cfg: ExperimentConfig, m: int, ell: int, d: float) -> tuple[int, bool]:
    """Cantidad de relatores por ensayo y si fue recortada a |B_ℓ|."""
    total = count_cyclically_reduced(m, ell).total
    wanted = cfg.relators if cfg.relators is not None else round(float(total) ** d)
    if wanted > total:
        log.warning("|B_ℓ|^d = %s supera |B_ℓ| = %s (m=%s, ℓ=%s, d=%s); se recorta", wanted, total, m, ell, d)
        return total, True
    return max(wanted, 1), False


def _split_verdict(critical: bool, below: bool, cfg: ExperimentConfig):
    if critical:
        return "critical"
    return at_least(cfg.high) if below else at_most(cfg.low)


def _cprime_cell(cfg: ExperimentConfig, cell_index: int, m: int, ell: int, lam: float, d: float,
                 records: list[TrialRecord]) -> CellSummary:
    count, clamped = relator_count(cfg, m, ell, d)
    outcomes, cross_outcomes, consumed = [], [], []
    for trial in range(cfg.trials):
        seed = SeedSpec.for_trial(cfg.master_seed, cell_index, trial)
        full = PieceIndex(lam)
        cross = PieceIndex(lam, cross_only=True)
        for word in iter_distinct_relators(m, ell, count, generator_for(seed)):
            if full.satisfied:
                full.add(word)
            if cross.satisfied:
                cross.add(word)
            if not full.satisfied and not cross.satisfied:
                break
        outcomes.append(full.satisfied)
        cross_outcomes.append(cross.satisfied)
        consumed.append(max(len(full), len(cross)))
        records.append(TrialRecord(
            cell_index=cell_index, trial=trial, stream_index=seed.stream_index, count=count,
            success=full.satisfied, detail=f"cross_only={int(cross.satisfied)};consumed={consumed[-1]}",
        ))
        log.debug("celda %s ensayo %s: C'(λ)=%s cruzado=%s", cell_index, trial, full.satisfied, cross.satisfied)

    extras = {
        "relators_per_trial": count,
        "clamped": clamped,
        "cross_only_rate": sum(cross_outcomes) / len(cross_outcomes),
        "mean_relators_examined": sum(consumed) / len(consumed),
        "phase": piece_phase_densities(lam, d).model_dump(),
    }
    critical = abs(d - lam / 2) <= CRITICAL_TOL
    verdict = _split_verdict(critical, d < lam / 2, cfg)
    return summarize_cell(cfg.kind, outcomes, verdict, m=m, n_or_ell=ell, beta_or_d=d, lam=lam, extras=extras)


def run_group_sweep(cfg: ExperimentConfig) -> SweepSummary:
    """
    Por celda (m, ℓ, λ, d): proporción empírica de presentaciones C'(λ).
    La tasa del criterio sólo-cruzado (λ·min{|r₁|,|r₂|}) va en ``extras``.
    """
    if cfg.kind != "group_cprime_sweep":
        raise DomainError(f"Configuración de tipo {cfg.kind}, se esperaba group_cprime_sweep")
    cells, records = [], []
    for cell_index, (m, ell, lam, d) in cfg.cells("m", "ell", "lam", "d"):
        cell = _cprime_cell(cfg, cell_index, m, ell, lam, d, records)
        log.info("C'(λ) m=%s ℓ=%s λ=%s d=%s: %s/%s (%s)", m, ell, lam, d, cell.successes, cell.trials, cell.verdict)
        cells.append(cell)
    return SweepSummary(config=cfg, cells=cells, trials=records)


# ------------------------------------------------------------------
# Trivialización
# ------------------------------------------------------------------

def _trivialization_cell(cfg: ExperimentConfig, cell_index: int, m: int, ell: int, d: float,
                         records: list[TrialRecord]) -> CellSummary:
    count, clamped = relator_count(cfg, m, ell, d)
    generators = [2 * g for g in range(m)]
    found = {x: 0 for x in generators}
    outcomes = []
    for trial in range(cfg.trials):
        seed = SeedSpec.for_trial(cfg.master_seed, cell_index, trial)
        index = TrivializationIndex(generators)
        done = False
        for word in iter_distinct_relators(m, ell, count, generator_for(seed)):
            if index.add(word):
                done = True
                break
        for x in index.witnesses:
            found[x] += 1
        outcomes.append(done)
        witnessed = "".join(letter_char(x) for x in sorted(index.witnesses))
        records.append(TrialRecord(cell_index=cell_index, trial=trial, stream_index=seed.stream_index,
                                   count=count, success=done, detail=f"witnessed={witnessed}"))

    extras = {
        "relators_per_trial": count,
        "clamped": clamped,
        "witness_fraction": {letter_char(x): c / cfg.trials for x, c in found.items()},
    }
    critical = abs(d - 0.5) <= CRITICAL_TOL
    verdict = _split_verdict(critical, d > 0.5, cfg)
    return summarize_cell(cfg.kind, outcomes, verdict, m=m, n_or_ell=ell, beta_or_d=d, extras=extras)


def run_trivialization_sweep(cfg: ExperimentConfig) -> SweepSummary:
    """
    Por celda (m, ℓ, d): fracción de ensayos con un par (w, xw) ⊂ R para cada
    generador x, más la fracción por generador.
    """
    if cfg.kind != "trivialization_sweep":
        raise DomainError(f"Configuración de tipo {cfg.kind}, se esperaba trivialization_sweep")
    cells, records = [], []
    for cell_index, (m, ell, d) in cfg.cells("m", "ell", "d"):
        cell = _trivialization_cell(cfg, cell_index, m, ell, d, records)
        log.info("trivialización m=%s ℓ=%s d=%s: %s/%s (%s)", m, ell, d, cell.successes, cell.trials, cell.verdict)
        cells.append(cell)
    return SweepSummary(config=cfg, cells=cells, trials=records)


def sweep_monotone(summary: SweepSummary, allowed_inversions: int = 1) -> Optional[bool]:
    """p̂ no creciente en d a lo largo de cada fila (m, ℓ, λ), con tolerancia de inversiones."""
    rows: dict[tuple, list[tuple[float, float]]] = {}
    for cell in summary.cells:
        rows.setdefault((cell.m, cell.n_or_ell, cell.lam), []).append((cell.beta_or_d, cell.p_hat))
    if not rows:
        return None
    for values in rows.values():
        values.sort()
        inversions = sum(1 for (_, a), (_, b) in zip(values, values[1:]) if b > a)
        if inversions > allowed_inversions:
            return False
    return True

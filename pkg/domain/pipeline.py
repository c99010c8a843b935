"""
Pipeline principal de experimentos.
Coordina la carga de la configuración, el despacho por tipo y la exportación.

FLUJO:
-------------------------------------------------------------------------------
1. Configuración: JSON (infrastructure.loaders) o flags de la CLI → ExperimentConfig.
2. Despacho: ``kind`` elige el experimento; cada celda del producto de grillas
   recibe cell_index según su posición y cada ensayo el flujo
   (master_seed, cell_index·2³² + trial).
3. Agregación: p̂ e intervalo de Wilson por celda (domain.summary).
4. Exportación opcional: results.csv, summary.json, trials.csv.
-------------------------------------------------------------------------------
"""

from __future__ import annotations

import logging
import time
from pathlib import Path
from typing import Callable, Optional, Union

from domain.errors import ConfigError
from domain.experiments.config import ExperimentConfig, SweepSummary
from domain.experiments.group_sweep import run_group_sweep, run_trivialization_sweep
from domain.experiments.intersection import run_bernoulli_empty, run_intersection_experiment
from domain.experiments.multidim_sim import run_multidim_experiment

log = logging.getLogger("pipeline")

RUNNERS: dict[str, Callable[[ExperimentConfig], SweepSummary]] = {
    "intersection": run_intersection_experiment,
    "multidim": run_multidim_experiment,
    "bernoulli_empty": run_bernoulli_empty,
    "group_cprime_sweep": run_group_sweep,
    "trivialization_sweep": run_trivialization_sweep,
}


def run_experiment(cfg: ExperimentConfig) -> SweepSummary:
    """Ejecuta el experimento indicado por ``cfg.kind``."""
    runner = RUNNERS.get(cfg.kind)
    if runner is None:
        raise ConfigError(f"Tipo de experimento desconocido: {cfg.kind}")
    start = time.perf_counter()
    summary = runner(cfg)
    log.info("%s: %d celdas en %.2f s", cfg.kind, len(summary.cells), time.perf_counter() - start)
    return summary


def build_and_run(
    path: Optional[Union[str, Path]] = None,
    cfg: Optional[ExperimentConfig] = None,
    out_dir: Optional[Union[str, Path]] = None,
) -> SweepSummary:
    """
    Carga (si hace falta), ejecuta y exporta un experimento.

    Raises:
        ConfigError: si no se da exactamente uno de ``path`` o ``cfg``.
    """
    if (path is None) == (cfg is None):
        raise ConfigError("Proporcione 'path' o 'cfg', pero no ambos.")
    if cfg is None:
        from infrastructure.loaders import load_config
        cfg = load_config(path)
    summary = run_experiment(cfg)
    if out_dir is not None:
        from infrastructure.exporters import write_outputs
        write_outputs(summary, out_dir)
    return summary

"""
Escritura de resultados: results.csv (esquema fijo), summary.json
(configuración + celdas con extras) y trials.csv (conteos crudos por ensayo).

Los tres archivos son función determinista del resumen; una misma
configuración con la misma semilla produce bytes idénticos.
"""

import logging
from pathlib import Path
from typing import Union

from domain.experiments.config import SweepSummary
from domain.summary import summary_to_frame, trials_to_frame

log = logging.getLogger("infrastructure.exporters")

FLOAT_FORMAT = "%.6f"


def results_csv(summary: SweepSummary) -> str:
    return summary_to_frame(summary).to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")


def trials_csv(summary: SweepSummary) -> str:
    return trials_to_frame(summary.trials).to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")


def summary_json(summary: SweepSummary) -> str:
    return summary.model_dump_json(by_alias=True, exclude={"trials"}, indent=2)


def write_outputs(summary: SweepSummary, out_dir: Union[str, Path]) -> dict[str, Path]:
    """Escribe los tres archivos en ``out_dir`` (se crea si no existe) y devuelve sus rutas."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = {
        "results": out_dir / "results.csv",
        "summary": out_dir / "summary.json",
        "trials": out_dir / "trials.csv",
    }
    paths["results"].write_text(results_csv(summary), encoding="utf-8")
    paths["summary"].write_text(summary_json(summary), encoding="utf-8")
    paths["trials"].write_text(trials_csv(summary), encoding="utf-8")
    log.info("Resultados escritos en %s", out_dir)
    return paths

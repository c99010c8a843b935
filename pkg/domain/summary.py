"""
Agregación de ensayos: proporciones empíricas, intervalos de Wilson y las
tablas (pandas) que alimentan el CSV de resultados, la CLI y el explorador.
"""

from __future__ import annotations

import math
from typing import Any, Iterable, Optional

import pandas as pd
from scipy.stats import norm

from domain.experiments.config import CellSummary, SweepSummary, TrialRecord, Verdict

CSV_COLUMNS = [
    "kind", "m", "n_or_ell", "alpha", "beta_or_d", "lambda", "k",
    "trials", "successes", "p_hat", "wilson_lo", "wilson_hi", "verdict",
]
INT_COLUMNS = ["m", "n_or_ell", "k", "trials", "successes"]
TRIAL_COLUMNS = ["cell_index", "trial", "stream_index", "count", "success", "detail"]


def wilson_interval(successes: int, trials: int, confidence: float = 0.95) -> tuple[float, float]:
    """Intervalo de score de Wilson para una proporción binomial."""
    if trials <= 0:
        raise ValueError("Se requiere al menos un ensayo")
    z = float(norm.ppf(0.5 + confidence / 2))
    p = successes / trials
    denom = 1 + z * z / trials
    center = (p + z * z / (2 * trials)) / denom
    half = z * math.sqrt(p * (1 - p) / trials + z * z / (4 * trials * trials)) / denom
    lo, hi = max(0.0, center - half), min(1.0, center + half)
    # p̂ ∈ [lo, hi] también en los extremos 0 y 1
    return min(lo, p), max(hi, p)


def summarize_cell(
    kind: str,
    outcomes: Iterable[bool],
    verdict_for: "Verdict | Any",
    *,
    n_or_ell: int,
    m: Optional[int] = None,
    alpha: Optional[float] = None,
    beta_or_d: Optional[float] = None,
    lam: Optional[float] = None,
    k: Optional[int] = None,
    extras: Optional[dict[str, Any]] = None,
) -> CellSummary:
    """
    Arma la fila de una celda.

    ``verdict_for`` es un veredicto fijo ("critical", "condition_failed") o
    una función (p̂, lo, hi) → veredicto.
    """
    outcomes = list(outcomes)
    trials = len(outcomes)
    successes = sum(outcomes)
    p_hat = successes / trials
    lo, hi = wilson_interval(successes, trials)
    verdict = verdict_for(p_hat, lo, hi) if callable(verdict_for) else verdict_for
    return CellSummary(
        kind=kind, m=m, n_or_ell=n_or_ell, alpha=alpha, beta_or_d=beta_or_d, lam=lam, k=k,
        trials=trials, successes=successes, p_hat=p_hat, wilson_lo=lo, wilson_hi=hi,
        verdict=verdict, extras=extras or {},
    )


def at_least(threshold: float):
    return lambda p, lo, hi: "pass" if p >= threshold else "fail"


def at_most(threshold: float):
    return lambda p, lo, hi: "pass" if p <= threshold else "fail"


def covers(value: float):
    return lambda p, lo, hi: "pass" if lo <= value <= hi else "fail"


# ------------------------------------------------------------------
# Tablas
# ------------------------------------------------------------------

def summary_to_frame(summary: SweepSummary) -> pd.DataFrame:
    """Filas del CSV de resultados (esquema fijo), ordenadas por clave de celda."""
    rows = [cell.model_dump(by_alias=True, exclude={"extras"}) for cell in summary.cells]
    df = pd.DataFrame(rows, columns=CSV_COLUMNS)
    for col in INT_COLUMNS:
        df[col] = df[col].astype("Int64")
    for col in ("alpha", "beta_or_d", "lambda"):
        df[col] = df[col].astype("float64")
    return df


def trials_to_frame(records: list[TrialRecord]) -> pd.DataFrame:
    df = pd.DataFrame([r.model_dump() for r in records], columns=TRIAL_COLUMNS)
    for col in ("cell_index", "trial", "count"):
        df[col] = df[col].astype("Int64")
    df["stream_index"] = df["stream_index"].astype("uint64")
    return df


def extras_to_frame(summary: SweepSummary) -> pd.DataFrame:
    """Métricas adicionales por celda, aplanadas a columnas escalares."""
    rows = []
    for cell in summary.cells:
        row = {"n_or_ell": cell.n_or_ell, "alpha": cell.alpha, "beta_or_d": cell.beta_or_d, "lambda": cell.lam}
        for key, value in cell.extras.items():
            if isinstance(value, dict):
                row.update({f"{key}.{sub}": v for sub, v in value.items() if not isinstance(v, (dict, list))})
            elif not isinstance(value, list):
                row[key] = value
        rows.append(row)
    return pd.DataFrame(rows)

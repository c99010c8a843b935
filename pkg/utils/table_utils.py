"""
Formato de las tablas de resultados para el explorador.
"""

import pandas as pd

from utils.styles import VERDICT_COLORS

DISPLAY_NAMES = {
    "n_or_ell": "n / ℓ",
    "beta_or_d": "β / d",
    "lambda": "λ",
    "alpha": "α",
    "p_hat": "p̂",
    "wilson_lo": "Wilson inf.",
    "wilson_hi": "Wilson sup.",
    "verdict": "veredicto",
}


def drop_empty_columns(df: pd.DataFrame) -> pd.DataFrame:
    """Quita columnas sin ningún valor (p. ej. λ en un experimento de intersección)."""
    return df.loc[:, df.notna().any(axis=0)]


def verdict_style(value: str) -> str:
    color = VERDICT_COLORS.get(value)
    return f"background-color: {color}; color: white" if color else ""


def style_results(df: pd.DataFrame):
    """Styler con los veredictos coloreados y cifras a 4 decimales."""
    df = drop_empty_columns(df).rename(columns=DISPLAY_NAMES)
    floats = [c for c in df.columns if pd.api.types.is_float_dtype(df[c])]
    styler = df.style.format({c: "{:.4f}" for c in floats}, na_rep="")
    if "veredicto" in df.columns:
        styler = styler.map(verdict_style, subset=["veredicto"])
    return styler

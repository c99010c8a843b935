"""
Tarjetas de métricas de un experimento.
"""

import streamlit as st
from streamlit_extras.metric_cards import style_metric_cards


def render_metrics_cards(metrics_data):
    """
    Renderiza una fila de st.metric con el estilo de tarjetas.

    Args:
        metrics_data (list): dicts con title, value y opcionalmente delta
    """
    cols = st.columns(len(metrics_data))
    for col, metric in zip(cols, metrics_data):
        with col:
            st.metric(label=metric["title"], value=metric["value"], delta=metric.get("delta"),
                      delta_color="off" if metric.get("delta") is None else "normal")
    style_metric_cards(
        background_color="#1E293B",
        border_left_color="#0EA5E9",
        border_color="#334155",
        box_shadow=True,
        border_size_px=1,
        border_radius_px=5,
    )


def summary_metrics(summary):
    """Celdas por veredicto y ensayos totales de un SweepSummary."""
    counts = {"pass": 0, "fail": 0, "critical": 0, "condition_failed": 0}
    for cell in summary.cells:
        counts[cell.verdict] += 1
    return [
        {"title": "Celdas", "value": len(summary.cells)},
        {"title": "Pasan", "value": counts["pass"]},
        {"title": "Fallan", "value": counts["fail"]},
        {"title": "Críticas / condición", "value": counts["critical"] + counts["condition_failed"]},
        {"title": "Ensayos", "value": sum(cell.trials for cell in summary.cells)},
    ]

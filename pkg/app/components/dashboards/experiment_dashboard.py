"""
Dashboard de un experimento ejecutado: métricas, tabla de resultados,
extras por celda y descargas.
"""

import streamlit as st

from app.components.ui.metrics import render_metrics_cards, summary_metrics
from app.components.ui.tables import display_extras_table, display_results_table
from domain.summary import extras_to_frame, summary_to_frame
from infrastructure.exporters import results_csv, summary_json, trials_csv
from utils.styles import verdict_legend


def display_experiment_dashboard(summary):
    """
    Muestra el resultado de un SweepSummary.

    Args:
        summary (SweepSummary): resultado de domain.pipeline.run_experiment
    """
    render_metrics_cards(summary_metrics(summary))
    st.markdown("<hr>", unsafe_allow_html=True)

    st.markdown(verdict_legend(), unsafe_allow_html=True)
    display_results_table(summary_to_frame(summary))
    with st.expander("Métricas adicionales por celda", expanded=False):
        display_extras_table(extras_to_frame(summary))

    critical = [c for c in summary.cells if c.verdict == "critical"]
    if critical:
        st.info(f"{len(critical)} celda(s) sobre una línea crítica: no hay predicción.")

    col1, col2, col3 = st.columns(3)
    kind = summary.config.kind
    with col1:
        st.download_button("results.csv", results_csv(summary), file_name=f"{kind}_results.csv", mime="text/csv")
    with col2:
        st.download_button("summary.json", summary_json(summary), file_name=f"{kind}_summary.json",
                           mime="application/json")
    with col3:
        st.download_button("trials.csv", trials_csv(summary), file_name=f"{kind}_trials.csv", mime="text/csv")

"""
Inicialización del paquete de componentes.
Exporta los componentes principales del explorador.
"""

# Componentes UI
from app.components.ui.layout import header, footer, sidebar_filters
from app.components.ui.metrics import render_metrics_cards, summary_metrics
from app.components.ui.tables import display_dataframe, display_extras_table, display_results_table

# Dashboards completos
from app.components.dashboards.experiment_dashboard import display_experiment_dashboard

__all__ = [
    'display_experiment_dashboard',
    'display_results_table',
    'display_extras_table',
    'summary_metrics',
]

"""
Componentes de UI reutilizables.
Contiene elementos visuales puros que no dependen directamente de la lógica de negocio.
"""

from app.components.ui.layout import footer, header, sidebar_filters
from app.components.ui.metrics import render_metrics_cards, summary_metrics
from app.components.ui.tables import display_dataframe, display_extras_table, display_results_table

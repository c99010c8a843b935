"""
Dashboards completos compuestos de múltiples componentes UI.
"""

from app.components.dashboards.experiment_dashboard import display_experiment_dashboard

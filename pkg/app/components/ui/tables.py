"""
Componentes de tablas para la interfaz de usuario.
"""

import streamlit as st

from utils.table_utils import drop_empty_columns, style_results


def display_dataframe(df, title=None, hide_index=True, column_config=None, use_container_width=True):
    """
    Muestra un DataFrame con opciones personalizadas.

    Args:
        df (pd.DataFrame): DataFrame a mostrar
        title (str, opcional): Título para la tabla
        hide_index (bool): Si True, oculta la columna de índice
        column_config (dict): Configuración para las columnas
    """
    if title:
        st.subheader(title)
    st.dataframe(df, hide_index=hide_index, column_config=column_config, use_container_width=use_container_width)


def display_results_table(df, title="Resultados por celda"):
    """Tabla del CSV de resultados con los veredictos coloreados."""
    if df.empty:
        st.info("No hay celdas para mostrar.")
        return
    display_dataframe(style_results(df), title=title)


def display_extras_table(df, title="Métricas adicionales"):
    if df.empty:
        return
    display_dataframe(drop_empty_columns(df), title=title)

"""
Componentes de layout para la interfaz de usuario.
Proporciona encabezado, pie y los controles de la barra lateral.
"""

import streamlit as st


def header(title, subtitle=None, centered=False):
    """
    Muestra un encabezado con título y subtítulo opcional.

    Args:
        title (str): Título principal
        subtitle (str, opcional): Subtítulo o descripción
        centered (bool): Si True, centra el título y añade margen superior.
    """
    if centered:
        st.markdown("""
        <style>
        .header-container { margin-top: 2rem; text-align: center; }
        </style>
        """, unsafe_allow_html=True)
        st.markdown('<div class="header-container">', unsafe_allow_html=True)
    st.title(title)
    if subtitle:
        st.caption(subtitle)
    st.markdown("<hr>", unsafe_allow_html=True)
    if centered:
        st.markdown("</div>", unsafe_allow_html=True)


def footer(text=None, hide_streamlit_footer=True):
    """Pie de página; oculta el de Streamlit si se pide."""
    if hide_streamlit_footer:
        st.markdown("<style>footer {visibility: hidden;}</style>", unsafe_allow_html=True)
    if text:
        st.markdown("<br>", unsafe_allow_html=True)
        st.markdown(
            f"<div style='text-align: center; color: #888; padding: 10px; font-size: 0.8em;'>{text}</div>",
            unsafe_allow_html=True,
        )


def _parse_grid(text, cast):
    """'0.1, 0.2 0.3' → [0.1, 0.2, 0.3]; vacío → []."""
    parts = text.replace(",", " ").split()
    return [cast(p) for p in parts]


def sidebar_filters(filters_config):
    """
    Muestra controles en la barra lateral según una configuración.

    Cada control es un dict con type (selectbox | number | grid | slider |
    checkbox), key y label; los de tipo grid devuelven una lista.

    Returns:
        dict: Valores seleccionados por clave
    """
    values = {}
    for item in filters_config:
        kind = item.get("type", "selectbox")
        key = item.get("key")
        label = item.get("label", key)
        if not key:
            continue
        widget_key = f"sidebar_{key}"
        if kind == "selectbox":
            options = item.get("options", [])
            values[key] = st.sidebar.selectbox(label, options=options, index=item.get("default_index", 0),
                                               key=widget_key)
        elif kind == "number":
            values[key] = st.sidebar.number_input(label, value=item.get("default"), step=item.get("step"),
                                                  key=widget_key)
        elif kind == "grid":
            text = st.sidebar.text_input(label, value=item.get("default", ""), key=widget_key,
                                         help="Valores separados por coma o espacio")
            try:
                values[key] = _parse_grid(text, item.get("cast", float))
            except ValueError:
                st.sidebar.error(f"{label}: valores inválidos")
                values[key] = []
        elif kind == "slider":
            values[key] = st.sidebar.slider(label, min_value=item.get("min_value", 0.0),
                                            max_value=item.get("max_value", 1.0),
                                            value=item.get("default_value", 0.5),
                                            step=item.get("step", 0.01), key=widget_key)
        elif kind == "checkbox":
            values[key] = st.sidebar.checkbox(label, value=item.get("default", False), key=widget_key)
        if item.get("add_separator", False):
            st.sidebar.markdown("---")
    return values

"""
Estilos CSS del explorador y colores de veredicto.
"""

import streamlit as st

VERDICT_COLORS = {
    "pass": "#15803D",
    "fail": "#B91C1C",
    "critical": "#A16207",
    "condition_failed": "#7C3AED",
}

VERDICT_LABELS = {
    "pass": "pasa",
    "fail": "falla",
    "critical": "crítica",
    "condition_failed": "condición no cumplida",
}


def _verdict_rules() -> str:
    return "\n".join(
        f"    .verdict-{name} {{ background-color: {color}; }}" for name, color in VERDICT_COLORS.items()
    )


def apply_base_styles():
    """Ancho de página, relatores en monoespaciado e insignias de veredicto."""
    st.markdown(f"""
    <style>
    .block-container {{
        max-width: 1200px !important;
        padding-top: 1.5rem !important;
    }}
    .stTextArea textarea {{
        font-family: ui-monospace, "JetBrains Mono", monospace;
        letter-spacing: 0.05em;
    }}
    .verdict-badge {{
        display: inline-block;
        color: white;
        font-size: 0.75rem;
        padding: 0.1rem 0.5rem;
        margin-right: 0.4rem;
        border-radius: 999px;
    }}
{_verdict_rules()}
    </style>
    """, unsafe_allow_html=True)


def verdict_legend() -> str:
    """HTML con una insignia por veredicto."""
    return "".join(
        f'<span class="verdict-badge verdict-{name}">{label}</span>' for name, label in VERDICT_LABELS.items()
    )

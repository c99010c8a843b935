import streamlit as st

from dotenv import load_dotenv
load_dotenv()

# Configuración de la página - debe ser lo primero que se ejecuta
st.set_page_config(
    page_title="Subconjuntos aleatorios con densidad",
    page_icon="🎲",
    layout="wide",
    initial_sidebar_state="expanded"
)

import pandas as pd

# Importar configuración y servicios
from settings import settings
from utils.styles import apply_base_styles

# Importar servicios de dominio
from domain.errors import ConfigError, DomainError
from domain.experiments.config import ExperimentConfig
from domain.groups.models import Letter
from domain.groups.smallcancel import find_trivializing_pair, max_piece_ratio, satisfies_c_prime, thresholds
from domain.pipeline import run_experiment

# Importar infraestructura
from infrastructure.loaders import config_from_dict, parse_presentation

# Importar componentes UI
from app.components.ui.layout import header, footer, sidebar_filters
from app.components.ui.tables import display_dataframe
from app.components.dashboards import display_experiment_dashboard

settings.configure_logging()

KINDS = {
    "Intersección": "intersection",
    "Multidimensional": "multidim",
    "Vacío de Bernoulli": "bernoulli_empty",
    "Barrido C'(λ)": "group_cprime_sweep",
    "Trivialización": "trivialization_sweep",
}

# Controles por tipo de experimento
CONTROLS = {
    "intersection": [
        {"type": "grid", "key": "n", "label": "n", "default": "10000", "cast": int},
        {"type": "grid", "key": "alpha", "label": "α", "default": "0.8 0.25"},
        {"type": "grid", "key": "beta", "label": "β", "default": "0.8 0.25"},
        {"type": "selectbox", "key": "model", "label": "Modelo",
         "options": ["uniform", "bernoulli", "mixture", "function_image"]},
    ],
    "multidim": [
        {"type": "grid", "key": "n", "label": "n", "default": "1000", "cast": int},
        {"type": "grid", "key": "d", "label": "d", "default": "0.8"},
        {"type": "selectbox", "key": "family", "label": "Familia de X", "options": ["random", "star", "full"]},
        {"type": "grid", "key": "alpha", "label": "α de X (random)", "default": "0.9"},
    ],
    "bernoulli_empty": [
        {"type": "grid", "key": "n", "label": "n", "default": "1000000", "cast": int},
        {"type": "grid", "key": "d", "label": "d", "default": "0"},
    ],
    "group_cprime_sweep": [
        {"type": "grid", "key": "m", "label": "m", "default": "2", "cast": int},
        {"type": "grid", "key": "ell", "label": "ℓ", "default": "30", "cast": int},
        {"type": "grid", "key": "lambda", "label": "λ", "default": "0.5"},
        {"type": "grid", "key": "d", "label": "d", "default": "0.1 0.2 0.3 0.4"},
    ],
    "trivialization_sweep": [
        {"type": "grid", "key": "m", "label": "m", "default": "2", "cast": int},
        {"type": "grid", "key": "ell", "label": "ℓ", "default": "16", "cast": int},
        {"type": "grid", "key": "d", "label": "d", "default": "0.4 0.6"},
    ],
}


@st.cache_data(show_spinner=False)
def _run_cached(config_json: str):
    return run_experiment(ExperimentConfig.model_validate_json(config_json))


def _experiment_config(kind: str, values: dict) -> ExperimentConfig:
    data = {k: v for k, v in values.items() if k not in ("family",)}
    data["kind"] = kind
    if kind == "multidim":
        data["tuple_set"] = {"family": values["family"]}
        if values["family"] != "random":
            data.pop("alpha", None)
    return config_from_dict(data)


def experiments_tab():
    st.sidebar.title("Experimento")
    label = st.sidebar.selectbox("Tipo", list(KINDS), key="experiment_kind")
    kind = KINDS[label]
    values = sidebar_filters(CONTROLS[kind] + [
        {"type": "number", "key": "trials", "label": "Ensayos", "default": 50, "step": 10},
        {"type": "number", "key": "master_seed", "label": "Semilla", "default": settings.MASTER_SEED, "step": 1},
    ])
    if not st.sidebar.button("Ejecutar", type="primary"):
        if "summary" in st.session_state:
            display_experiment_dashboard(st.session_state.summary)
        else:
            st.info("Elija un experimento en la barra lateral y presione **Ejecutar**.")
        return
    try:
        cfg = _experiment_config(kind, values)
        with st.spinner(f"Ejecutando {cfg.kind}..."):
            st.session_state.summary = _run_cached(cfg.model_dump_json(by_alias=True))
    except (ConfigError, DomainError) as e:
        st.error(f"{e}")
        return
    display_experiment_dashboard(st.session_state.summary)


def presentation_tab():
    default = settings.PATHS["example_presentation"].read_text(encoding="utf-8") \
        if settings.PATHS["example_presentation"].exists() else "rank 2\nabab\n"
    text = st.text_area("Presentación (primera línea 'rank m', luego un relator por línea)", value=default, height=200)
    lam = st.slider("λ", min_value=0.01, max_value=0.99, value=0.5, step=0.01)
    try:
        relators = parse_presentation(text)
    except ConfigError as e:
        st.error(f"{e}")
        return
    verdict = satisfies_c_prime(relators, lam)
    cross = satisfies_c_prime(relators, lam, cross_only=True)
    pieces = max_piece_ratio(relators)
    col1, col2, col3 = st.columns(3)
    col1.metric("C'(λ)", "sí" if verdict.satisfied else "no")
    col2.metric("C'(λ) sólo cruzado", "sí" if cross.satisfied else "no")
    col3.metric("Razón máxima de pieza", f"{pieces.max_ratio:.4f}")
    if verdict.witness is not None:
        st.caption(f"Testigo: pieza {verdict.witness.piece!r}")
    rows = [
        {"relator": str(r), "|r|": len(r), "pieza máx.": p.max_piece_length, "razón": p.ratio}
        for r, p in zip(relators.relators, pieces.per_relator)
    ]
    display_dataframe(pd.DataFrame(rows), title="Piezas por relator")
    pairs = {}
    for g in range(1, relators.m + 1):
        w = find_trivializing_pair(relators, Letter(generator=g))
        pairs[str(Letter(generator=g))] = "—" if w is None else str(w)
    st.write("Pares trivializantes (w, xw):", pairs)


def thresholds_tab():
    epsilon = st.number_input("ε", min_value=0.0, max_value=0.05, value=0.0, step=0.001, format="%.4f")
    try:
        rows = [thresholds(m, epsilon).model_dump() for m in range(2, 11)]
    except DomainError as e:
        st.error(f"{e}")
        return
    display_dataframe(pd.DataFrame(rows), title="Umbrales por rango")


def main():
    """Función principal que estructura la aplicación"""
    apply_base_styles()
    header("Subconjuntos aleatorios con densidad",
           subtitle="Fórmulas de intersección y presentaciones aleatorias de grupos", centered=True)
    tab_exp, tab_pres, tab_thr = st.tabs(["Experimentos", "Presentación", "Umbrales"])
    with tab_exp:
        experiments_tab()
    with tab_pres:
        presentation_tab()
    with tab_thr:
        thresholds_tab()
    footer("Los resultados son estimaciones Monte Carlo a tamaño finito; "
           "los umbrales de aprobación son elecciones de calibración.")


if __name__ == "__main__":
    main()

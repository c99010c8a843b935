"""
Configuración centralizada del proyecto.
Maneja rutas, semillas, constantes numéricas y el formato de logging.
"""
import logging
import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

# Directorio base del proyecto
BASE_DIR = Path(__file__).parent.parent

# Directorio de datos (configurable por variable de entorno)
DATA_DIR = Path(os.environ.get("DATA_DIR", BASE_DIR / "data"))

# Directorio donde se escriben results.csv / summary.json / trials.csv
OUTPUT_DIR = Path(os.environ.get("OUTPUT_DIR", DATA_DIR / "results"))

# Rutas de archivos de ejemplo incluidos en el repositorio
PATHS = {
    "example_presentation": DATA_DIR / "presentations/example.txt",
    "intersection_config": DATA_DIR / "configs/intersection.json",
    "multidim_config": DATA_DIR / "configs/multidim_star.json",
    "multidim_random_config": DATA_DIR / "configs/multidim_random.json",
    "bernoulli_empty_config": DATA_DIR / "configs/bernoulli_empty.json",
    "group_sweep_config": DATA_DIR / "configs/group_sweep.json",
    "trivialization_config": DATA_DIR / "configs/trivialization.json",
    "star_tuple_set": DATA_DIR / "tuple_sets/star.json",
}

# Semilla maestra por defecto cuando la configuración no define una
MASTER_SEED = int(os.environ.get("MASTER_SEED", "20240501"))

# Holgura ε de la ventana de densidad
DEFAULT_EPSILON = float(os.environ.get("DEFAULT_EPSILON", "0.05"))

# Máximo de tuplas que se guardan explícitamente en memoria
EXPLICIT_TUPLE_LIMIT = int(os.environ.get("EXPLICIT_TUPLE_LIMIT", str(10**7)))

# Tamaño máximo de universo para el modo exacto (Fraction)
ORACLE_MAX_N = int(os.environ.get("ORACLE_MAX_N", "64"))

# A partir de este r las probabilidades de inclusión se calculan en log-espacio
LOG_SPACE_MIN_R = int(os.environ.get("LOG_SPACE_MIN_R", "20"))

# Tamaño de lote para el muestreo vectorizado de palabras
SAMPLER_BATCH = int(os.environ.get("SAMPLER_BATCH", "1024"))

# Umbrales de veredicto por defecto (calibración, no afirmaciones asintóticas)
PASS_THRESHOLDS = {
    "intersection": 0.95,
    "multidim": 0.95,
    "group_cprime_sweep": 0.8,
    "trivialization_sweep": 0.9,
    "low": 0.2,
}

# Modo debug (activa logging DEBUG)
DEBUG = os.environ.get("DEBUG", "0") == "1"

LOG_LEVEL = logging.DEBUG if DEBUG else logging.INFO
LOG_FORMAT = "%(levelname)s | %(message)s"


def configure_logging() -> None:
    """Configura el logging raíz como lo hacen los puntos de entrada."""
    logging.basicConfig(level=LOG_LEVEL, format=LOG_FORMAT)

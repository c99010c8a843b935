"""
Módulos utilitarios del explorador:
- styles.py: estilos CSS y colores de veredicto
- table_utils.py: formato de tablas de resultados
"""
from utils import styles, table_utils

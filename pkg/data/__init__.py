# Configuraciones de ejemplo, presentaciones y conjuntos de tuplas

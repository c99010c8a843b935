"""
Dominio de la aplicación.
Contiene subconjuntos aleatorios con densidad, fórmulas de momentos,
palabras del grupo libre, cancelación pequeña y los experimentos.
"""

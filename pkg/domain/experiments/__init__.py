"""
Experimentos Monte Carlo: intersección, multidimensional, vacío de Bernoulli
y barridos de presentaciones aleatorias. El despacho por tipo vive en
``domain.pipeline``.
"""

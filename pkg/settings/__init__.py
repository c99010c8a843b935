"""
Configuración de la aplicación.
Centraliza ajustes, constantes y parámetros de configuración.
""" 
"""
Paquete principal del explorador de experimentos.

Contiene:
- cli: Interfaz de línea de comandos
- components: Componentes de interfaz de usuario (Streamlit)
"""

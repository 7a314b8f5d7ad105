# tools/__init__.py
"""
Herramientas de verificación.
"""

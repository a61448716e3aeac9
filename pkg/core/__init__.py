# ==========================================
# core/__init__.py
# ==========================================
# Paquete con las construcciones matemáticas (una por módulo)

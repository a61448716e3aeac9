# ==========================================
# models/__init__.py
# ==========================================
# Esquemas pydantic de los formatos de archivo y del reporte

# ==========================================
# commands/__init__.py
# ==========================================
# Una familia de subcomandos por módulo; cada uno expone `router`

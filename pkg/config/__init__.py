# ==========================================
# config/__init__.py
# ==========================================
from config.settings import settings, WorkbenchSettings

__all__ = ["settings", "WorkbenchSettings"]

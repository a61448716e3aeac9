# ==========================================
# config/logging_config.py
# ==========================================
import logging
import sys
from typing import Optional

_handler: Optional[logging.StreamHandler] = None


def configure_logging(verbose: bool = False) -> None:
    """
    Configura el logging del proceso; llamadas repetidas reutilizan el
    mismo handler y lo apuntan al sys.stderr vigente

    Args:
        verbose (bool): INFO si es True, WARNING en caso contrario
    """
    global _handler
    level = logging.INFO if verbose else logging.WARNING
    root = logging.getLogger()
    if _handler is None:
        _handler = logging.StreamHandler(sys.stderr)
        _handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
        root.addHandler(_handler)
    else:
        _handler.setStream(sys.stderr)
    root.setLevel(level)

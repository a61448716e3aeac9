# ==========================================
# utils/helpers.py
# ==========================================
"""
Funciones auxiliares del workbench: formato de números, conversión a JSON
y carga de archivos
"""
import json
from dataclasses import fields, is_dataclass
from enum import Enum
from pathlib import Path
from typing import Any, List, Union

import numpy as np

from config.settings import settings
from core.errors import InvalidInput
from core.numbers import CauchyReal, Complex, Natural, Int, Rational


def format_float(value: float, digits: int = None) -> float:
    """
    Redondea un flotante a los dígitos significativos de los reportes

    Args:
        value (float): Valor a formatear
        digits (int): Dígitos significativos (por defecto settings.report_digits)

    Returns:
        float: Valor con a lo sumo `digits` cifras significativas
    """
    digits = settings.report_digits if digits is None else digits
    return float(format(float(value), f".{digits}g"))


def format_rational(value: Rational) -> str:
    """Forma "p/q" ("p" si q = 1)"""
    return str(value)


def format_complex(value: Union[Complex, complex]) -> dict:
    if isinstance(value, Complex):
        if not value.is_exact:
            raise InvalidInput("los complejos con componentes reales de Cauchy no se serializan")
        return {"re": format_rational(value.re), "im": format_rational(value.im)}
    value = complex(value)
    return {"re": format_float(value.real), "im": format_float(value.imag)}


def to_jsonable(obj: Any) -> Any:
    """
    Convierte recursivamente los tipos del workbench a tipos JSON

    Racionales como "p/q", complejos como {"re", "im"}, flotantes con los
    dígitos de reporte y arrays de numpy como listas.
    """
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return format_float(obj)
    if isinstance(obj, Rational):
        return format_rational(obj)
    if isinstance(obj, (Natural, Int)):
        return int(obj)
    if isinstance(obj, (Complex, complex, np.complexfloating)):
        return format_complex(obj)
    if isinstance(obj, CauchyReal):
        raise InvalidInput("un real de Cauchy se reporta solo mediante una aproximación")
    if isinstance(obj, np.ndarray):
        return to_jsonable(obj.tolist())
    if isinstance(obj, dict):
        return {str(to_jsonable(k)): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        if hasattr(obj, "_asdict"):
            return to_jsonable(obj._asdict())
        return [to_jsonable(item) for item in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted((to_jsonable(item) for item in obj), key=str)
    if is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in fields(obj)}
    return str(obj)


def load_json(path: Union[str, Path]) -> Any:
    """
    Lee un archivo JSON

    Raises:
        InvalidInput: si el archivo no existe o no es JSON válido
    """
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except OSError as e:
        raise InvalidInput(f"no se pudo leer {path}: {e.strerror}")
    except json.JSONDecodeError as e:
        raise InvalidInput(f"JSON mal formado en {path}: {e.msg} (línea {e.lineno})")


def load_csv(path: Union[str, Path]) -> np.ndarray:
    """Lee un CSV numérico (con o sin encabezado) como matriz de filas"""
    try:
        with open(path, "r", encoding="utf-8") as f:
            first = f.readline()
        has_header = any(c.isalpha() for c in first.replace("e", "").replace("E", ""))
        return np.loadtxt(path, delimiter=",", ndmin=2, skiprows=1 if has_header else 0)
    except OSError as e:
        raise InvalidInput(f"no se pudo leer {path}: {e.strerror}")
    except ValueError as e:
        raise InvalidInput(f"CSV mal formado en {path}: {e}")


def parse_rational_list(text: str) -> List[Rational]:
    """ "1,2" -> [1, 2] """
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise InvalidInput(f"lista vacía: {text!r}")
    return [Rational.parse(p) for p in parts]


def parse_float_list(text: str) -> List[float]:
    try:
        return [float(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise InvalidInput(f"lista de números mal formada: {text!r}")


def parse_norm_index(text: str) -> float:
    """Acepta un número >= 1 o "inf" """
    if text.strip().lower() in ("inf", "infinity", "∞"):
        return float("inf")
    try:
        return float(text)
    except ValueError:
        raise InvalidInput(f"índice de norma mal formado: {text!r}")

# ==========================================
# core/errors.py
# ==========================================
"""
Errores del workbench

Todos los errores de dominio heredan de WorkbenchError. La CLI los
convierte en código de salida 1 con un mensaje que nombra la clase.
"""
from typing import Optional


class WorkbenchError(Exception):
    """Error base de todas las construcciones"""

    def __init__(self, detail: str = "", *, context: Optional[dict] = None):
        super().__init__(detail)
        self.detail = detail
        self.context = context or {}

    @property
    def name(self) -> str:
        return type(self).__name__

    def __str__(self) -> str:
        return f"{self.name}: {self.detail}" if self.detail else self.name


class InvalidInput(WorkbenchError, ValueError):
    """Literal o archivo de entrada mal formado"""


# ==========================================
# QUOTIENT
# ==========================================

class NotAnEquivalence(WorkbenchError):
    """La relación no es reflexiva, simétrica y transitiva en el conjunto"""


# ==========================================
# NUMBERS
# ==========================================

class CapExceeded(WorkbenchError):
    """La codificación de von Neumann excede el límite permitido"""


class DivisionByZero(WorkbenchError, ZeroDivisionError):
    """Inverso o división por cero en un cuerpo exacto"""


class ModulusViolation(WorkbenchError):
    """El módulo de convergencia no cumple la cota de Cauchy en una sonda"""


class ApartnessNotWitnessed(WorkbenchError):
    """No se pudo confirmar |x| >= r con el módulo dado"""


class BadBracket(WorkbenchError):
    """El intervalo inicial de la bisección no es válido"""


# ==========================================
# GROUPS
# ==========================================

class SizeMismatch(WorkbenchError):
    """Permutaciones de distinto grado"""


class UnknownElement(WorkbenchError):
    """Elemento que no pertenece al grupo"""


class NotASubgroup(WorkbenchError):
    """El subconjunto no cumple el criterio de subgrupo"""


class NotAGroup(WorkbenchError):
    """La tabla de Cayley no cumple los axiomas de grupo"""


# ==========================================
# LINALG
# ==========================================

class DimensionMismatch(WorkbenchError):
    """Dimensiones de matrices incompatibles"""


class Singular(WorkbenchError):
    """La matriz no tiene inversa"""


class ZeroVector(WorkbenchError):
    """Se requiere un vector distinto de cero"""


# ==========================================
# METRIC
# ==========================================

class UnknownPoint(WorkbenchError):
    """Punto que no pertenece al espacio métrico"""


# ==========================================
# MEASURE
# ==========================================

class NotIncreasing(WorkbenchError):
    """La cadena de conjuntos no es creciente"""


# ==========================================
# ANALYSIS
# ==========================================

class ShiftOutOfRange(WorkbenchError):
    """El desplazamiento no deja puntos válidos en la malla"""


class GridTooCoarse(WorkbenchError):
    """La malla no tiene puntos suficientes para el esténcil"""


class ParameterError(WorkbenchError, ValueError):
    """Parámetros fuera del rango admitido"""


class MissingPartial(WorkbenchError):
    """Falta una derivada parcial en la expansión de Taylor"""


# ==========================================
# DISTRIBUTIONS
# ==========================================

class NoConvergence(WorkbenchError):
    """La cuadratura o el límite no se estabilizó"""

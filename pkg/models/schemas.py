# ==========================================
# models/schemas.py
# ==========================================
from pydantic import BaseModel, Field, RootModel, field_validator, model_validator
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy as np

from core.analysis import Grid, SampledFunction
from core.errors import InvalidInput
from core.groups import CayleyGroup
from core.linalg import ExactMatrix
from core.measure import IntervalUnion, SimpleFunction, simple_canonicalize
from core.metric import FiniteMetricSpace, from_distance_matrix
from core.numbers import Complex, Rational

RationalText = Union[str, int]
Label = Union[str, int]


def _rational(value: RationalText) -> Rational:
    return Rational.coerce(value)


# ==========================================
# MATRICES
# ==========================================

class ComplexEntry(BaseModel):
    re: RationalText = Field(..., description="Parte real como \"p/q\"")
    im: RationalText = Field("0", description="Parte imaginaria como \"p/q\"")

    def to_complex(self) -> Complex:
        return Complex(_rational(self.re), _rational(self.im))


class MatrixInput(RootModel[List[List[Union[ComplexEntry, RationalText]]]]):
    """Matriz como arreglo de filas con entradas "p/q" o {"re","im"}"""

    @field_validator("root")
    @classmethod
    def filas_rectangulares(cls, v):
        if not v or not v[0]:
            raise ValueError("la matriz no puede ser vacía")
        if any(len(row) != len(v[0]) for row in v):
            raise ValueError("todas las filas deben tener la misma longitud")
        return v

    def to_matrix(self) -> ExactMatrix:
        rows = [[e.to_complex() if isinstance(e, ComplexEntry) else _rational(e) for e in row]
                for row in self.root]
        return ExactMatrix.from_rows(rows)


# ==========================================
# GRUPOS
# ==========================================

class CayleyTableInput(BaseModel):
    elements: List[Label] = Field(..., min_length=1, description="Etiquetas de los elementos")
    table: List[List[Label]] = Field(..., description="Tabla de Cayley por etiquetas o por índices")

    @model_validator(mode="after")
    def tabla_cuadrada(self):
        n = len(self.elements)
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise ValueError(f"la tabla debe ser {n}×{n}")
        return self

    def to_group(self) -> CayleyGroup:
        """Si todas las entradas son etiquetas se interpretan como tales; si no, como índices"""
        labels = set(self.elements)
        if all(v in labels for row in self.table for v in row):
            return CayleyGroup.from_labels(self.elements, self.table)
        if not all(isinstance(v, int) for row in self.table for v in row):
            raise InvalidInput("la tabla mezcla etiquetas desconocidas con índices")
        return CayleyGroup(self.elements, self.table)


# ==========================================
# ESPACIOS MÉTRICOS
# ==========================================

class FiniteSpaceInput(BaseModel):
    points: List[Label] = Field(..., min_length=1, description="Puntos del espacio")
    distances: List[List[RationalText]] = Field(..., description="Matriz de distancias \"p/q\"")

    def to_space(self) -> FiniteMetricSpace:
        return from_distance_matrix(self.points, self.distances)


# ==========================================
# MEDIDA
# ==========================================

class IntervalUnionInput(RootModel[List[Tuple[RationalText, RationalText]]]):
    """[["0","1"],["2","5"]]"""

    def to_union(self) -> IntervalUnion:
        return IntervalUnion(tuple((_rational(a), _rational(b)) for a, b in self.root))


class SimpleTerm(BaseModel):
    value: RationalText = Field(..., description="Valor c_k")
    support: IntervalUnionInput = Field(..., description="Soporte A_k")


class SimpleFunctionInput(RootModel[List[SimpleTerm]]):

    def to_simple(self) -> SimpleFunction:
        return simple_canonicalize([(_rational(t.value), t.support.to_union()) for t in self.root])


# ==========================================
# FUNCIONES MUESTREADAS
# ==========================================

class SampledFunctionInput(BaseModel):
    dim: int = Field(..., ge=1, description="Dimensión n")
    origin: List[float] = Field(..., description="Origen de la malla")
    spacing: float = Field(..., gt=0, description="Paso uniforme h")
    shape: List[int] = Field(..., description="Extensiones por eje (>= 2)")
    values: List[float] = Field(..., description="Valores en orden C")

    @field_validator("shape")
    @classmethod
    def extensiones_validas(cls, v):
        if any(n < 2 for n in v):
            raise ValueError("cada eje necesita al menos 2 puntos")
        return v

    @model_validator(mode="after")
    def dimensiones_coherentes(self):
        if len(self.origin) != self.dim or len(self.shape) != self.dim:
            raise ValueError("origin y shape deben tener dim componentes")
        if len(self.values) != int(np.prod(self.shape)):
            raise ValueError(f"se esperaban {int(np.prod(self.shape))} valores")
        return self

    def to_sampled(self) -> SampledFunction:
        grid = Grid(self.dim, tuple(self.origin), self.spacing, tuple(self.shape))
        return SampledFunction(grid, np.asarray(self.values, dtype=float))

    @classmethod
    def from_csv_rows(cls, rows: np.ndarray, rtol: float = 1e-9) -> "SampledFunctionInput":
        """
        Filas (x_1, ..., x_n, valor); deben formar una malla completa y uniforme

        Raises:
            InvalidInput: si las coordenadas no forman una malla completa
        """
        if rows.ndim != 2 or rows.shape[1] < 2:
            raise InvalidInput("el CSV necesita n columnas de coordenadas y una de valores")
        dim = rows.shape[1] - 1
        axes = [np.unique(rows[:, k]) for k in range(dim)]
        if any(len(a) < 2 for a in axes):
            raise InvalidInput("cada eje necesita al menos 2 puntos")
        steps = np.concatenate([np.diff(a) for a in axes])
        spacing = float(steps[0])
        if not np.allclose(steps, spacing, rtol=rtol, atol=0):
            raise InvalidInput("la malla del CSV no es uniforme")
        shape = [len(a) for a in axes]
        if rows.shape[0] != int(np.prod(shape)):
            raise InvalidInput("las coordenadas del CSV no forman una malla completa")
        values = np.full(shape, np.nan)
        index = tuple(np.searchsorted(axes[k], rows[:, k]) for k in range(dim))
        values[index] = rows[:, -1]
        if np.isnan(values).any():
            raise InvalidInput("puntos repetidos en el CSV")
        return cls(dim=dim, origin=[float(a[0]) for a in axes], spacing=spacing,
                   shape=shape, values=values.ravel().tolist())


# ==========================================
# DESARROLLOS DE TAYLOR
# ==========================================

class PartialsInput(RootModel[Dict[str, float]]):
    """{"": f(x0), "0": ∂_0 f, "0,1": ∂_0 ∂_1 f, ...}"""

    @field_validator("root")
    @classmethod
    def claves_de_indices(cls, v):
        for key in v:
            parts = [p.strip() for p in key.split(",")] if key.strip() else []
            if not all(p.isdigit() for p in parts):
                raise ValueError(f"clave de parcial mal formada: {key!r}")
        return v

    def to_partials(self) -> Dict[Tuple[int, ...], float]:
        return {tuple(int(p) for p in k.split(",") if p.strip()): v for k, v in self.root.items()}


# ==========================================
# REPORTES
# ==========================================

class ReportEnvelope(BaseModel):
    """Sobre JSON de cada comando con orden de campos fijo"""
    command: str = Field(..., description="Subcomando ejecutado")
    inputs: Dict[str, Any] = Field(default_factory=dict, description="Entradas interpretadas")
    result: Any = Field(None, description="Resultado del comando")
    diagnostics: Optional[Dict[str, Any]] = Field(default_factory=dict, description="Tolerancias, pasos y avisos")

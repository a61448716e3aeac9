# ==========================================
# config/settings.py
# ==========================================
"""
Configuración numérica del workbench

Todos los límites y tolerancias viven aquí. No se leen variables de
entorno: la CLI es puramente declarativa y los resultados deben ser
reproducibles byte a byte.
"""
from typing import Tuple
from pydantic import BaseModel, ConfigDict, Field


class WorkbenchSettings(BaseModel):
    # Números
    von_neumann_cap: int = Field(16, ge=0, description="Máximo n para la codificación de conjuntos anidados")
    probe_epsilons: Tuple[str, ...] = Field(("1", "1/10", "1/100"), description="Épsilons de sondeo del módulo de Cauchy")
    probe_offset: int = Field(7, ge=1, description="Separación j = N, k = N + offset en las sondas")
    apartness_search_limit: int = Field(1_000_000, ge=1, description="Índice máximo admitido al buscar k0")

    # Grupos
    permutation_enumeration_cap: int = Field(8, ge=1, le=10, description="Grado máximo para enumerar Pn en la CLI")

    # Análisis
    float_tolerance: float = Field(1e-9, gt=0, description="Tolerancia de identidades algebraicas en binary64")
    pair_block_elements: int = Field(1 << 22, ge=1, description="Flotantes por temporal al recorrer pares de nodos")

    # Distribuciones
    simpson_panels: int = Field(4096, ge=2, description="Paneles de Simpson sobre el soporte")
    quadrature_rtol: float = Field(1e-6, gt=0, description="Tolerancia relativa del refinamiento")
    pv_atol: float = Field(1e-8, gt=0, description="Tolerancia absoluta entre niveles del valor principal")
    pv_max_levels: int = Field(40, ge=2, description="Niveles máximos eps = 2^-j")
    derivative_step_factor: float = Field(2.0 ** -20, gt=0, description="Paso relativo al radio para derivadas numéricas")

    # Reportes
    report_digits: int = Field(12, ge=1, le=17, description="Dígitos significativos de los flotantes en reportes")

    model_config = ConfigDict(frozen=True)


settings = WorkbenchSettings()

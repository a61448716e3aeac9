# ==========================================
# core/analysis.py
# ==========================================
"""
Funciones muestreadas en mallas uniformes: diferencias finitas, módulos de
continuidad, normas Cᵐ / Hölder / Zygmund / Besov, polinomios de Taylor y
el funcional de Minkowski de un politopo.

Todo el módulo trabaja en binary64 con numpy. Los desplazamientos h son
vectores enteros de la red, de modo que las identidades de diferencias son
exactas sobre los puntos compartidos.
"""
import logging
import math
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

from config.settings import settings
from core.errors import GridTooCoarse, InvalidInput, MissingPartial, ParameterError, ShiftOutOfRange

logger = logging.getLogger(__name__)

Norm = Union[int, float]
Lattice = Union[int, Sequence[int]]

# holgura relativa al comparar radios en la red
_RADIUS_SLACK = 1e-9


def _check_p(p: Norm) -> float:
    p = float(p)
    if not (p >= 1):
        raise ParameterError(f"se requiere 1 <= p <= ∞, recibido {p}")
    return p


# ==========================================
# MALLAS Y FUNCIONES MUESTREADAS
# ==========================================

@dataclass(frozen=True)
class Grid:
    """
    Malla uniforme alineada con los ejes, al menos 2 nodos por eje

    Las mallas residuales de una diferencia finita pueden quedar con un
    solo nodo por eje (min_extent=1).
    """
    dim: int
    origin: Tuple[float, ...]
    spacing: float
    shape: Tuple[int, ...]
    min_extent: int = field(default=2, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "origin", tuple(float(v) for v in self.origin))
        object.__setattr__(self, "shape", tuple(int(v) for v in self.shape))
        if self.dim < 1 or len(self.origin) != self.dim or len(self.shape) != self.dim:
            raise InvalidInput(f"dimensión {self.dim} incompatible con origen {self.origin} y forma {self.shape}")
        if not self.spacing > 0:
            raise InvalidInput(f"el paso de malla debe ser positivo: {self.spacing}")
        if any(n < self.min_extent for n in self.shape):
            raise InvalidInput(
                f"extensiones inválidas {self.shape}: cada eje necesita al menos {self.min_extent} nodos"
            )

    @property
    def size(self) -> int:
        return int(np.prod(self.shape))

    @property
    def cell_volume(self) -> float:
        return self.spacing ** self.dim

    def axes(self) -> List[np.ndarray]:
        return [o + self.spacing * np.arange(n) for o, n in zip(self.origin, self.shape)]

    def mesh(self) -> List[np.ndarray]:
        return np.meshgrid(*self.axes(), indexing="ij")

    def points(self) -> np.ndarray:
        """Coordenadas de todos los nodos, forma (N, dim) en orden C"""
        return np.stack([m.ravel() for m in self.mesh()], axis=1)


@dataclass(frozen=True, eq=False)
class SampledFunction:
    grid: Grid
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values)
        if values.size != self.grid.size:
            raise InvalidInput(f"se esperaban {self.grid.size} valores, hay {values.size}")
        values = values.reshape(self.grid.shape)
        if not np.all(np.isfinite(values)):
            raise InvalidInput("los valores muestreados deben ser finitos")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_callable(cls, fn: Callable[..., np.ndarray], origin: Sequence[float], spacing: float,
                      shape: Sequence[int]) -> "SampledFunction":
        """
        Muestrea fn sobre la malla; fn recibe una matriz de coordenadas por
        eje (meshgrid con indexing="ij")

        Example:
            SampledFunction.from_callable(np.sin, (0.0,), 2 * np.pi / 1000, (1001,))
        """
        grid = Grid(len(shape), tuple(origin), spacing, tuple(shape))
        raw = np.asarray(fn(*grid.mesh()))
        return cls(grid, np.broadcast_to(raw, grid.shape).copy())

    def with_values(self, values: np.ndarray) -> "SampledFunction":
        return SampledFunction(self.grid, values)


# ==========================================
# DIFERENCIAS FINITAS
# ==========================================

def _as_lattice(h: Lattice, dim: int) -> Tuple[int, ...]:
    steps = (h,) if isinstance(h, (int, np.integer)) else tuple(h)
    if len(steps) != dim:
        raise ParameterError(f"desplazamiento {steps} para una malla de dimensión {dim}")
    if any(int(s) != s for s in steps):
        raise ParameterError(f"el desplazamiento debe ser un vector entero de la red: {steps}")
    return tuple(int(s) for s in steps)


def _delta(f: SampledFunction, h: Tuple[int, ...]) -> SampledFunction:
    base, shifted, origin, shape = [], [], [], []
    for s, n, o in zip(h, f.grid.shape, f.grid.origin):
        if abs(s) >= n:
            raise ShiftOutOfRange(f"el desplazamiento {h} no deja puntos en la malla {f.grid.shape}")
        start = 0 if s >= 0 else -s
        base.append(slice(start, start + n - abs(s)))
        shifted.append(slice(start + s, start + s + n - abs(s)))
        origin.append(o + start * f.grid.spacing)
        shape.append(n - abs(s))
    values = f.values[tuple(shifted)] - f.values[tuple(base)]
    return SampledFunction(Grid(f.grid.dim, tuple(origin), f.grid.spacing, tuple(shape), min_extent=1), values)


def finite_difference(f: SampledFunction, h: Lattice, m: int = 1) -> SampledFunction:
    """
    Δᵐₕ f sobre la malla reducida en la que los m desplazamientos siguen
    dentro del dominio; Δᵐ = Δ(Δᵐ⁻¹)

    Args:
        f (SampledFunction): función muestreada
        h (Lattice): desplazamiento en pasos de malla (entero o vector entero)
        m (int): orden, m >= 1

    Raises:
        ShiftOutOfRange: si no queda ningún punto válido
    """
    if m < 1:
        raise ParameterError(f"el orden de la diferencia debe ser >= 1: {m}")
    steps = _as_lattice(h, f.grid.dim)
    result = f
    for _ in range(m):
        result = _delta(result, steps)
    return result


# ==========================================
# NORMAS
# ==========================================

def grid_lp_norm(f: SampledFunction, p: Norm) -> float:
    """(Σ |f|ᵖ hⁿ)^{1/p}; con p = ∞ devuelve max |f|"""
    p = _check_p(p)
    magnitudes = np.abs(f.values)
    if magnitudes.size == 0:
        return 0.0
    if math.isinf(p):
        return float(np.max(magnitudes))
    return float(np.sum(magnitudes ** p) * f.grid.cell_volume) ** (1.0 / p)


def seq_lp_norm(a: Sequence[complex], p: Norm) -> float:
    p = _check_p(p)
    arr = np.abs(np.asarray(a, dtype=complex if np.iscomplexobj(a) else float))
    if arr.size == 0:
        return 0.0
    if math.isinf(p):
        return float(np.max(arr))
    return float(np.sum(arr ** p)) ** (1.0 / p)


def lattice_ball(grid: Grid, t: float) -> Iterator[Tuple[int, ...]]:
    """Vectores enteros h con |h·spacing|₂ <= t, en orden lexicográfico fijo"""
    if t < 0:
        raise ParameterError(f"el radio debe ser no negativo: {t}")
    reach = int(math.floor(t / grid.spacing * (1 + _RADIUS_SLACK)))
    limit = t * (1 + _RADIUS_SLACK)
    for h in product(range(-reach, reach + 1), repeat=grid.dim):
        if grid.spacing * math.sqrt(sum(k * k for k in h)) <= limit:
            yield h


def modulus_of_continuity(f: SampledFunction, m: int, p: Norm, t: float) -> float:
    """
    ω_{m,p}(f, t) = max ‖Δᵐₕ f‖_p sobre la red con |h|₂ <= t

    h = 0 se incluye y aporta el suelo 0; los h sin puntos válidos se omiten.
    """
    best = 0.0
    for h in lattice_ball(f.grid, t):
        if not any(h):
            continue
        try:
            value = grid_lp_norm(finite_difference(f, h, m), p)
        except ShiftOutOfRange:
            continue
        best = max(best, value)
    return best


def multi_indices(n: int, order: int) -> List[Tuple[int, ...]]:
    """Todos los α ∈ ℕⁿ con |α| = order, en orden lexicográfico"""
    return [alpha for alpha in product(range(order + 1), repeat=n) if sum(alpha) == order]


def partial_derivative(f: SampledFunction, alpha: Sequence[int]) -> np.ndarray:
    """∂^α f por diferencias centrales de segundo orden (extremos unilaterales del mismo orden)"""
    if len(alpha) != f.grid.dim or any(a < 0 for a in alpha):
        raise ParameterError(f"multi-índice inválido {tuple(alpha)}")
    values = f.values
    for axis, count in enumerate(alpha):
        if count and f.grid.shape[axis] < 3:
            raise GridTooCoarse(f"el eje {axis} tiene {f.grid.shape[axis]} puntos; se necesitan 3")
        for _ in range(count):
            values = np.gradient(values, f.grid.spacing, axis=axis, edge_order=2)
    return values


def _require_resolution(f: SampledFunction, m: int) -> None:
    needed = max(3, m + 2)
    if min(f.grid.shape) < needed:
        raise GridTooCoarse(f"malla {f.grid.shape} demasiado gruesa para orden {m}; mínimo {needed} puntos por eje")


def cm_norm(f: SampledFunction, m: int) -> float:
    """Σ_{|α|<=m} ‖∂^α f‖_∞ con derivadas estimadas por diferencias centrales"""
    if m < 0:
        raise ParameterError(f"orden negativo: {m}")
    _require_resolution(f, m)
    total = 0.0
    for order in range(m + 1):
        for alpha in multi_indices(f.grid.dim, order):
            total += float(np.max(np.abs(partial_derivative(f, alpha))))
    return total


def _split_order(s: float) -> Tuple[int, float]:
    if not s > 0 or float(s).is_integer():
        raise ParameterError(f"el orden de Hölder debe ser positivo y no entero: {s}")
    whole = int(math.floor(s))
    return whole, s - whole


def holder_quotient(f: SampledFunction, s: float, block_elements: Optional[int] = None) -> float:
    """
    max |∂^α f(x) − ∂^α f(y)| / ‖x − y‖^{s} sobre pares de nodos distintos
    y |α| = [s], con exponente la parte fraccionaria de s

    Los pares se recorren por bloques de filas; cada temporal del bloque
    tiene a lo sumo block_elements flotantes (o una fila, si es mayor).
    """
    whole, frac = _split_order(s)
    _require_resolution(f, whole)
    budget = settings.pair_block_elements if block_elements is None else block_elements
    pts = f.grid.points()
    chunk = max(1, budget // (len(pts) * f.grid.dim))
    logger.debug("cociente de Hölder: %d nodos en bloques de %d filas", len(pts), chunk)
    best = 0.0
    for alpha in multi_indices(f.grid.dim, whole):
        vals = partial_derivative(f, alpha).ravel()
        for start in range(0, len(vals), chunk):
            block = slice(start, start + chunk)
            dist = np.linalg.norm(pts[block, None, :] - pts[None, :, :], axis=-1)
            diff = np.abs(vals[block, None] - vals[None, :])
            mask = dist > 0
            if np.any(mask):
                best = max(best, float(np.max(diff[mask] / dist[mask] ** frac)))
    return best


def holder_seminorm(f: SampledFunction, s: float) -> float:
    """Norma C^{[s]} más el cociente de Hölder de orden {s}"""
    whole, _ = _split_order(s)
    return cm_norm(f, whole) + holder_quotient(f, s)


def zygmund_seminorm(f: SampledFunction, m: int) -> float:
    """
    Norma C^{m−1} más max ‖Δ²ₕ ∂^α f‖_∞ / ‖h‖_∞ sobre |α| = m − 1 y los h
    de la red no nulos con 2|h_i| < extensión del eje i

    El supremo sobre h ∈ Rⁿ se trunca a la red dentro del dominio.
    """
    if m < 1:
        raise ParameterError(f"el orden de Zygmund debe ser >= 1: {m}")
    _require_resolution(f, m - 1)
    reach = [(n - 1) // 2 for n in f.grid.shape]
    best = 0.0
    for alpha in multi_indices(f.grid.dim, m - 1):
        g = f.with_values(partial_derivative(f, alpha))
        for h in product(*(range(-r, r + 1) for r in reach)):
            if not any(h):
                continue
            second = finite_difference(g, h, 2)
            size = max(abs(k) for k in h) * f.grid.spacing
            best = max(best, float(np.max(np.abs(second.values))) / size)
    return cm_norm(f, m - 1) + best


def besov_norm_mc(f: SampledFunction, s: float, p: Norm, q: Norm, m: int, t_levels: int) -> float:
    """
    ‖f‖_p + (Σ_j (t_j^{−s} ω_{m,p}(f, t_j))^q)^{1/q}, no la suma literal Σ valor^q (t_j − t_{j+1})

    Aproxima la norma L^q((0,1], dt) de t ↦ t^{−s−1/q} ω_{m,p}(f, t) en los
    niveles diádicos t_j = 2^{−j}, j = 0..t_levels−1. En cada celda
    [t_{j+1}, t_j] el peso t^{−1/q} se toma en el extremo inferior, de modo
    que el término del nivel es
    (t_j^{−s} ω(f, t_j))^q y la suma coincide con la norma de sucesión
    diádica; por eso la norma es monótona no creciente en q.
    Con q = ∞ se toma sup t_j^{−s} ω(f, t_j).

    Raises:
        ParameterError: si m <= s, s <= 0 o t_levels < 4
    """
    p, q = _check_p(p), _check_p(q)
    if not s > 0:
        raise ParameterError(f"s debe ser positivo: {s}")
    if m <= s:
        raise ParameterError(f"se requiere m > s (m={m}, s={s})")
    if t_levels < 4:
        raise ParameterError(f"se requieren al menos 4 niveles: {t_levels}")
    weighted = []
    for j in range(t_levels):
        t = 2.0 ** -j
        if t < f.grid.spacing:
            logger.debug("Nivel t=%g por debajo del paso de malla; ω = 0", t)
        weighted.append(t ** -s * modulus_of_continuity(f, m, p, t))
    levels = np.asarray(weighted)
    if math.isinf(q):
        seminorm = float(np.max(levels))
    else:
        seminorm = float(np.sum(levels ** q)) ** (1.0 / q)
    return grid_lp_norm(f, p) + seminorm


# ==========================================
# TAYLOR
# ==========================================

class TaylorEstimate(NamedTuple):
    value: float
    remainder: float


def taylor_eval_1d(derivs: Sequence[float], x0: float, x: float, m: Optional[int] = None,
                   bound: float = 0.0) -> TaylorEstimate:
    """
    Polinomio de Taylor de orden m y cota del resto M |x − x0|^{m+1} / (m+1)!

    Args:
        derivs (Sequence[float]): f(x0), f'(x0), ..., f^{(m)}(x0)
        bound (float): M con |f^{(m+1)}| <= M entre x0 y x
    """
    m = len(derivs) - 1 if m is None else m
    if m < 0:
        raise ParameterError(f"orden negativo: {m}")
    if len(derivs) < m + 1:
        raise MissingPartial(f"faltan derivadas: se dieron {len(derivs)}, se necesitan {m + 1}")
    dx = float(x) - float(x0)
    value = sum(float(derivs[k]) / math.factorial(k) * dx ** k for k in range(m + 1))
    remainder = float(bound) * abs(dx) ** (m + 1) / math.factorial(m + 1)
    return TaylorEstimate(value, remainder)


def taylor_eval_nd(partials: Mapping[Tuple[int, ...], float], x0: Sequence[float], x: Sequence[float],
                   m: int, with_factorials: bool = True) -> float:
    """
    Σ_k (1/k!) Σ_{i1..ik} ∂_{i1}⋯∂_{ik} f(x0) Π (x_{iα} − x0_{iα})

    Las claves son caminos de índices de eje (base 0); () es f(x0). Si un
    camino no está, se busca su versión ordenada (las derivadas mixtas
    conmutan). with_factorials=False evalúa la suma sin los 1/k!.

    Raises:
        MissingPartial: si falta un camino de longitud <= m
    """
    if m < 0:
        raise ParameterError(f"orden negativo: {m}")
    x0 = [float(v) for v in x0]
    dx = [float(v) - c for v, c in zip(x, x0)]
    if len(dx) != len(x0):
        raise ParameterError("x y x0 deben tener la misma dimensión")
    total = 0.0
    for k in range(m + 1):
        level = 0.0
        for path in product(range(len(x0)), repeat=k):
            key = path if path in partials else tuple(sorted(path))
            if key not in partials:
                raise MissingPartial(f"falta la derivada parcial de camino {path}")
            term = float(partials[key])
            for i in path:
                term *= dx[i]
            level += term
        total += level / math.factorial(k) if with_factorials else level
    return total


# ==========================================
# FUNCIONAL DE MINKOWSKI
# ==========================================

@dataclass(frozen=True)
class Polytope:
    """{x : ⟨a_i, x⟩ <= c_i} con todos los c_i > 0 (0 interior)"""
    halfspaces: Tuple[Tuple[Tuple[float, ...], float], ...]

    def __post_init__(self):
        cleaned = tuple((tuple(float(v) for v in a), float(c)) for a, c in self.halfspaces)
        if not cleaned:
            raise ParameterError("el politopo necesita al menos un semiespacio")
        if any(c <= 0 for _, c in cleaned):
            raise ParameterError("0 debe ser interior: todos los c_i deben ser positivos")
        if len({len(a) for a, _ in cleaned}) != 1:
            raise ParameterError("normales de dimensiones distintas")
        object.__setattr__(self, "halfspaces", cleaned)

    @property
    def dim(self) -> int:
        return len(self.halfspaces[0][0])


def box_polytope(n: int) -> Polytope:
    normals = []
    for k in range(n):
        for sign in (1.0, -1.0):
            a = [0.0] * n
            a[k] = sign
            normals.append((tuple(a), 1.0))
    return Polytope(tuple(normals))


def minkowski_functional(a: Polytope, x: Sequence[float]) -> float:
    """inf { t > 0 | x/t ∈ A } = max(0, max_i ⟨a_i, x⟩ / c_i)"""
    x = np.asarray(x, dtype=float)
    if x.shape != (a.dim,):
        raise ParameterError(f"vector de dimensión {x.size} para politopo de dimensión {a.dim}")
    ratios = [float(np.dot(normal, x)) / c for normal, c in a.halfspaces]
    return max(0.0, max(ratios))


# ==========================================
# CONTINUIDAD UNIFORME
# ==========================================

def uniform_continuity_profile(f: SampledFunction, t_levels: int) -> List[Tuple[float, float]]:
    """ω_{1,∞}(f, t_j) en t_j = 2^{−j}; los niveles por debajo del paso se descartan"""
    if t_levels < 2:
        raise ParameterError(f"se requieren al menos 2 niveles: {t_levels}")
    profile = []
    dropped = 0
    for j in range(t_levels):
        t = 2.0 ** -j
        if t < f.grid.spacing * (1 - _RADIUS_SLACK):
            dropped += 1
            continue
        profile.append((t, modulus_of_continuity(f, 1, math.inf, t)))
    if dropped:
        logger.warning("⚠️ %d niveles por debajo del paso de malla %g descartados", dropped, f.grid.spacing)
    return profile


def is_uniformly_continuous(profile: Sequence[Tuple[float, float]], threshold: float) -> bool:
    """El perfil decrece con t y su último valor queda por debajo del umbral"""
    if not profile:
        return False
    values = [w for _, w in profile]
    decreasing = all(b <= a for a, b in zip(values, values[1:]))
    return decreasing and values[-1] < threshold

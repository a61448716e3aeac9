# ==========================================
# core/metric.py
# ==========================================
"""
Espacios métricos finitos, bolas, ε-redes y la distancia en la
completación por sucesiones de Cauchy
"""
import logging
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Any, Callable, Dict, Hashable, List, Sequence

from config.settings import settings
from core.errors import InvalidInput, ModulusViolation, ParameterError, UnknownPoint
from core.numbers import Rational, RationalLike

logger = logging.getLogger(__name__)

Distance = Callable[[Any, Any], Rational]


@dataclass(frozen=True)
class FiniteMetricSpace:
    """Puntos opacos con una función de distancia"""
    points: tuple
    dist: Distance

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def require(self, point: Any) -> Any:
        if point not in self.points:
            raise UnknownPoint(f"{point!r} no pertenece al espacio")
        return point


def rational_line_space(points: Sequence[RationalLike]) -> FiniteMetricSpace:
    """Subespacio finito de Q con d(x, y) = |x − y|"""
    return FiniteMetricSpace(tuple(Rational.coerce(p) for p in points), lambda x, y: abs(x - y))


def from_distance_matrix(points: Sequence[Hashable], matrix: Sequence[Sequence[RationalLike]]) -> FiniteMetricSpace:
    """Espacio dado por su matriz de distancias (formato JSON)"""
    n = len(points)
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise InvalidInput(f"la matriz de distancias debe ser {n}×{n}")
    index: Dict[Hashable, int] = {p: i for i, p in enumerate(points)}
    if len(index) != n:
        raise InvalidInput("puntos repetidos")
    table = [[Rational.coerce(v) for v in row] for row in matrix]

    def dist(x, y):
        try:
            return table[index[x]][index[y]]
        except KeyError as e:
            raise UnknownPoint(f"{e.args[0]!r} no pertenece al espacio")

    return FiniteMetricSpace(tuple(points), dist)


def verify_metric(space: FiniteMetricSpace) -> bool:
    """
    M1–M4 en todas las ternas: d >= 0, d(x,y) = 0 <=> x = y,
    simetría y desigualdad triangular
    """
    pts = space.points
    d = space.dist
    for x, y in product(pts, repeat=2):
        dxy = d(x, y)
        if dxy < 0:
            return False
        if (dxy == 0) != (x == y):
            return False
        if dxy != d(y, x):
            return False
    for x, y, z in product(pts, repeat=3):
        if d(x, y) > d(x, z) + d(z, y):
            return False
    return True


def ball_members(space: FiniteMetricSpace, center: Any, r: RationalLike, closed: bool = False) -> List[Any]:
    """B(x, r) = { y | d(x, y) < r }; cerrada usa <="""
    space.require(center)
    r = Rational.coerce(r)
    if closed:
        return [y for y in space.points if space.dist(center, y) <= r]
    return [y for y in space.points if space.dist(center, y) < r]


def diameter(space: FiniteMetricSpace) -> Rational:
    if not space.points:
        return Rational(0)
    return max(space.dist(x, y) for x, y in product(space.points, repeat=2))


def distance_to_set(space: FiniteMetricSpace, point: Any, subset: Sequence[Any]) -> Rational:
    if not subset:
        raise ParameterError("distancia a un conjunto vacío")
    return min(space.dist(point, b) for b in subset)


def epsilon_net_greedy(space: FiniteMetricSpace, eps: RationalLike) -> List[Any]:
    """
    ε-red voraz: se toma el primer punto no cubierto y se marcan todos los
    puntos a distancia <= ε
    """
    eps = Rational.coerce(eps)
    if eps <= 0:
        raise ParameterError(f"ε debe ser positivo: {eps}")
    centers: List[Any] = []
    covered = [False] * len(space.points)
    for i, p in enumerate(space.points):
        if covered[i]:
            continue
        centers.append(p)
        for j, q in enumerate(space.points):
            if not covered[j] and space.dist(p, q) <= eps:
                covered[j] = True
    logger.debug("ε-red con %d centros para %d puntos", len(centers), len(space.points))
    return centers


# ==========================================
# COMPLETACIÓN
# ==========================================

class CauchyPoint:
    """
    Punto de la completación: sucesión del espacio base y su módulo

    Al construirlo se sondea la cota de Cauchy con las mismas sondas que
    real_from_sequence: d(x_N, x_{N+7}) <= ε para cada ε de sondeo.

    Raises:
        ModulusViolation: si alguna sonda falla
    """

    def __init__(self, term: Callable[[int], Any], modulus: Callable[[Rational], int], dist: Distance):
        self.term = term
        self.modulus = modulus
        self.dist = dist
        self._check_cauchy_bound()

    def _check_cauchy_bound(self) -> None:
        for eps_text in settings.probe_epsilons:
            eps = Rational.parse(eps_text)
            j = self.index(eps)
            k = j + settings.probe_offset
            gap = Rational.coerce(self.dist(self.term(j), self.term(k)))
            if gap > eps:
                raise ModulusViolation(
                    f"d(x_{j}, x_{k}) = {gap} > ε = {eps}",
                    context={"eps": str(eps), "j": j, "k": k},
                )

    def index(self, eps: Rational) -> int:
        n = self.modulus(eps)
        if not isinstance(n, int) or n < 0:
            raise ParameterError(f"el módulo devolvió {n!r}")
        return n


class CompletionRelation(str, Enum):
    WITHIN_TOLERANCE = "WithinTolerance"
    APART = "Apart"


def completion_distance(x: CauchyPoint, y: CauchyPoint, eps: RationalLike) -> Rational:
    """
    d(x, y) = lim d(x_k, y_k), evaluada en N = max de ambos módulos en ε/4;
    el resultado está a menos de ε del límite
    """
    eps = Rational.coerce(eps)
    if eps <= 0:
        raise ParameterError(f"ε debe ser positivo: {eps}")
    n = max(x.index(eps / 4), y.index(eps / 4))
    return Rational.coerce(x.dist(x.term(n), y.term(n)))


def completion_compare(x: CauchyPoint, y: CauchyPoint, tol: RationalLike) -> CompletionRelation:
    """APART solo cuando la distancia límite es con certeza positiva"""
    tol = Rational.coerce(tol)
    d = completion_distance(x, y, tol / 4)
    return CompletionRelation.APART if d > tol else CompletionRelation.WITHIN_TOLERANCE


def completion_distance_to_set(x: CauchyPoint, subset: Sequence[Any], eps: RationalLike) -> Rational:
    """Distancia del límite de x a un conjunto finito, con error <= ε"""
    eps = Rational.coerce(eps)
    if not subset:
        raise ParameterError("distancia a un conjunto vacío")
    n = x.index(eps / 2)
    return min(Rational.coerce(x.dist(x.term(n), b)) for b in subset)

# ==========================================
# core/quotient.py
# ==========================================
"""
Relaciones de equivalencia y espacios cociente sobre conjuntos finitos

Base de la torre numérica (pares módulo relación) y de las clases
laterales de grupos.
"""
import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Callable, Dict, Hashable, List, Sequence, Tuple

from core.errors import NotAnEquivalence

logger = logging.getLogger(__name__)

EquivalenceRelation = Callable[[Any, Any], bool]


@dataclass(frozen=True)
class Partition:
    """Clases disjuntas cuya unión es el conjunto base"""
    classes: Tuple[Tuple[Any, ...], ...]
    carrier: Tuple[Any, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def as_lists(self) -> List[List[Any]]:
        return [list(c) for c in self.classes]

    def index_of(self, x: Any) -> int:
        for i, cls in enumerate(self.classes):
            if x in cls:
                return i
        raise KeyError(x)


def _relates(rel: EquivalenceRelation, x: Any, y: Any) -> bool:
    try:
        return bool(rel(x, y))
    except Exception as e:
        # un predicado que falla se trata como "no relaciona"
        logger.debug("Predicado falló en (%r, %r): %s", x, y, e)
        return False


def verify_equivalence(carrier: Sequence[Any], rel: EquivalenceRelation) -> bool:
    """
    Comprueba reflexividad, simetría y transitividad en todas las ternas

    Args:
        carrier (Sequence): Conjunto finito
        rel (Callable): Predicado x ~ y

    Returns:
        bool: True si las tres propiedades se cumplen
    """
    items = list(carrier)
    table = {(i, j): _relates(rel, x, y)
             for (i, x), (j, y) in product(enumerate(items), repeat=2)}
    n = len(items)
    for i in range(n):
        if not table[(i, i)]:
            return False
    for i, j in product(range(n), repeat=2):
        if table[(i, j)] and not table[(j, i)]:
            return False
    for i, j, k in product(range(n), repeat=3):
        if table[(i, j)] and table[(j, k)] and not table[(i, k)]:
            return False
    return True


def partition(carrier: Sequence[Any], rel: EquivalenceRelation) -> Partition:
    """
    Construye el espacio cociente A/~ en orden de primera aparición

    Raises:
        NotAnEquivalence: si la relación no es de equivalencia en el conjunto
    """
    items = list(carrier)
    if not verify_equivalence(items, rel):
        raise NotAnEquivalence(f"la relación falla sobre un conjunto de {len(items)} elementos")

    classes: List[List[Any]] = []
    for x in items:
        for cls in classes:
            if _relates(rel, cls[0], x):
                cls.append(x)
                break
        else:
            classes.append([x])
    return Partition(tuple(tuple(c) for c in classes), tuple(items))


def class_of(x: Any, carrier: Sequence[Any], rel: EquivalenceRelation) -> List[Any]:
    """Clase [x] = { y | x ~ y } restringida al conjunto dado"""
    return [y for y in carrier if _relates(rel, x, y)]


def quotient_map(carrier: Sequence[Any], rel: EquivalenceRelation) -> Dict[Hashable, int]:
    """Proyección canónica A -> A/~ como índice de clase"""
    p = partition(carrier, rel)
    return {x: i for i, cls in enumerate(p.classes) for x in cls}


def is_function_relation(carrier: Sequence[Any], rel: EquivalenceRelation) -> bool:
    """
    Test de función: False si algún elemento se relaciona con dos
    compañeros distintos (p.ej. 1 ~ 1 y 1 ~ -1 para x² = y²)
    """
    for x in carrier:
        partners = [y for y in carrier if _relates(rel, x, y)]
        if len(partners) > 1:
            return False
    return True


def same_class_relation(p: Partition) -> EquivalenceRelation:
    """Relación "pertenecen a la misma clase" inducida por una partición"""
    index = {}
    for i, cls in enumerate(p.classes):
        for x in cls:
            index[_key(x)] = i
    return lambda x, y: index.get(_key(x)) == index.get(_key(y)) and _key(x) in index


def _key(x: Any) -> Any:
    try:
        hash(x)
        return x
    except TypeError:
        return repr(x)

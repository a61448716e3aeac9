# ==========================================
# core/groups.py
# ==========================================
"""
Grupos finitos: permutaciones Pn, tablas de Cayley, criterio de
subgrupo, clases laterales, homomorfismos y el grupo C2v.

Convención de composición: (p ∘ q)(k) = p(q(k)), primero q y luego p.
"""
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product
from typing import Any, Callable, Dict, Hashable, List, Mapping, Optional, Sequence, Tuple, Union

from core.errors import InvalidInput, NotAGroup, NotASubgroup, SizeMismatch, UnknownElement
from core.quotient import Partition

logger = logging.getLogger(__name__)


# ==========================================
# PERMUTACIONES
# ==========================================

@dataclass(frozen=True)
class Permutation:
    """Biyección de {1..n}; image[k-1] = p(k)"""
    image: Tuple[int, ...]

    def __post_init__(self):
        image = tuple(int(v) for v in self.image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise InvalidInput(f"no es una permutación de 1..{len(image)}: {image}")
        object.__setattr__(self, "image", image)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Forma textual "2 3 1" (también se aceptan comas)"""
        parts = text.replace(",", " ").split()
        try:
            return cls(tuple(int(p) for p in parts))
        except ValueError:
            raise InvalidInput(f"permutación mal formada: {text!r}")

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, k: int) -> int:
        return self.image[k - 1]

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.image)


def perm_compose(p: Permutation, q: Permutation) -> Permutation:
    """
    Composición p ∘ q, (p ∘ q)(k) = p(q(k))

    Raises:
        SizeMismatch: si los grados no coinciden
    """
    if p.n != q.n:
        raise SizeMismatch(f"grados distintos: {p.n} y {q.n}")
    return Permutation(tuple(p(q(k)) for k in range(1, p.n + 1)))


def perm_inverse(p: Permutation) -> Permutation:
    """Permutación inversa: result(p(k)) = k"""
    inverse = [0] * p.n
    for k in range(1, p.n + 1):
        inverse[p(k) - 1] = k
    return Permutation(tuple(inverse))


def sign(p: Permutation) -> int:
    """Paridad ±1 (por número de ciclos)"""
    seen = [False] * p.n
    transpositions = 0
    for start in range(p.n):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = p.image[k] - 1
            length += 1
        transpositions += length - 1
    return -1 if transpositions % 2 else 1


# ==========================================
# GRUPOS FINITOS
# ==========================================

class FiniteGroup(ABC):
    """Interfaz común para tablas de Cayley y grupos de permutaciones"""

    @property
    @abstractmethod
    def elements(self) -> Sequence[Any]:
        ...

    @property
    @abstractmethod
    def identity(self) -> Any:
        ...

    @abstractmethod
    def op(self, a: Any, b: Any) -> Any:
        ...

    @abstractmethod
    def inverse(self, a: Any) -> Any:
        ...

    @abstractmethod
    def contains(self, a: Any) -> bool:
        ...

    def order(self) -> int:
        return len(self.elements)

    def require(self, a: Any) -> Any:
        if not self.contains(a):
            raise UnknownElement(f"{a!s} no pertenece al grupo")
        return a


@dataclass(frozen=True)
class GroupTableReport:
    """Resultado de verify_group_table; verdadero si es grupo"""
    is_group: bool
    commutative: bool = False
    failure: Optional[str] = None

    def __bool__(self) -> bool:
        return self.is_group


class CayleyGroup(FiniteGroup):
    """
    Grupo dado por su tabla: table[i][j] es el índice de
    elements[i] ∘ elements[j]
    """

    def __init__(self, elements: Sequence[Hashable], table: Sequence[Sequence[int]],
                 validate: bool = True):
        self._elements = list(elements)
        self.table = [list(row) for row in table]
        self._index: Dict[Hashable, int] = {}
        for i, e in enumerate(self._elements):
            if e in self._index:
                raise InvalidInput(f"elemento repetido en la tabla: {e!r}")
            self._index[e] = i
        self.identity_index = self._find_identity()
        if validate:
            report = verify_group_table(self)
            if not report:
                raise NotAGroup(report.failure or "la tabla no define un grupo")

    @classmethod
    def from_labels(cls, elements: Sequence[Hashable], table: Sequence[Sequence[Hashable]],
                    validate: bool = True) -> "CayleyGroup":
        """Tabla escrita con etiquetas en lugar de índices"""
        index = {e: i for i, e in enumerate(elements)}
        try:
            rows = [[index[v] for v in row] for row in table]
        except KeyError as e:
            raise UnknownElement(f"etiqueta desconocida en la tabla: {e.args[0]!r}")
        return cls(elements, rows, validate=validate)

    def _in_range(self, v: Any) -> bool:
        return isinstance(v, int) and not isinstance(v, bool) and 0 <= v < len(self._elements)

    def _find_identity(self) -> Optional[int]:
        n = len(self._elements)
        if len(self.table) != n or any(len(row) != n for row in self.table):
            return None
        for e in range(n):
            if all(self.table[e][a] == a and self.table[a][e] == a for a in range(n)):
                return e
        return None

    @property
    def elements(self) -> List[Hashable]:
        return self._elements

    @property
    def identity(self) -> Hashable:
        if self.identity_index is None:
            raise NotAGroup("la tabla no tiene neutro")
        return self._elements[self.identity_index]

    def index(self, a: Hashable) -> int:
        try:
            return self._index[a]
        except (KeyError, TypeError):
            raise UnknownElement(f"{a!r} no pertenece al grupo")

    def op(self, a: Hashable, b: Hashable) -> Hashable:
        return self._elements[self.table[self.index(a)][self.index(b)]]

    def inverse(self, a: Hashable) -> Hashable:
        i = self.index(a)
        for j in range(len(self._elements)):
            if self.table[i][j] == self.identity_index and self.table[j][i] == self.identity_index:
                return self._elements[j]
        raise NotAGroup(f"{a!r} no tiene inverso")

    def contains(self, a: Any) -> bool:
        try:
            return a in self._index
        except TypeError:
            return False


class PermutationGroup(FiniteGroup):
    """Pn enumerado perezosamente en orden lexicográfico"""

    def __init__(self, n: int):
        if n < 1:
            raise InvalidInput(f"el grado debe ser positivo: {n}")
        self.n = n

    @cached_property
    def _all(self) -> List[Permutation]:
        return [Permutation(p) for p in permutations(range(1, self.n + 1))]

    @property
    def elements(self) -> List[Permutation]:
        return self._all

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.n)

    def op(self, a: Permutation, b: Permutation) -> Permutation:
        return perm_compose(a, b)

    def inverse(self, a: Permutation) -> Permutation:
        return perm_inverse(a)

    def contains(self, a: Any) -> bool:
        return isinstance(a, Permutation) and a.n == self.n

    def cayley_table(self) -> CayleyGroup:
        """Materializa la tabla de Pn (solo para n pequeño)"""
        elements = self.elements
        index = {p: i for i, p in enumerate(elements)}
        table = [[index[perm_compose(p, q)] for q in elements] for p in elements]
        return CayleyGroup(elements, table, validate=False)


def permutation_group(n: int) -> PermutationGroup:
    return PermutationGroup(n)


def cyclic_group(n: int) -> CayleyGroup:
    """Z/n con la suma módulo n"""
    return CayleyGroup(list(range(n)), [[(i + j) % n for j in range(n)] for i in range(n)])


def c2v_group() -> CayleyGroup:
    """
    Grupo de simetría de la molécula de agua: e, rotación C2 de 180°
    y las dos reflexiones σv, σv'. Es el grupo de Klein.
    """
    labels = ["e", "C2", "sigma_v", "sigma_v'"]
    # i ∘ j = i XOR j con e=0, C2=1, σv=2, σv'=3
    table = [[i ^ j for j in range(4)] for i in range(4)]
    return CayleyGroup(labels, table)


def verify_group_table(g: CayleyGroup) -> GroupTableReport:
    """
    Comprobación exhaustiva de G1–G3 y, aparte, de G4

    Returns:
        GroupTableReport: verdadero si la tabla es un grupo
    """
    n = len(g.elements)
    t = g.table
    if n == 0:
        return GroupTableReport(False, failure="conjunto vacío")
    if len(t) != n or any(len(row) != n for row in t):
        return GroupTableReport(False, failure="la tabla no es cuadrada")
    if any(not g._in_range(v) for row in t for v in row):
        return GroupTableReport(False, failure="la tabla no es cerrada")
    for a, b, c in product(range(n), repeat=3):
        if t[a][t[b][c]] != t[t[a][b]][c]:
            return GroupTableReport(False, failure=f"G1 falla en ({a}, {b}, {c})")
    e = g.identity_index
    if e is None:
        return GroupTableReport(False, failure="G2: no hay neutro")
    for a in range(n):
        if not any(t[a][b] == e and t[b][a] == e for b in range(n)):
            return GroupTableReport(False, failure=f"G3: {g.elements[a]!r} no tiene inverso")
    commutative = all(t[a][b] == t[b][a] for a, b in product(range(n), repeat=2))
    return GroupTableReport(True, commutative=commutative)


# ==========================================
# SUBGRUPOS Y CLASES LATERALES
# ==========================================

def is_subgroup(candidate: Sequence[Any], g: FiniteGroup) -> bool:
    """
    Criterio de dos condiciones: a ∘ b ∈ A y a⁻¹ ∈ A

    Raises:
        UnknownElement: si algún elemento no pertenece a g
    """
    members = [g.require(a) for a in candidate]
    if not members:
        return False
    closed = set(members)
    for a in members:
        if g.inverse(a) not in closed:
            return False
        for b in members:
            if g.op(a, b) not in closed:
                return False
    return True


def _cosets(h: Sequence[Any], g: FiniteGroup, left: bool) -> Partition:
    if not is_subgroup(h, g):
        raise NotASubgroup(f"{len(h)} elementos no forman un subgrupo")
    members = list(dict.fromkeys(h))
    covered = set()
    classes = []
    for a in g.elements:
        if a in covered:
            continue
        coset = [g.op(a, x) if left else g.op(x, a) for x in members]
        covered.update(coset)
        classes.append(tuple(coset))
    return Partition(tuple(classes), tuple(g.elements))


def left_cosets(h: Sequence[Any], g: FiniteGroup) -> Partition:
    """Clases a ∘ H distintas; forman una partición de g"""
    return _cosets(h, g, left=True)


def right_cosets(h: Sequence[Any], g: FiniteGroup) -> Partition:
    """Clases H ∘ a distintas"""
    return _cosets(h, g, left=False)


# ==========================================
# HOMOMORFISMOS
# ==========================================

ElementMap = Union[Mapping[Any, Any], Callable[[Any], Any]]


def _apply(f: ElementMap, x: Any) -> Any:
    if isinstance(f, Mapping):
        try:
            return f[x]
        except KeyError:
            raise UnknownElement(f"la aplicación no está definida en {x!s}")
    return f(x)


def is_homomorphism(f: ElementMap, g: FiniteGroup, h: FiniteGroup) -> bool:
    """f(x ∘ y) = f(x) ⋆ f(y) para todo par (comprobación exhaustiva)"""
    image = {}
    for x in g.elements:
        fx = _apply(f, x)
        h.require(fx)
        image[x] = fx
    for x, y in product(g.elements, repeat=2):
        if image[g.op(x, y)] != h.op(image[x], image[y]):
            return False
    return True


def is_isomorphism(f: ElementMap, g: FiniteGroup, h: FiniteGroup) -> bool:
    """Homomorfismo biyectivo"""
    if g.order() != h.order() or not is_homomorphism(f, g, h):
        return False
    return len({_apply(f, x) for x in g.elements}) == g.order()


def element_order(a: Any, g: FiniteGroup) -> int:
    """Menor k >= 1 con a^k = e"""
    g.require(a)
    power, k = a, 1
    while power != g.identity:
        power = g.op(power, a)
        k += 1
    return k


# ==========================================
# CUERPOS FINITOS
# ==========================================

def verify_field_tables(elements: Sequence[Hashable], add_table: Sequence[Sequence[int]],
                        mul_table: Sequence[Sequence[int]]) -> bool:
    """
    Axiomas K1–K10 sobre tablas finitas de suma y producto (por índices)

    Ejemplos: {0, 1} es el cuerpo más pequeño; Z/p con p primo.
    """
    n = len(elements)
    add, mul = add_table, mul_table
    for t in (add, mul):
        if len(t) != n or any(len(row) != n for row in t):
            return False
        if any(not (isinstance(v, int) and 0 <= v < n) for row in t for v in row):
            return False
    idx = range(n)
    # K1, K2: asociatividad; K3, K4: conmutatividad; K10: distributividad
    for a, b, c in product(idx, repeat=3):
        if add[a][add[b][c]] != add[add[a][b]][c]:
            return False
        if mul[a][mul[b][c]] != mul[mul[a][b]][c]:
            return False
        if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
            return False
    for a, b in product(idx, repeat=2):
        if add[a][b] != add[b][a] or mul[a][b] != mul[b][a]:
            return False
    # K5, K6: neutros
    zeros = [z for z in idx if all(add[z][a] == a for a in idx)]
    ones = [o for o in idx if all(mul[o][a] == a for a in idx)]
    if not zeros or not ones:
        return False
    zero, one = zeros[0], ones[0]
    # K7
    if zero == one:
        return False
    # K8, K9: opuestos e inversos
    for a in idx:
        if not any(add[a][b] == zero for b in idx):
            return False
        if a != zero and not any(mul[a][b] == one for b in idx):
            return False
    return True


def modular_field_tables(p: int) -> Tuple[List[int], List[List[int]], List[List[int]]]:
    """Tablas de Z/p (cuerpo si y solo si p es primo)"""
    elements = list(range(p))
    return (elements,
            [[(a + b) % p for b in elements] for a in elements],
            [[(a * b) % p for b in elements] for a in elements])

# ==========================================
# core/measure.py
# ==========================================
"""
Anillo de uniones finitas de intervalos [a, b) con extremos racionales,
medida de Lebesgue y de conteo, funciones simples canónicas e integral
𝓘_E(s) = Σ c_k μ(A_k ∩ E).
"""
import logging
from dataclasses import dataclass, field
from itertools import islice
from typing import Any, Dict, Iterable, List, Sequence, Tuple, Union

from core.errors import InvalidInput, NotIncreasing, ParameterError
from core.numbers import Rational, RationalLike, ZERO

logger = logging.getLogger(__name__)

Interval = Tuple[Rational, Rational]


# ==========================================
# UNIONES DE INTERVALOS
# ==========================================

def _normalize(intervals: Iterable[Tuple[RationalLike, RationalLike]]) -> Tuple[Interval, ...]:
    cleaned = []
    for a, b in intervals:
        a, b = Rational.coerce(a), Rational.coerce(b)
        if a > b:
            raise InvalidInput(f"intervalo invertido [{a}, {b})")
        if a < b:
            cleaned.append((a, b))
    cleaned.sort()
    merged: List[Interval] = []
    for a, b in cleaned:
        if merged and a <= merged[-1][1]:
            # se unen intervalos solapados o contiguos
            merged[-1] = (merged[-1][0], max(merged[-1][1], b))
        else:
            merged.append((a, b))
    return tuple(merged)


@dataclass(frozen=True)
class IntervalUnion:
    """Unión de intervalos semiabiertos disjuntos, ordenados y no contiguos"""
    intervals: Tuple[Interval, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "intervals", _normalize(self.intervals))

    @classmethod
    def of(cls, *pairs: Tuple[RationalLike, RationalLike]) -> "IntervalUnion":
        return cls(tuple(pairs))

    def is_empty(self) -> bool:
        return not self.intervals

    def contains_point(self, x: RationalLike) -> bool:
        x = Rational.coerce(x)
        return any(a <= x < b for a, b in self.intervals)

    def endpoints(self) -> List[Rational]:
        return [v for pair in self.intervals for v in pair]

    def __or__(self, other: "IntervalUnion") -> "IntervalUnion":
        return set_ops("union", self, other)

    def __and__(self, other: "IntervalUnion") -> "IntervalUnion":
        return set_ops("intersect", self, other)

    def __sub__(self, other: "IntervalUnion") -> "IntervalUnion":
        return set_ops("diff", self, other)

    def __le__(self, other: "IntervalUnion") -> bool:
        return is_subset(self, other)

    def __str__(self) -> str:
        if not self.intervals:
            return "∅"
        return " ∪ ".join(f"[{a}, {b})" for a, b in self.intervals)


EMPTY = IntervalUnion()


def set_ops(op: str, a: IntervalUnion, b: IntervalUnion) -> IntervalUnion:
    """
    Unión, intersección y diferencia; el resultado queda normalizado

    Args:
        op (str): "union", "intersect" o "diff"
    """
    if op == "union":
        return IntervalUnion(a.intervals + b.intervals)
    if op == "intersect":
        out = []
        i = j = 0
        while i < len(a.intervals) and j < len(b.intervals):
            lo = max(a.intervals[i][0], b.intervals[j][0])
            hi = min(a.intervals[i][1], b.intervals[j][1])
            if lo < hi:
                out.append((lo, hi))
            if a.intervals[i][1] < b.intervals[j][1]:
                i += 1
            else:
                j += 1
        return IntervalUnion(tuple(out))
    if op == "diff":
        out = []
        for lo, hi in a.intervals:
            start = lo
            for c, d in b.intervals:
                if d <= start or c >= hi:
                    continue
                if c > start:
                    out.append((start, c))
                start = max(start, d)
                if start >= hi:
                    break
            if start < hi:
                out.append((start, hi))
        return IntervalUnion(tuple(out))
    raise ParameterError(f"operación de conjuntos desconocida: {op}")


def is_subset(a: IntervalUnion, b: IntervalUnion) -> bool:
    return set_ops("diff", a, b).is_empty()


def contains(a: IntervalUnion, b: IntervalUnion) -> bool:
    """A ⊇ B"""
    return is_subset(b, a)


def lebesgue_measure(a: IntervalUnion) -> Rational:
    """μ(A) = Σ (b_i − a_i)"""
    total = ZERO
    for lo, hi in a.intervals:
        total = total + (hi - lo)
    return total


def box_volume(box: Sequence[Tuple[RationalLike, RationalLike]]) -> Rational:
    """|Q| = Π (b_k − a_k) para un cubo de R^n"""
    volume = Rational(1)
    for a, b in box:
        a, b = Rational.coerce(a), Rational.coerce(b)
        if a > b:
            raise InvalidInput(f"lado invertido [{a}, {b}]")
        volume = volume * (b - a)
    return volume


# ==========================================
# MEDIDA DE CONTEO
# ==========================================

class _Infinite:
    """Marcador de valor infinito en R* para la medida de conteo"""
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __gt__(self, other) -> bool:
        return other is not self

    def __ge__(self, other) -> bool:
        return True

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return other is self

    def __repr__(self) -> str:
        return "Infinite"

    def __str__(self) -> str:
        return "∞"


INFINITE = _Infinite()


def counting_measure(a: Iterable[Any], cap: int = 10_000) -> Union[int, _Infinite]:
    """
    μ(A) = #A

    Colecciones finitas se cuentan directamente; para iterables sin
    longitud se enumeran como mucho cap + 1 elementos y, si se supera el
    límite, se devuelve INFINITE.
    """
    if hasattr(a, "__len__"):
        return len(set(a))
    seen = set(islice(a, cap + 1))
    if len(seen) > cap:
        return INFINITE
    return len(seen)


# ==========================================
# FUNCIONES SIMPLES
# ==========================================

@dataclass(frozen=True)
class SimpleFunction:
    """Σ c_k χ_{A_k}; en forma canónica los valores son distintos y los soportes disjuntos"""
    terms: Tuple[Tuple[Rational, IntervalUnion], ...] = field(default=())

    def evaluate(self, x: RationalLike) -> Rational:
        x = Rational.coerce(x)
        total = ZERO
        for c, support in self.terms:
            if support.contains_point(x):
                total = total + c
        return total

    def __add__(self, other: "SimpleFunction") -> "SimpleFunction":
        return simple_canonicalize(list(self.terms) + list(other.terms))

    def scale(self, factor: RationalLike) -> "SimpleFunction":
        factor = Rational.coerce(factor)
        return simple_canonicalize([(factor * c, s) for c, s in self.terms])

    def as_dict(self) -> Dict[Rational, IntervalUnion]:
        return dict(self.terms)

    def is_canonical(self) -> bool:
        values = [c for c, _ in self.terms]
        if len(set(values)) != len(values) or any(c == 0 for c in values):
            return False
        supports = [s for _, s in self.terms]
        if any(s.is_empty() for s in supports):
            return False
        for i in range(len(supports)):
            for j in range(i + 1, len(supports)):
                if not (supports[i] & supports[j]).is_empty():
                    return False
        return True


def simple_canonicalize(terms: Sequence[Tuple[RationalLike, IntervalUnion]]) -> SimpleFunction:
    """
    Forma canónica: suma puntual en los solapamientos, agrupa valores
    iguales y elimina los términos nulos. Los términos quedan ordenados
    por valor.
    """
    pairs = [(Rational.coerce(c), s) for c, s in terms]
    cuts = sorted({v for _, s in pairs for v in s.endpoints()})
    by_value: Dict[Rational, List[Interval]] = {}
    for lo, hi in zip(cuts, cuts[1:]):
        value = ZERO
        for c, s in pairs:
            if s.contains_point(lo):
                value = value + c
        if value != 0:
            by_value.setdefault(value, []).append((lo, hi))
    return SimpleFunction(tuple((c, IntervalUnion(tuple(by_value[c]))) for c in sorted(by_value)))


def positive_part(s: SimpleFunction) -> SimpleFunction:
    return SimpleFunction(tuple((c, a) for c, a in s.terms if c > 0))


def negative_part(s: SimpleFunction) -> SimpleFunction:
    """f⁻ = max(−f, 0)"""
    return SimpleFunction(tuple((-c, a) for c, a in s.terms if c < 0))


def integrate_simple(s: SimpleFunction, e: IntervalUnion, measure: str = "lebesgue") -> Rational:
    """
    𝓘_E(s) = Σ c_k μ(A_k ∩ E); para s con signo se usa s⁺ − s⁻
    """
    if measure != "lebesgue":
        raise ParameterError(f"medida no soportada: {measure}")
    if not s.is_canonical():
        s = simple_canonicalize(s.terms)

    def nonnegative(t: SimpleFunction) -> Rational:
        total = ZERO
        for c, a in t.terms:
            total = total + c * lebesgue_measure(a & e)
        return total

    return nonnegative(positive_part(s)) - nonnegative(negative_part(s))


# ==========================================
# LÍMITE MONÓTONO
# ==========================================

@dataclass(frozen=True)
class MonotoneLimitReport:
    holds: bool
    measures: Tuple[Rational, ...]
    gap: Rational

    def __bool__(self) -> bool:
        return self.holds


def monotone_limit_check(chain: Sequence[IntervalUnion], limit: IntervalUnion,
                         tolerance: RationalLike = 0) -> MonotoneLimitReport:
    """
    Comprueba ρ(E) = lim ρ(E_k) sobre un prefijo finito de la cadena

    Con tolerancia 0 exige estabilización exacta; con tolerancia positiva
    acepta una brecha final μ(E) − μ(E_last) <= tolerancia.

    Raises:
        NotIncreasing: si algún E_k no está contenido en E_{k+1}
    """
    tolerance = Rational.coerce(tolerance)
    for k, (small, big) in enumerate(zip(chain, chain[1:])):
        if not is_subset(small, big):
            raise NotIncreasing(f"E_{k} no está contenido en E_{k + 1}")
    measures = tuple(lebesgue_measure(e) for e in chain)
    last = chain[-1] if chain else EMPTY
    gap = lebesgue_measure(limit) - lebesgue_measure(last)
    nondecreasing = all(a <= b for a, b in zip(measures, measures[1:]))
    holds = nondecreasing and is_subset(last, limit) and gap <= tolerance
    logger.debug("Cadena de %d conjuntos, brecha final %s", len(chain), gap)
    return MonotoneLimitReport(holds, measures, gap)

# ==========================================
# core/numbers.py
# ==========================================
"""
Torre numérica constructiva N -> Z -> Q -> R -> C

- Natural: magnitud de precisión arbitraria; la codificación de
  conjuntos anidados se materializa solo bajo demanda.
- Int: par (a, b) módulo (a,b) ~ (c,d) <=> a+d = c+b, normalizado con min(a,b) = 0.
- Rational: par (p, q) módulo ad = bc, normalizado con q > 0 y mcd(|p|, q) = 1.
- CauchyReal: sucesión racional más un módulo de convergencia explícito.
- Complex: pares de componentes del mismo tipo.
"""
import logging
import math
import re
from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import Callable, FrozenSet, List, Optional, Union

from config.settings import settings
from core.errors import (
    ApartnessNotWitnessed, BadBracket, CapExceeded, DivisionByZero,
    InvalidInput, ModulusViolation, ParameterError,
)

logger = logging.getLogger(__name__)


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


# ==========================================
# NATURALES
# ==========================================

@dataclass(frozen=True)
class Natural:
    """Número natural; S(n) tiene magnitud n + 1"""
    magnitude: int

    def __post_init__(self):
        if not isinstance(self.magnitude, int) or isinstance(self.magnitude, bool):
            raise InvalidInput(f"magnitud no entera: {self.magnitude!r}")
        if self.magnitude < 0:
            raise InvalidInput(f"un natural no puede ser negativo: {self.magnitude}")

    def succ(self) -> "Natural":
        return Natural(self.magnitude + 1)

    def __add__(self, other: "Natural") -> "Natural":
        return Natural(self.magnitude + other.magnitude)

    def __mul__(self, other: "Natural") -> "Natural":
        return Natural(self.magnitude * other.magnitude)

    def __le__(self, other: "Natural") -> bool:
        # a <= b  <=>  existe c con a + c = b
        return other.magnitude - self.magnitude >= 0

    def __lt__(self, other: "Natural") -> bool:
        return self <= other and self != other

    def __int__(self) -> int:
        return self.magnitude

    def __str__(self) -> str:
        return str(self.magnitude)


VonNeumannSet = FrozenSet["VonNeumannSet"]


def nat_succ(n: Natural) -> Natural:
    """Sucesor S(n)"""
    return n.succ()


def nat_arith(op: str, a: Natural, b: Natural) -> Union[Natural, bool]:
    """
    Aritmética de naturales: add, mul o le

    Args:
        op (str): "add", "mul" o "le"
        a (Natural): Primer operando
        b (Natural): Segundo operando

    Returns:
        Natural o bool según la operación
    """
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "le":
        return a <= b
    raise ParameterError(f"operación desconocida para naturales: {op}")


def von_neumann_encode(n: Natural, cap: Optional[int] = None) -> VonNeumannSet:
    """
    Codifica n como conjunto: 0 = {}, S(X) = X ∪ {X}

    Raises:
        CapExceeded: si n > cap (la codificación crece exponencialmente)
    """
    cap = settings.von_neumann_cap if cap is None else cap
    k = int(n)
    if k > cap:
        raise CapExceeded(f"n = {k} supera el límite {cap}")
    current: frozenset = frozenset()
    for _ in range(k):
        current = current | frozenset({current})
    return current


def nat_from_von_neumann(s: VonNeumannSet) -> Natural:
    """Decodifica un conjunto de von Neumann (número de miembros)"""
    return Natural(len(s))


# ==========================================
# ENTEROS
# ==========================================

@dataclass(frozen=True)
class Int:
    """Clase de equivalencia ⟦(a, b)⟧ que representa a − b"""
    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise InvalidInput("las componentes de un entero son naturales")
        m = min(self.a, self.b)
        if m:
            object.__setattr__(self, "a", self.a - m)
            object.__setattr__(self, "b", self.b - m)

    @classmethod
    def of(cls, value: int) -> "Int":
        return cls(value, 0) if value >= 0 else cls(0, -value)

    @property
    def value(self) -> int:
        return self.a - self.b

    def __add__(self, other: "Int") -> "Int":
        return Int(self.a + other.a, self.b + other.b)

    def __neg__(self) -> "Int":
        return Int(self.b, self.a)

    def __sub__(self, other: "Int") -> "Int":
        return self + (-other)

    def __mul__(self, other: "Int") -> "Int":
        a, b, c, d = self.a, self.b, other.a, other.b
        return Int(a * c + b * d, a * d + b * c)

    def compare(self, other: "Int") -> Ordering:
        # ⟦(c+b, a+d)⟧ = ⟦(n, 0)⟧ con n natural  <=>  self <= other
        left, right = other.a + self.b, self.a + other.b
        if left == right:
            return Ordering.EQUAL
        return Ordering.LESS if left > right else Ordering.GREATER

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


def int_arith(op: str, a: Int, b: Optional[Int] = None) -> Union[Int, Ordering]:
    """Aritmética de enteros por pares: add, neg, sub, mul, cmp"""
    if op == "neg":
        return -a
    if b is None:
        raise ParameterError(f"la operación {op} requiere dos operandos")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "cmp":
        return a.compare(b)
    raise ParameterError(f"operación desconocida para enteros: {op}")


# ==========================================
# RACIONALES
# ==========================================

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")
_DECIMAL_RE = re.compile(r"^\s*([+-]?)(\d*)\.(\d+)\s*$")


class Rational:
    """
    Clase ⟦(p, q)⟧ con q > 0 y mcd(|p|, q) = 1

    Se guardan los enteros ya normalizados, así la igualdad es estructural.
    """
    __slots__ = ("num", "den")

    def __init__(self, num: int = 0, den: int = 1):
        if isinstance(num, Int):
            num = num.value
        if isinstance(den, Int):
            den = den.value
        if den == 0:
            raise DivisionByZero("denominador cero")
        if den < 0:
            num, den = -num, -den
        g = math.gcd(num, den)
        object.__setattr__(self, "num", num // g)
        object.__setattr__(self, "den", den // g)

    def __setattr__(self, key, value):
        raise AttributeError("Rational es inmutable")

    # ---------- construcción ----------

    @classmethod
    def coerce(cls, value: "RationalLike") -> "Rational":
        if isinstance(value, Rational):
            return value
        if isinstance(value, bool):
            raise InvalidInput("bool no es un racional")
        if isinstance(value, int):
            return cls(value, 1)
        if isinstance(value, str):
            return cls.parse(value)
        if isinstance(value, Int):
            return cls(value.value, 1)
        # Fraction y similares
        if hasattr(value, "numerator") and hasattr(value, "denominator"):
            return cls(int(value.numerator), int(value.denominator))
        raise InvalidInput(f"no se puede convertir a racional: {value!r}")

    @classmethod
    def parse(cls, text: str) -> "Rational":
        """Acepta "p/q", "p" o decimales finitos como "2.5" """
        m = _RATIONAL_RE.match(text)
        if m:
            return cls(int(m.group(1)), int(m.group(2) or 1))
        m = _DECIMAL_RE.match(text)
        if m:
            sign, whole, frac = m.groups()
            value = cls(int(whole or "0") * 10 ** len(frac) + int(frac), 10 ** len(frac))
            return -value if sign == "-" else value
        raise InvalidInput(f"racional mal formado: {text!r}")

    @property
    def p(self) -> Int:
        return Int.of(self.num)

    @property
    def q(self) -> Int:
        return Int.of(self.den)

    # ---------- operaciones del cuerpo ----------

    def __add__(self, other):
        other = _maybe_rational(other)
        if other is None:
            return NotImplemented
        # ⟦(a,b)⟧ + ⟦(c,d)⟧ = ⟦(ad + bc, bd)⟧
        return Rational(self.num * other.den + self.den * other.num, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "Rational":
        return Rational(-self.num, self.den)

    def __sub__(self, other):
        other = _maybe_rational(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _maybe_rational(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _maybe_rational(other)
        if other is None:
            return NotImplemented
        return Rational(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "Rational":
        if self.num == 0:
            raise DivisionByZero("0 no tiene inverso en Q")
        return Rational(self.den, self.num)

    def __truediv__(self, other):
        other = _maybe_rational(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _maybe_rational(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int) -> "Rational":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return Rational(self.num ** k, self.den ** k)

    def __abs__(self) -> "Rational":
        return Rational(abs(self.num), self.den)

    def conjugate(self) -> "Rational":
        return self

    def is_zero(self) -> bool:
        return self.num == 0

    # ---------- orden ----------

    def compare(self, other: "RationalLike") -> Ordering:
        other = Rational.coerce(other)
        # ad − bc <= 0 con denominadores positivos
        diff = self.num * other.den - self.den * other.num
        if diff == 0:
            return Ordering.EQUAL
        return Ordering.LESS if diff < 0 else Ordering.GREATER

    def __eq__(self, other) -> bool:
        other = _maybe_rational(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash(self.num) if self.den == 1 else hash((self.num, self.den))

    def __lt__(self, other) -> bool:
        return self.compare(other) == Ordering.LESS

    def __le__(self, other) -> bool:
        return self.compare(other) != Ordering.GREATER

    def __gt__(self, other) -> bool:
        return self.compare(other) == Ordering.GREATER

    def __ge__(self, other) -> bool:
        return self.compare(other) != Ordering.LESS

    # ---------- conversiones ----------

    def floor(self) -> int:
        return self.num // self.den

    def ceil(self) -> int:
        return -((-self.num) // self.den)

    def __float__(self) -> float:
        return self.num / self.den

    def __bool__(self) -> bool:
        return self.num != 0

    def __str__(self) -> str:
        return str(self.num) if self.den == 1 else f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"Rational({self.num}, {self.den})"


RationalLike = Union[Rational, int, str]

ZERO = Rational(0)
ONE = Rational(1)


def _maybe_rational(value) -> Optional[Rational]:
    if isinstance(value, Rational):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Rational(value)
    return None


def rat_arith(op: str, a: Rational, b: Optional[Rational] = None) -> Union[Rational, Ordering]:
    """
    Aritmética de racionales: add, sub, mul, inv, div, cmp

    Raises:
        DivisionByZero: inv(0) o división entre 0
    """
    if op == "inv":
        return a.inverse()
    if b is None:
        raise ParameterError(f"la operación {op} requiere dos operandos")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "cmp":
        return a.compare(b)
    raise ParameterError(f"operación desconocida para racionales: {op}")


# ==========================================
# REALES DE CAUCHY
# ==========================================

Term = Callable[[int], Rational]
Modulus = Callable[[Rational], int]


class Comparison(str, Enum):
    LESS = "Less"
    GREATER = "Greater"
    INDISTINGUISHABLE = "Indistinguishable"


class CauchyReal:
    """
    Real computable: término k -> x_k y módulo ε -> N con
    |x_j − x_k| <= ε para j, k >= N
    """

    def __init__(self, term: Term, modulus: Modulus):
        self._term = term
        self._modulus = modulus

    def term(self, k: int) -> Rational:
        return Rational.coerce(self._term(k))

    def index(self, eps: RationalLike) -> int:
        eps = Rational.coerce(eps)
        if eps <= 0:
            raise ParameterError(f"ε debe ser positivo: {eps}")
        n = self._modulus(eps)
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise ModulusViolation(f"el módulo devolvió {n!r} para ε = {eps}")
        return n

    def approx(self, eps: RationalLike) -> Rational:
        return self.term(self.index(eps))

    def __add__(self, other):
        other = _maybe_real(other)
        if other is None:
            return NotImplemented
        return real_arith("add", self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _maybe_real(other)
        if other is None:
            return NotImplemented
        return real_arith("sub", self, other)

    def __rsub__(self, other):
        other = _maybe_real(other)
        if other is None:
            return NotImplemented
        return real_arith("sub", other, self)

    def __mul__(self, other):
        other = _maybe_real(other)
        if other is None:
            return NotImplemented
        return real_arith("mul", self, other)

    __rmul__ = __mul__

    def __neg__(self) -> "CauchyReal":
        return real_neg(self)

    def __repr__(self) -> str:
        return f"CauchyReal(≈{float(self.approx(Rational(1, 10 ** 6))):.6g})"


def _maybe_real(value) -> Optional[CauchyReal]:
    if isinstance(value, CauchyReal):
        return value
    r = _maybe_rational(value)
    return real_from_rational(r) if r is not None else None


def real_from_sequence(term: Term, modulus: Modulus) -> CauchyReal:
    """
    Envuelve una sucesión con su módulo y sondea la cota de Cauchy

    Las sondas (ε ∈ {1, 1/10, 1/100}, pares (N, N + 7)) son una prueba de
    humo, no una demostración.

    Raises:
        ModulusViolation: si alguna sonda falla
    """
    x = CauchyReal(term, modulus)
    for eps_text in settings.probe_epsilons:
        eps = Rational.parse(eps_text)
        n = x.index(eps)
        j, k = n, n + settings.probe_offset
        gap = abs(x.term(j) - x.term(k))
        if gap > eps:
            raise ModulusViolation(
                f"|x_{j} − x_{k}| = {gap} > ε = {eps}",
                context={"eps": str(eps), "j": j, "k": k},
            )
    return x


def real_from_rational(q: RationalLike) -> CauchyReal:
    """Inclusión Q -> R como sucesión constante"""
    q = Rational.coerce(q)
    return CauchyReal(lambda k: q, lambda eps: 0)


def real_neg(x: CauchyReal) -> CauchyReal:
    return CauchyReal(lambda k: -x.term(k), x.index)


def real_abs(x: CauchyReal) -> CauchyReal:
    # ||a| − |b|| <= |a − b|, el módulo se conserva
    return CauchyReal(lambda k: abs(x.term(k)), x.index)


def real_arith(op: str, x: CauchyReal, y: CauchyReal) -> CauchyReal:
    """
    Suma, resta y producto término a término

    El módulo del producto usa cotas Bx = |x_{Nx(1)}| + 1 y By análoga.
    """
    if op == "add":
        return CauchyReal(lambda k: x.term(k) + y.term(k),
                          lambda eps: max(x.index(eps / 2), y.index(eps / 2)))
    if op == "sub":
        return CauchyReal(lambda k: x.term(k) - y.term(k),
                          lambda eps: max(x.index(eps / 2), y.index(eps / 2)))
    if op == "mul":
        nx1, ny1 = x.index(ONE), y.index(ONE)
        bx = abs(x.term(nx1)) + 1
        by = abs(y.term(ny1)) + 1
        return CauchyReal(
            lambda k: x.term(k) * y.term(k),
            lambda eps: max(x.index(eps / (2 * by)), y.index(eps / (2 * bx)), nx1, ny1),
        )
    raise ParameterError(f"operación desconocida para reales: {op}")


def real_recip(x: CauchyReal, lower: RationalLike) -> CauchyReal:
    """
    Recíproco con testigo de separación |x| >= r

    El módulo fija k0 = N(r/4); si |x_{k0}| >= 3r/4 entonces |x_k| >= r/2
    para todo k >= k0 y la sucesión (1 / x_{k0+k}) es de Cauchy con
    módulo ε -> N(ε r² / 4) − k0.

    Raises:
        ApartnessNotWitnessed: si el testigo no se confirma
    """
    r = Rational.coerce(lower)
    if r <= 0:
        raise ParameterError(f"el testigo debe ser positivo: {r}")
    k0 = x.index(r / 4)
    if k0 > settings.apartness_search_limit:
        raise ApartnessNotWitnessed(f"k0 = {k0} excede el límite de búsqueda")
    magnitude = abs(x.term(k0))
    if magnitude < r * Rational(3, 4):
        raise ApartnessNotWitnessed(
            f"|x_{k0}| = {magnitude} < 3r/4 con r = {r}",
            context={"k0": k0},
        )
    logger.debug("Recíproco: k0 = %d, |x_k0| = %s", k0, magnitude)
    scale = r * r / 4
    return CauchyReal(
        lambda k: x.term(k0 + k).inverse(),
        lambda eps: max(0, x.index(eps * scale) - k0),
    )


def real_approx(x: CauchyReal, eps: RationalLike) -> Rational:
    """Racional q con |x − q| <= ε (q = x_{N(ε)})"""
    return x.approx(eps)


def real_compare(x: CauchyReal, y: CauchyReal, tol: RationalLike) -> Comparison:
    """Comparación de tres valores; la igualdad de reales no es decidible"""
    tol = Rational.coerce(tol)
    if tol <= 0:
        raise ParameterError(f"la tolerancia debe ser positiva: {tol}")
    ax, ay = x.approx(tol / 4), y.approx(tol / 4)
    if ax + tol / 2 < ay:
        return Comparison.LESS
    if ay + tol / 2 < ax:
        return Comparison.GREATER
    return Comparison.INDISTINGUISHABLE


class BisectionReal(CauchyReal):
    """
    Supremo construido por bisección: u_{n+1} = m_n si m_n es cota
    superior, si no l_{n+1} = m_n. El ancho u_n − l_n se reduce a la mitad
    en cada paso y da el módulo.
    """

    def __init__(self, is_upper_bound: Callable[[Rational], bool],
                 lower: Rational, upper: Rational, steps: int):
        self._predicate = is_upper_bound
        self.width = upper - lower
        self.uppers: List[Rational] = [upper]
        self.lowers: List[Rational] = [lower]
        self.steps = steps
        super().__init__(self._upper_at, self._steps_for)
        self._extend(steps)

    def _extend(self, n: int) -> None:
        while len(self.uppers) <= n:
            u, l = self.uppers[-1], self.lowers[-1]
            m = (u + l) / 2
            if self._predicate(m):
                u = m
            else:
                l = m
            self.uppers.append(u)
            self.lowers.append(l)

    def _upper_at(self, k: int) -> Rational:
        self._extend(k)
        return self.uppers[k]

    def _steps_for(self, eps: Rational) -> int:
        n = 0
        while self.width / (2 ** n) > eps:
            n += 1
        return n

    def estimate(self) -> Rational:
        return self.uppers[self.steps]


def supremum_bisect(is_upper_bound: Callable[[Rational], bool], lower: RationalLike,
                    upper: RationalLike, steps: int) -> BisectionReal:
    """
    Supremo de un conjunto descrito por su predicado de cota superior

    Args:
        is_upper_bound (Callable): Predicado monótono sobre racionales
        lower (Rational): Extremo que no es cota superior
        upper (Rational): Extremo que sí es cota superior
        steps (int): Pasos de bisección precalculados

    Raises:
        BadBracket: si el intervalo no cumple las precondiciones
    """
    lower, upper = Rational.coerce(lower), Rational.coerce(upper)
    if steps < 0:
        raise ParameterError(f"pasos negativos: {steps}")
    if not lower < upper:
        raise BadBracket(f"intervalo invertido o vacío [{lower}, {upper}]")
    if not is_upper_bound(upper):
        raise BadBracket(f"{upper} no es cota superior")
    if is_upper_bound(lower):
        raise BadBracket(f"{lower} ya es cota superior")
    logger.info("Bisección en [%s, %s] con %d pasos", lower, upper, steps)
    return BisectionReal(is_upper_bound, lower, upper, steps)


# ==========================================
# COMPLEJOS
# ==========================================

Component = Union[Rational, CauchyReal]


@dataclass(frozen=True, eq=False)
class Complex:
    """Par (re, im) con componentes del mismo tipo"""
    re: Component
    im: Component = ZERO

    def __post_init__(self):
        re, im = self.re, self.im
        if not isinstance(re, CauchyReal):
            re = Rational.coerce(re)
        if not isinstance(im, CauchyReal):
            im = Rational.coerce(im)
        if isinstance(re, CauchyReal) != isinstance(im, CauchyReal):
            # se promueve la componente racional
            re = real_from_rational(re) if isinstance(re, Rational) else re
            im = real_from_rational(im) if isinstance(im, Rational) else im
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    @property
    def is_exact(self) -> bool:
        return isinstance(self.re, Rational)

    @classmethod
    def coerce(cls, value) -> "Complex":
        if isinstance(value, Complex):
            return value
        if isinstance(value, CauchyReal):
            return cls(value, real_from_rational(ZERO))
        return cls(Rational.coerce(value), ZERO)

    def __add__(self, other):
        other = _maybe_complex(other)
        if other is None:
            return NotImplemented
        return Complex(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "Complex":
        return Complex(-self.re, -self.im)

    def __sub__(self, other):
        other = _maybe_complex(other)
        if other is None:
            return NotImplemented
        return Complex(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _maybe_complex(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _maybe_complex(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        # (a,b)·(c,d) = (ac − bd, ad + bc)
        return Complex(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def conjugate(self) -> "Complex":
        return Complex(self.re, -self.im)

    def abs_sq(self) -> Component:
        return self.re * self.re + self.im * self.im

    def inverse(self, lower: Optional[RationalLike] = None) -> "Complex":
        """(c, −d) / (c² + d²); en el tipo real requiere testigo para c² + d²"""
        n = self.abs_sq()
        if self.is_exact:
            if n.is_zero():
                raise DivisionByZero("0 no tiene inverso en C")
            inv = n.inverse()
        else:
            if lower is None:
                raise ApartnessNotWitnessed("se requiere un testigo para |z|²")
            inv = real_recip(n, lower)
        return Complex(self.re * inv, -(self.im * inv))

    def __truediv__(self, other):
        other = _maybe_complex(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def is_zero(self) -> bool:
        if not self.is_exact:
            raise ParameterError("la igualdad con cero no es decidible para reales")
        return self.re.is_zero() and self.im.is_zero()

    def __eq__(self, other) -> bool:
        other = _maybe_complex(other)
        if other is None or not (self.is_exact and other.is_exact):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        if not self.is_exact:
            return id(self)
        return hash(self.re) if self.im.is_zero() else hash((self.re, self.im))

    def __str__(self) -> str:
        if not self.is_exact:
            return repr(self)
        return f"({self.re}, {self.im})"


I = Complex(ZERO, ONE)


def _maybe_complex(value) -> Optional[Complex]:
    if isinstance(value, Complex):
        return value
    if isinstance(value, (Rational, CauchyReal)) or (isinstance(value, int) and not isinstance(value, bool)):
        return Complex.coerce(value)
    return None


def complex_abs_sq(z: Complex) -> Component:
    return z.abs_sq()


def complex_arith(op: str, z: Complex, w: Optional[Complex] = None,
                  lower: Optional[RationalLike] = None) -> Complex:
    """
    Aritmética compleja: add, sub, mul, conj, inv, div

    Args:
        lower: testigo de separación para inv/div en el tipo real
    """
    if op == "conj":
        return z.conjugate()
    if op == "inv":
        return z.inverse(lower)
    if w is None:
        raise ParameterError(f"la operación {op} requiere dos operandos")
    if op == "add":
        return z + w
    if op == "sub":
        return z - w
    if op == "mul":
        return z * w
    if op == "div":
        return z * w.inverse(lower)
    raise ParameterError(f"operación desconocida para complejos: {op}")

# ==========================================
# core/distributions.py
# ==========================================
"""
Funciones test de soporte compacto en R y funcionales sobre ellas: delta de
Dirac, valor principal de Cauchy, distribuciones regulares por cuadratura,
derivadas distribucionales, la acción de dilatación-traslación y una
transformada de Fourier por cuadratura.

Solo se trata el caso unidimensional.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Tuple

import numpy as np
from scipy.integrate import simpson, trapezoid

from config.settings import settings
from core.analysis import SampledFunction
from core.errors import InvalidInput, NoConvergence, ParameterError
from core.numbers import Rational, RationalLike

logger = logging.getLogger(__name__)

Evaluator = Callable[[np.ndarray], np.ndarray]


def _vectorized(fn: Evaluator, x):
    arr = np.asarray(x, dtype=float)
    out = np.asarray(fn(arr), dtype=float)
    out = np.broadcast_to(out, arr.shape)
    return float(out) if out.ndim == 0 else out.copy()


# ==========================================
# FUNCIONES TEST
# ==========================================

@dataclass(frozen=True)
class TestFunction:
    """
    Función test: evaluador vectorizado que vale 0 fuera de [a, b]

    derivative es un evaluador exacto de la primera derivada, si se conoce.
    """
    __test__ = False

    evaluator: Evaluator
    support: Tuple[float, float]
    smooth: bool = True
    derivative: Optional[Evaluator] = field(default=None, compare=False)

    def __post_init__(self):
        a, b = (float(v) for v in self.support)
        if not a <= b:
            raise InvalidInput(f"soporte invertido [{a}, {b}]")
        object.__setattr__(self, "support", (a, b))

    @property
    def radius(self) -> float:
        return (self.support[1] - self.support[0]) / 2

    def _masked(self, fn: Evaluator) -> Evaluator:
        a, b = self.support

        def masked(x: np.ndarray) -> np.ndarray:
            inside = (x >= a) & (x <= b)
            out = np.zeros_like(x, dtype=float)
            if np.any(inside):
                out[inside] = fn(x[inside])
            return out

        return masked

    def __call__(self, x):
        return _vectorized(self._masked(self.evaluator), x)

    def __add__(self, other: "TestFunction") -> "TestFunction":
        support = (min(self.support[0], other.support[0]), max(self.support[1], other.support[1]))
        derivative = None
        if self.derivative is not None and other.derivative is not None:
            derivative = lambda x: self.derivative_at(x) + other.derivative_at(x)
        return TestFunction(lambda x: self(x) + other(x), support, self.smooth and other.smooth, derivative)

    def scale(self, c: float) -> "TestFunction":
        derivative = None if self.derivative is None else (lambda x: c * self.derivative_at(x))
        return TestFunction(lambda x: c * self(x), self.support, self.smooth, derivative)

    def derivative_at(self, x):
        if self.derivative is None:
            raise ParameterError("la función test no tiene derivada exacta")
        return _vectorized(self._masked(self.derivative), x)

    def differentiate(self, order: int, step_factor: Optional[float] = None) -> "TestFunction":
        """
        φ^{(order)}: exacta para el primer orden si hay evaluador de derivada;
        el resto por diferencias centrales con paso step_factor^{1/k}·radio
        """
        if order < 0:
            raise ParameterError(f"orden negativo: {order}")
        if order == 0:
            return self
        base, k = (self.derivative_at, order - 1) if self.derivative is not None else (self, order)
        if k == 0:
            return TestFunction(self.derivative, self.support, self.smooth)
        factor = settings.derivative_step_factor if step_factor is None else step_factor
        h = self.radius * factor ** (1.0 / k)
        coeffs = [(-1) ** j * math.comb(k, j) for j in range(k + 1)]
        offsets = [(k / 2 - j) * h for j in range(k + 1)]

        def central(x: np.ndarray) -> np.ndarray:
            return sum(c * base(x + o) for c, o in zip(coeffs, offsets)) / h ** k

        return TestFunction(central, self.support, self.smooth)

    def compose_affine(self, a: float, b: float) -> "TestFunction":
        """x ↦ φ((x + b)/a); el soporte pasa a a·[s0, s1] − b"""
        if a == 0:
            raise ParameterError("la dilatación requiere a ≠ 0")
        ends = sorted((a * self.support[0] - b, a * self.support[1] - b))
        derivative = None
        if self.derivative is not None:
            derivative = lambda x: self.derivative_at((x + b) / a) / a
        return TestFunction(lambda x: self((x + b) / a), (ends[0], ends[1]), self.smooth, derivative)


def bump(center: float, radius: float) -> TestFunction:
    """x ↦ exp(−1/(1−u²)) con u = (x − center)/radius en |u| < 1; 0 fuera"""
    if not radius > 0:
        raise ParameterError(f"el radio debe ser positivo: {radius}")
    center, radius = float(center), float(radius)

    def inner(x: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        u = (x - center) / radius
        inside = np.abs(u) < 1
        w = np.where(inside, 1 - u * u, 1.0)
        return u, inside, w

    def value(x: np.ndarray) -> np.ndarray:
        _, inside, w = inner(x)
        return np.where(inside, np.exp(-1 / w), 0.0)

    def first(x: np.ndarray) -> np.ndarray:
        u, inside, w = inner(x)
        return np.where(inside, np.exp(-1 / w) * (-2 * u / w ** 2) / radius, 0.0)

    return TestFunction(value, (center - radius, center + radius), True, first)


# ==========================================
# INTEGRANDOS REGULARES
# ==========================================

@dataclass(frozen=True)
class PiecewiseSmooth:
    """Función localmente integrable, suave salvo en breakpoints"""
    fn: Evaluator
    breakpoints: Tuple[float, ...] = ()

    def __call__(self, x):
        return _vectorized(self.fn, x)


def heaviside() -> PiecewiseSmooth:
    return PiecewiseSmooth(lambda x: np.where(x >= 0, 1.0, 0.0), (0.0,))


def constant(c: float) -> PiecewiseSmooth:
    return PiecewiseSmooth(lambda x: np.full_like(x, float(c), dtype=float))


# ==========================================
# CUADRATURA
# ==========================================

def _simpson(fn: Evaluator, a: float, b: float, panels: int) -> Tuple[float, float]:
    xs = np.linspace(a, b, panels + 1)
    # los extremos se evalúan por dentro: límites laterales en los saltos
    probe = xs.copy()
    probe[0], probe[-1] = np.nextafter(a, b), np.nextafter(b, a)
    ys = np.asarray(fn(probe), dtype=float)
    return float(simpson(ys, x=xs)), float(simpson(np.abs(ys), x=xs))


def integrate(fn: Evaluator, a: float, b: float, breakpoints: Sequence[float] = (),
              panels: Optional[int] = None, rtol: Optional[float] = None) -> float:
    """
    Simpson compuesto sobre [a, b], partido en los breakpoints interiores,
    con un refinamiento al doble de paneles como comprobación

    Raises:
        NoConvergence: si el refinamiento cambia el valor más de rtol
            relativo a ∫|fn|
    """
    panels = settings.simpson_panels if panels is None else panels
    rtol = settings.quadrature_rtol if rtol is None else rtol
    if b <= a:
        return 0.0
    cuts = [a] + sorted(p for p in breakpoints if a < p < b) + [b]
    coarse = fine = mass = 0.0
    for lo, hi in zip(cuts, cuts[1:]):
        c, _ = _simpson(fn, lo, hi, panels)
        f, m = _simpson(fn, lo, hi, 2 * panels)
        coarse += c
        fine += f
        mass += m
    if abs(fine - coarse) > rtol * max(abs(fine), mass):
        raise NoConvergence(f"la cuadratura no se estabiliza: {coarse!r} vs {fine!r}")
    if abs(fine - coarse) > 0.1 * rtol * max(abs(fine), mass):
        logger.warning("⚠️ Refinamiento de cuadratura cerca de la tolerancia: %g", abs(fine - coarse))
    return fine


# ==========================================
# FUNCIONALES
# ==========================================

Functional = Callable[[TestFunction], float]


def dirac_apply(phi: TestFunction) -> float:
    """δ(φ) = φ(0)"""
    return float(phi(0.0))


def pv_apply(phi: TestFunction, eps_levels: Optional[int] = None, atol: Optional[float] = None) -> float:
    """
    Valor principal lim_{ε→0+} ∫_{|x|>=ε} φ(x)/x

    Si 0 queda fuera del soporte la integral es ordinaria. En otro caso se
    integra la parte impar (φ(x) − φ(−x))/x sobre [ε_j, R] con
    ε_j = 2^{−j}·R, se extrapola linealmente en ε (Richardson) y se para
    cuando dos niveles seguidos coinciden dentro de atol.

    Raises:
        NoConvergence: si se agotan los niveles sin estabilizar
    """
    levels = settings.pv_max_levels if eps_levels is None else eps_levels
    atol = settings.pv_atol if atol is None else atol
    a, b = phi.support
    if a > 0 or b < 0:
        return integrate(lambda x: phi(x) / x, a, b)
    reach = max(abs(a), abs(b))
    if reach == 0:
        return 0.0

    def odd_part(x: np.ndarray) -> np.ndarray:
        return (phi(x) - phi(-x)) / x

    previous_raw = integrate(odd_part, reach / 2, reach)
    previous = None
    for j in range(2, levels + 1):
        raw = integrate(odd_part, reach * 2.0 ** -j, reach)
        extrapolated = 2 * raw - previous_raw
        if previous is not None and abs(extrapolated - previous) <= atol:
            logger.debug("Valor principal estable en el nivel %d", j)
            return extrapolated
        previous, previous_raw = extrapolated, raw
    raise NoConvergence(f"el valor principal no se estabiliza en {levels} niveles")


def regular_apply(f: Callable, phi: TestFunction) -> float:
    """⟨T_f, φ⟩ = ∫ f φ sobre el soporte de φ"""
    breakpoints = getattr(f, "breakpoints", ())
    a, b = phi.support
    return integrate(lambda x: _vectorized(f, x) * phi(x), a, b, breakpoints)


def distr_derivative_apply(t: Functional, order: int, phi: TestFunction) -> float:
    """⟨∂^k T, φ⟩ = (−1)^k ⟨T, φ^{(k)}⟩"""
    if order < 0:
        raise ParameterError(f"orden negativo: {order}")
    return (-1) ** order * t(phi.differentiate(order))


def dirac() -> Functional:
    return dirac_apply


def principal_value(eps_levels: Optional[int] = None) -> Functional:
    return lambda phi: pv_apply(phi, eps_levels)


def regular(f: Callable) -> Functional:
    return lambda phi: regular_apply(f, phi)


def derivative(t: Functional, order: int = 1) -> Functional:
    return lambda phi: distr_derivative_apply(t, order, phi)


# ==========================================
# DILATACIÓN Y TRASLACIÓN
# ==========================================

@dataclass(frozen=True)
class DilationTranslation:
    """Parámetros (a, b) de T ↦ T(a · − b); a ≠ 0, aritmética exacta"""
    a: Rational
    b: Rational

    def __post_init__(self):
        object.__setattr__(self, "a", Rational.coerce(self.a))
        object.__setattr__(self, "b", Rational.coerce(self.b))
        if self.a.is_zero():
            raise ParameterError("la dilatación requiere a ≠ 0")

    @classmethod
    def of(cls, a: RationalLike, b: RationalLike = 0) -> "DilationTranslation":
        return cls(Rational.coerce(a), Rational.coerce(b))

    def __str__(self) -> str:
        return f"({self.a}, {self.b})"


IDENTITY_TAU = DilationTranslation(Rational(1), Rational(0))


def tau_compose(first: DilationTranslation, second: DilationTranslation) -> DilationTranslation:
    """
    τ_first τ_second = τ_{a·c, c·b + d} con first = (a, b), second = (c, d);
    second actúa primero sobre T
    """
    return DilationTranslation(first.a * second.a, second.a * first.b + second.b)


def tau_inverse(tau: DilationTranslation) -> DilationTranslation:
    return DilationTranslation(tau.a.inverse(), -tau.b / tau.a)


def tau_apply(tau: DilationTranslation, t: Functional) -> Functional:
    """
    φ ↦ |a|⁻¹ T(φ((· + b)/a)); sobre T_f da T_{f(a·−b)}
    """
    a, b = float(tau.a), float(tau.b)
    return lambda phi: t(phi.compose_affine(a, b)) / abs(a)


# ==========================================
# FOURIER
# ==========================================

def fourier_quadrature_1d(f: SampledFunction, ys: Sequence[float]) -> np.ndarray:
    """(2π)^{−1/2} ∫ e^{−iyx} f(x) dx por trapecios en cada frecuencia y"""
    if f.grid.dim != 1:
        raise ParameterError(f"la transformada por cuadratura es unidimensional, no {f.grid.dim}-D")
    xs = f.grid.axes()[0]
    freqs = np.asarray(ys, dtype=float).reshape(-1, 1)
    kernel = np.exp(-1j * freqs * xs[None, :])
    values = trapezoid(kernel * f.values[None, :], x=xs, axis=1)
    return values / math.sqrt(2 * math.pi)

# ==========================================
# commands/catalog.py
# ==========================================
"""
Objetos con nombre que la CLI acepta en lugar de código: relaciones,
predicados de cota superior, sucesiones de Cauchy, integrandos y funciones
test. Formato "nombre" o "nombre:parámetros".
"""
import math
from typing import Callable, List, Tuple

from core.analysis import SampledFunction
from core.distributions import PiecewiseSmooth, TestFunction, bump, constant, heaviside
from core.errors import InvalidInput
from core.numbers import CauchyReal, ONE, Rational, real_from_rational, real_from_sequence, supremum_bisect
from core.quotient import EquivalenceRelation
from utils.helpers import load_csv, load_json, parse_float_list
from models.schemas import SampledFunctionInput


def _split(token: str) -> Tuple[str, str]:
    name, _, params = token.partition(":")
    return name.strip().lower(), params.strip()


def _param(params: str, token: str) -> Rational:
    if not params:
        raise InvalidInput(f"{token!r} requiere un parámetro")
    return Rational.parse(params)


# ==========================================
# RELACIONES
# ==========================================

def parse_carrier(text: str) -> List[int]:
    """ "0..11" (inclusivo) o "1,2,5" """
    if ".." in text:
        lo, _, hi = text.partition("..")
        try:
            return list(range(int(lo), int(hi) + 1))
        except ValueError:
            raise InvalidInput(f"rango mal formado: {text!r}")
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise InvalidInput(f"conjunto base mal formado: {text!r}")


def relation(token: str) -> EquivalenceRelation:
    """mod:k, eq, abs, same_sign o le (esta última no es de equivalencia)"""
    name, params = _split(token)
    if name == "mod":
        k = int(_param(params, token))
        if k == 0:
            raise InvalidInput("mod:0 no es una relación válida")
        return lambda x, y: (x - y) % k == 0
    if name == "eq":
        return lambda x, y: x == y
    if name == "abs":
        return lambda x, y: abs(x) == abs(y)
    if name == "same_sign":
        return lambda x, y: (x > 0) == (y > 0) and (x < 0) == (y < 0)
    if name == "le":
        return lambda x, y: x <= y
    raise InvalidInput(f"relación desconocida: {token!r}")


# ==========================================
# PREDICADOS DE COTA SUPERIOR
# ==========================================

def upper_bound_predicate(token: str) -> Callable[[Rational], bool]:
    """
    sq_ge:c  -> u es cota superior de {x >= 0 | x² < c}
    cube_ge:c -> u es cota superior de {x | x³ < c}
    ge:c     -> u es cota superior de {x | x < c}
    """
    name, params = _split(token)
    c = _param(params, token)
    if name == "sq_ge":
        return lambda u: u >= 0 and u * u >= c
    if name == "cube_ge":
        return lambda u: u * u * u >= c
    if name == "ge":
        return lambda u: u >= c
    raise InvalidInput(f"predicado desconocido: {token!r}")


# ==========================================
# SUCESIONES DE CAUCHY
# ==========================================

def _harmonic() -> CauchyReal:
    # |1/(j+1) − 1/(k+1)| <= 1/(N+1) para j, k >= N
    return real_from_sequence(lambda k: Rational(1, k + 1),
                              lambda eps: max(0, (ONE / eps).ceil() - 1))


def _euler() -> CauchyReal:
    partial = [Rational(1)]
    factorial = [1]

    def term(k: int) -> Rational:
        while len(partial) <= k:
            n = len(partial)
            factorial.append(factorial[-1] * n)
            partial.append(partial[-1] + Rational(1, factorial[-1]))
        return partial[k]

    def modulus(eps: Rational) -> int:
        # la cola Σ_{k>N} 1/k! está acotada por 2/(N+1)!
        n = 0
        while Rational(2, math.factorial(n + 1)) > eps:
            n += 1
        return n

    return real_from_sequence(term, modulus)


def cauchy_sequence(token: str) -> CauchyReal:
    """harmonic, e, const:c o sqrt:c"""
    name, params = _split(token)
    if name == "harmonic":
        return _harmonic()
    if name == "e":
        return _euler()
    if name == "const":
        return real_from_rational(_param(params, token))
    if name == "sqrt":
        c = _param(params, token)
        if c <= 0:
            raise InvalidInput(f"sqrt requiere c > 0: {token!r}")
        top = c if c > 1 else Rational(1)
        return supremum_bisect(upper_bound_predicate(f"sq_ge:{c}"), 0, top, 0)
    raise InvalidInput(f"sucesión desconocida: {token!r}")


# ==========================================
# DISTRIBUCIONES
# ==========================================

def testfn(token: str) -> TestFunction:
    """bump:c,r"""
    name, params = _split(token)
    if name != "bump":
        raise InvalidInput(f"función test desconocida: {token!r}")
    values = parse_float_list(params)
    if len(values) != 2:
        raise InvalidInput(f"bump requiere centro y radio: {token!r}")
    return bump(values[0], values[1])


def integrand(token: str) -> PiecewiseSmooth:
    """heaviside, const:c, x o x2"""
    name, params = _split(token)
    if name == "heaviside":
        return heaviside()
    if name == "const":
        return constant(float(_param(params, token)))
    if name == "x":
        return PiecewiseSmooth(lambda x: x)
    if name == "x2":
        return PiecewiseSmooth(lambda x: x * x)
    raise InvalidInput(f"integrando desconocido: {token!r}")


# ==========================================
# ARCHIVOS
# ==========================================

def sampled_function(path: str) -> SampledFunction:
    """JSON {dim, origin, spacing, shape, values} o CSV de malla completa"""
    if path.lower().endswith(".csv"):
        return SampledFunctionInput.from_csv_rows(load_csv(path)).to_sampled()
    return SampledFunctionInput.model_validate(load_json(path)).to_sampled()

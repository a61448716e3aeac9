# ==========================================
# core/linalg.py
# ==========================================
"""
Álgebra matricial exacta sobre Q y sobre los complejos racionales

Toda la aritmética es exacta; no hay camino en coma flotante. El pivote
de Gauss–Jordan es la primera entrada no nula de la columna.
"""
import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

from core.errors import DimensionMismatch, InvalidInput, ParameterError, Singular, ZeroVector
from core.numbers import Complex, ONE, Rational, ZERO

logger = logging.getLogger(__name__)

Scalar = Union[Rational, Complex]


def _entry(value) -> Scalar:
    if isinstance(value, Complex):
        if not value.is_exact:
            raise InvalidInput("las matrices exactas no admiten componentes reales de Cauchy")
        return value
    return Rational.coerce(value)


def _is_zero(value: Scalar) -> bool:
    return value.is_zero()


# ==========================================
# TIPOS
# ==========================================

@dataclass(frozen=True)
class ExactMatrix:
    """Matriz densa n×m en orden por filas"""
    rows: int
    cols: int
    entries: Tuple[Scalar, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise InvalidInput(f"dimensiones inválidas {self.rows}×{self.cols}")
        entries = tuple(_entry(v) for v in self.entries)
        if len(entries) != self.rows * self.cols:
            raise InvalidInput(f"se esperaban {self.rows * self.cols} entradas, hay {len(entries)}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "ExactMatrix":
        if not rows or not rows[0]:
            raise InvalidInput("matriz vacía")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise InvalidInput("las filas tienen longitudes distintas")
        return cls(len(rows), width, tuple(v for r in rows for v in r))

    @classmethod
    def column(cls, values: Sequence) -> "ExactMatrix":
        return cls(len(values), 1, tuple(values))

    def __getitem__(self, ij: Tuple[int, int]) -> Scalar:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> List[List[Scalar]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def column_values(self, j: int) -> List[Scalar]:
        return [self[i, j] for i in range(self.rows)]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_complex(self) -> bool:
        return any(isinstance(v, Complex) for v in self.entries)

    def is_zero(self) -> bool:
        return all(_is_zero(v) for v in self.entries)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        return mat_elementwise("add", self, other)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return mat_elementwise("sub", self, other)

    def __neg__(self) -> "ExactMatrix":
        return mat_elementwise("neg", self)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        return mat_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            _is_zero(a - b) for a, b in zip(self.entries, other.entries))

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))


@dataclass(frozen=True)
class UnitVector:
    """e^n_k = (δ_{j,k})_j con 1 <= k <= n"""
    n: int
    k: int

    def __post_init__(self):
        if not 1 <= self.k <= self.n:
            raise InvalidInput(f"índice {self.k} fuera de 1..{self.n}")

    def as_column(self) -> ExactMatrix:
        return ExactMatrix.column([ONE if j == self.k else ZERO for j in range(1, self.n + 1)])


@dataclass(frozen=True)
class MatrixClass:
    symmetric: bool
    hermitian: bool
    orthogonal: bool
    unitary: bool


def identity(n: int) -> ExactMatrix:
    return ExactMatrix(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))


def zeros(n: int, m: int) -> ExactMatrix:
    return ExactMatrix(n, m, (ZERO,) * (n * m))


def unit_vector(n: int, k: int) -> ExactMatrix:
    return UnitVector(n, k).as_column()


# ==========================================
# OPERACIONES
# ==========================================

def mat_elementwise(op: str, a: ExactMatrix, b=None) -> ExactMatrix:
    """
    Operaciones entrada a entrada: add, sub, neg, scale

    Raises:
        DimensionMismatch: en add/sub con dimensiones distintas
    """
    if op == "neg":
        return ExactMatrix(a.rows, a.cols, tuple(-v for v in a.entries))
    if op == "scale":
        s = _entry(b)
        return ExactMatrix(a.rows, a.cols, tuple(s * v for v in a.entries))
    if op in ("add", "sub"):
        if not isinstance(b, ExactMatrix) or a.shape != b.shape:
            raise DimensionMismatch(f"{a.shape} y {getattr(b, 'shape', None)}")
        if op == "add":
            return ExactMatrix(a.rows, a.cols, tuple(x + y for x, y in zip(a.entries, b.entries)))
        return ExactMatrix(a.rows, a.cols, tuple(x - y for x, y in zip(a.entries, b.entries)))
    raise ParameterError(f"operación desconocida: {op}")


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """AB = (Σ_k a_ik b_kj)"""
    if a.cols != b.rows:
        raise DimensionMismatch(f"{a.rows}×{a.cols} por {b.rows}×{b.cols}")
    entries = []
    for i in range(a.rows):
        for j in range(b.cols):
            total = ZERO
            for k in range(a.cols):
                total = a[i, k] * b[k, j] + total
            entries.append(total)
    return ExactMatrix(a.rows, b.cols, tuple(entries))


def mat_conjugate(op: str, a: ExactMatrix) -> ExactMatrix:
    """Traspuesta Aᵀ(i,j) = A(j,i) o adjunta A†(i,j) = A(j,i)*"""
    if op not in ("transpose", "dagger"):
        raise ParameterError(f"operación desconocida: {op}")
    entries = []
    for i in range(a.cols):
        for j in range(a.rows):
            v = a[j, i]
            entries.append(v.conjugate() if op == "dagger" else v)
    return ExactMatrix(a.cols, a.rows, tuple(entries))


def rref(a: ExactMatrix) -> Tuple[ExactMatrix, Tuple[int, ...]]:
    """
    Forma escalonada reducida por filas

    Returns:
        Tuple: (matriz reducida, columnas pivote)
    """
    m = a.to_rows()
    pivots: List[int] = []
    r = 0
    for c in range(a.cols):
        if r == a.rows:
            break
        pivot = next((i for i in range(r, a.rows) if not _is_zero(m[i][c])), None)
        if pivot is None:
            continue
        logger.debug("Pivote en fila %d, columna %d", pivot, c)
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c].inverse()
        m[r] = [v * inv for v in m[r]]
        for i in range(a.rows):
            if i != r and not _is_zero(m[i][c]):
                factor = m[i][c]
                m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return ExactMatrix.from_rows(m), tuple(pivots)


def rank(a: ExactMatrix) -> int:
    return len(rref(a)[1])


def mat_inverse(a: ExactMatrix) -> ExactMatrix:
    """
    Inversa exacta por Gauss–Jordan sobre [A | I]

    Raises:
        DimensionMismatch: si A no es cuadrada
        Singular: si A no es invertible
    """
    if not a.is_square:
        raise DimensionMismatch(f"la inversa requiere matriz cuadrada, no {a.rows}×{a.cols}")
    n = a.rows
    eye = identity(n)
    augmented = ExactMatrix.from_rows([row + eye_row for row, eye_row in zip(a.to_rows(), eye.to_rows())])
    reduced, pivots = rref(augmented)
    if pivots[:n] != tuple(range(n)):
        raise Singular(f"rango {sum(1 for p in pivots if p < n)} < {n}")
    inverse = ExactMatrix.from_rows([row[n:] for row in reduced.to_rows()])
    if mat_mul(a, inverse) != eye:
        raise Singular("la verificación A·A⁻¹ = I falló")
    return inverse


def kernel_basis(a: ExactMatrix) -> List[ExactMatrix]:
    """Base del núcleo a partir de la forma reducida; vacía si es trivial"""
    reduced, pivots = rref(a)
    free = [c for c in range(a.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * a.cols
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -reduced[r, f]
        basis.append(ExactMatrix.column(v))
    return basis


def image_basis(a: ExactMatrix) -> List[ExactMatrix]:
    """Columnas pivote de A; su número es el rango"""
    _, pivots = rref(a)
    return [ExactMatrix.column(a.column_values(c)) for c in pivots]


def inner_product(x: ExactMatrix, y: ExactMatrix) -> Scalar:
    """⟨x, y⟩ = Σ x_i* y_i para vectores columna"""
    if x.cols != 1 or y.cols != 1 or x.rows != y.rows:
        raise DimensionMismatch(f"{x.shape} y {y.shape} no son columnas compatibles")
    total = ZERO
    for u, v in zip(x.entries, y.entries):
        total = u.conjugate() * v + total
    return total


def verify_eigenpair(a: ExactMatrix, v: ExactMatrix, lam) -> bool:
    """
    Comprueba A v = λ v de forma exacta

    Raises:
        ZeroVector: si v = 0
    """
    if v.cols != 1 or v.rows != a.cols or not a.is_square:
        raise DimensionMismatch(f"{a.shape} y vector {v.shape}")
    if v.is_zero():
        raise ZeroVector("el vector propio debe ser no nulo")
    return mat_mul(a, v) == mat_elementwise("scale", v, lam)


def classify_matrix(a: ExactMatrix) -> MatrixClass:
    """Simétrica, hermítica, ortogonal, unitaria (predicados exactos)"""
    if not a.is_square:
        raise DimensionMismatch(f"la clasificación requiere matriz cuadrada, no {a.rows}×{a.cols}")
    t = mat_conjugate("transpose", a)
    d = mat_conjugate("dagger", a)
    eye = identity(a.rows)
    try:
        mat_inverse(a)
        invertible = True
    except Singular:
        invertible = False
    return MatrixClass(
        symmetric=a == t,
        hermitian=a == d,
        orthogonal=invertible and mat_mul(t, a) == eye,
        unitary=invertible and mat_mul(d, a) == eye,
    )

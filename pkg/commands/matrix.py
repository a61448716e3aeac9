# ==========================================
# commands/matrix.py
# ==========================================
from core.linalg import ExactMatrix, classify_matrix, kernel_basis, mat_elementwise, mat_inverse, mat_mul, rank
from models.schemas import MatrixInput
from utils.helpers import load_json
from utils.router import CommandOutput, CommandRouter, option

router = CommandRouter()

A = option("--a", required=True, help="Archivo JSON de la matriz A")
B = option("--b", required=True, help="Archivo JSON de la matriz B")


def _load(path: str) -> ExactMatrix:
    return MatrixInput.model_validate(load_json(path)).to_matrix()


@router.command("mul", A, B)
def multiplicar(args) -> CommandOutput:
    """Producto exacto AB"""
    a, b = _load(args.a), _load(args.b)
    return CommandOutput(inputs={"a": a.to_rows(), "b": b.to_rows()}, result=mat_mul(a, b).to_rows())


@router.command("add", A, B)
def sumar(args) -> CommandOutput:
    """Suma entrada a entrada"""
    a, b = _load(args.a), _load(args.b)
    return CommandOutput(inputs={"a": a.to_rows(), "b": b.to_rows()},
                         result=mat_elementwise("add", a, b).to_rows())


@router.command("inv", A)
def invertir(args) -> CommandOutput:
    """Inversa exacta por Gauss-Jordan"""
    a = _load(args.a)
    return CommandOutput(inputs={"a": a.to_rows()}, result=mat_inverse(a).to_rows())


@router.command("kernel", A)
def nucleo(args) -> CommandOutput:
    """Base del núcleo"""
    a = _load(args.a)
    basis = kernel_basis(a)
    return CommandOutput(
        inputs={"a": a.to_rows()},
        result=[v.column_values(0) for v in basis],
        diagnostics={"rank": rank(a), "nullity": len(basis)},
    )


@router.command("classify", A)
def clasificar(args) -> CommandOutput:
    """Simétrica, hermítica, ortogonal, unitaria"""
    a = _load(args.a)
    return CommandOutput(inputs={"a": a.to_rows()}, result=classify_matrix(a))

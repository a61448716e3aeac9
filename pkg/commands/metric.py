# ==========================================
# commands/metric.py
# ==========================================
from commands.catalog import cauchy_sequence
from core.metric import CauchyPoint, completion_compare, completion_distance, epsilon_net_greedy, verify_metric
from core.numbers import Rational
from models.schemas import FiniteSpaceInput
from utils.helpers import load_json
from utils.router import CommandOutput, CommandRouter, option

router = CommandRouter()


@router.command(
    "net",
    option("--space", required=True, help="Archivo JSON {points, distances}"),
    option("--eps", required=True, help='Radio racional "p/q"'),
)
def red(args) -> CommandOutput:
    """ε-red voraz de un espacio métrico finito"""
    space = FiniteSpaceInput.model_validate(load_json(args.space)).to_space()
    eps = Rational.parse(args.eps)
    centers = epsilon_net_greedy(space, eps)
    return CommandOutput(
        inputs={"points": list(space.points), "eps": eps},
        result=centers,
        diagnostics={"is_metric": verify_metric(space)},
    )


@router.command(
    "complete-dist",
    option("--x", required=True, help="Sucesión de Cauchy en Q: harmonic, e, const:c o sqrt:c"),
    option("--y", required=True, help="Segunda sucesión"),
    option("--eps", required=True, help='Tolerancia racional "p/q"'),
)
def distancia_completada(args) -> CommandOutput:
    """Distancia en la completación de Q entre dos sucesiones de Cauchy"""
    eps = Rational.parse(args.eps)
    x, y = cauchy_sequence(args.x), cauchy_sequence(args.y)
    dist = lambda u, v: abs(u - v)
    px, py = CauchyPoint(x.term, x.index, dist), CauchyPoint(y.term, y.index, dist)
    d = completion_distance(px, py, eps)
    return CommandOutput(
        inputs={"x": args.x, "y": args.y, "eps": eps},
        result={"distance": d, "float": float(d)},
        diagnostics={"relation": completion_compare(px, py, eps)},
    )

# ==========================================
# commands/real.py
# ==========================================
from commands.catalog import cauchy_sequence, upper_bound_predicate
from core.numbers import Rational, real_approx, supremum_bisect
from utils.helpers import parse_rational_list
from utils.router import CommandError, CommandOutput, CommandRouter, EXIT_USAGE, option

router = CommandRouter()


@router.command(
    "approx",
    option("--seq", required=True, help="harmonic, e, const:c o sqrt:c"),
    option("--eps", required=True, help='Tolerancia racional, p. ej. "1/1000"'),
)
def aproximar(args) -> CommandOutput:
    """Racional a distancia <= eps de un real de Cauchy con nombre"""
    x = cauchy_sequence(args.seq)
    eps = Rational.parse(args.eps)
    q = real_approx(x, eps)
    return CommandOutput(
        inputs={"seq": args.seq, "eps": eps},
        result={"approx": q, "float": float(q)},
        diagnostics={"index": x.index(eps)},
    )


@router.command(
    "sup",
    option("--bracket", required=True, help='"l,u": l no es cota superior, u sí'),
    option("--steps", type=int, required=True, help="Pasos de bisección"),
    option("--predicate", required=True, help="sq_ge:c, cube_ge:c o ge:c"),
)
def supremo(args) -> CommandOutput:
    """Supremo por bisección de un conjunto descrito por su predicado de cota"""
    bracket = parse_rational_list(args.bracket)
    if len(bracket) != 2:
        raise CommandError(EXIT_USAGE, "--bracket requiere exactamente dos extremos")
    s = supremum_bisect(upper_bound_predicate(args.predicate), bracket[0], bracket[1], args.steps)
    estimate = s.estimate()
    width = s.width / (2 ** args.steps)
    return CommandOutput(
        inputs={"bracket": bracket, "steps": args.steps, "predicate": args.predicate},
        result={"sup": estimate, "float": float(estimate)},
        diagnostics={"bracket_width": width, "lower": s.lowers[args.steps]},
    )

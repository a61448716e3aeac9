# ==========================================
# commands/taylor.py
# ==========================================
from core.analysis import taylor_eval_1d, taylor_eval_nd
from models.schemas import PartialsInput
from utils.helpers import load_json, parse_float_list
from utils.router import CommandError, CommandOutput, CommandRouter, EXIT_USAGE, option

router = CommandRouter()


def _partials(path: str) -> dict:
    return PartialsInput.model_validate(load_json(path)).to_partials()


@router.command(
    "",
    option("--x0", required=True, help='Punto de desarrollo ("0" o "0,0")'),
    option("--x", required=True, help="Punto de evaluación"),
    option("--m", type=int, help="Orden del polinomio"),
    option("--derivs", help='Derivadas f(x0), f\'(x0), ... en 1-D: "1,1,1"'),
    option("--bound", type=float, default=0.0, help="M con |f^(m+1)| <= M (1-D)"),
    option("--partials", help="Archivo JSON de derivadas parciales (n-D)"),
    option("--no-factorials", action="store_true", help="Evalúa la suma sin 1/k! (n-D)"),
)
def desarrollar(args) -> CommandOutput:
    """Polinomio de Taylor en 1-D (--derivs) o n-D (--partials)"""
    x0, x = parse_float_list(args.x0), parse_float_list(args.x)
    if (args.derivs is None) == (args.partials is None):
        raise CommandError(EXIT_USAGE, "indique exactamente uno de --derivs o --partials")
    if args.derivs is not None:
        if len(x0) != 1 or len(x) != 1:
            raise CommandError(EXIT_USAGE, "--derivs es unidimensional")
        derivs = parse_float_list(args.derivs)
        estimate = taylor_eval_1d(derivs, x0[0], x[0], args.m, args.bound)
        return CommandOutput(
            inputs={"derivs": derivs, "x0": x0[0], "x": x[0], "m": args.m, "bound": args.bound},
            result=estimate,
        )
    if args.m is None:
        raise CommandError(EXIT_USAGE, "--partials requiere --m")
    value = taylor_eval_nd(_partials(args.partials), x0, x, args.m, with_factorials=not args.no_factorials)
    return CommandOutput(
        inputs={"x0": x0, "x": x, "m": args.m, "with_factorials": not args.no_factorials},
        result=value,
    )

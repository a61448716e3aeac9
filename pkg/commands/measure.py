# ==========================================
# commands/measure.py
# ==========================================
from core.measure import integrate_simple, lebesgue_measure, set_ops
from models.schemas import IntervalUnionInput, SimpleFunctionInput
from utils.helpers import load_json
from utils.router import CommandError, CommandOutput, CommandRouter, EXIT_USAGE, option

router = CommandRouter()


def _union(path: str):
    return IntervalUnionInput.model_validate(load_json(path)).to_union()


def _intervals(u):
    return [[a, b] for a, b in u.intervals]


@router.command(
    "measure",
    option("--set", dest="set_path", required=True, help='Archivo JSON [["0","1"], ...]'),
    option("--with", dest="other_path", help="Segundo conjunto para --op"),
    option("--op", choices=["union", "intersect", "diff"], help="Operación previa a medir"),
)
def medir(args) -> CommandOutput:
    """Medida de Lebesgue de una unión finita de intervalos"""
    a = _union(args.set_path)
    if args.op:
        if not args.other_path:
            raise CommandError(EXIT_USAGE, "--op requiere --with")
        a = set_ops(args.op, a, _union(args.other_path))
    return CommandOutput(
        inputs={"set": args.set_path, "op": args.op},
        result={"measure": lebesgue_measure(a), "set": _intervals(a)},
    )


@router.command(
    "integrate",
    option("--simple", required=True, help='Archivo JSON [{"value", "support"}, ...]'),
    option("--over", required=True, help="Archivo JSON con el conjunto E"),
)
def integrar(args) -> CommandOutput:
    """Integral de una función simple sobre E"""
    s = SimpleFunctionInput.model_validate(load_json(args.simple)).to_simple()
    e = _union(args.over)
    return CommandOutput(
        inputs={"simple": [{"value": c, "support": _intervals(a)} for c, a in s.terms], "over": _intervals(e)},
        result=integrate_simple(s, e),
    )

# ==========================================
# commands/rat.py
# ==========================================
from core.numbers import Ordering, Rational, rat_arith
from utils.router import CommandError, CommandOutput, CommandRouter, EXIT_USAGE, option

router = CommandRouter()


@router.command(
    "eval",
    option("--op", required=True, choices=["add", "sub", "mul", "div", "inv", "cmp"]),
    option("--a", required=True, help='Racional "p/q"'),
    option("--b", help='Segundo operando "p/q"'),
)
def evaluar(args) -> CommandOutput:
    """Aritmética exacta de racionales"""
    a = Rational.parse(args.a)
    if args.op != "inv" and args.b is None:
        raise CommandError(EXIT_USAGE, f"--op {args.op} requiere --b")
    b = Rational.parse(args.b) if args.b is not None else None
    value = rat_arith(args.op, a, b)
    result = value.name if isinstance(value, Ordering) else value
    return CommandOutput(inputs={"op": args.op, "a": a, "b": b}, result=result)

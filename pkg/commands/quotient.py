# ==========================================
# commands/quotient.py
# ==========================================
from commands.catalog import parse_carrier, relation
from core.quotient import partition, verify_equivalence
from utils.router import CommandOutput, CommandRouter, option

router = CommandRouter()


@router.command(
    "",
    option("--carrier", required=True, help='Conjunto base: "0..11" o "1,2,5"'),
    option("--relation", required=True, help="mod:k, eq, abs, same_sign o le"),
)
def particionar(args) -> CommandOutput:
    """Clases de equivalencia de una relación con nombre"""
    carrier = parse_carrier(args.carrier)
    rel = relation(args.relation)
    classes = partition(carrier, rel)
    return CommandOutput(
        inputs={"carrier": carrier, "relation": args.relation},
        result={"classes": classes.as_lists(), "count": len(classes)},
        diagnostics={"is_equivalence": verify_equivalence(carrier, rel)},
    )

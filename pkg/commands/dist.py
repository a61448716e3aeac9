# ==========================================
# commands/dist.py
# ==========================================
from commands.catalog import integrand, testfn
from core.distributions import (
    DilationTranslation, derivative, dirac, principal_value, regular, tau_apply,
)
from utils.helpers import parse_rational_list
from utils.router import CommandError, CommandOutput, CommandRouter, EXIT_USAGE, option

router = CommandRouter()


@router.command(
    "apply",
    option("--functional", required=True, choices=["dirac", "pv", "regular"]),
    option("--testfn", required=True, help="bump:c,r"),
    option("--f", help="Integrando para regular: heaviside, const:c, x o x2"),
    option("--derivative", type=int, default=0, help="Orden de la derivada distribucional"),
    option("--tau", help='Dilatación-traslación "a,b"'),
)
def aplicar(args) -> CommandOutput:
    """⟨T, φ⟩ para δ, v.p. 1/x o T_f"""
    phi = testfn(args.testfn)
    if args.functional == "regular":
        if not args.f:
            raise CommandError(EXIT_USAGE, "--functional regular requiere --f")
        t = regular(integrand(args.f))
    elif args.functional == "pv":
        t = principal_value()
    else:
        t = dirac()
    if args.derivative:
        t = derivative(t, args.derivative)
    tau = None
    if args.tau:
        params = parse_rational_list(args.tau)
        if len(params) != 2:
            raise CommandError(EXIT_USAGE, "--tau requiere a,b")
        tau = DilationTranslation(params[0], params[1])
        t = tau_apply(tau, t)
    return CommandOutput(
        inputs={"functional": args.functional, "testfn": args.testfn, "f": args.f,
                "derivative": args.derivative, "tau": None if tau is None else [tau.a, tau.b]},
        result=t(phi),
        diagnostics={"support": list(phi.support)},
    )

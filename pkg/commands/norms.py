# ==========================================
# commands/norms.py
# ==========================================
from commands.catalog import sampled_function
from core.analysis import (
    besov_norm_mc, cm_norm, grid_lp_norm, holder_seminorm, modulus_of_continuity, zygmund_seminorm,
)
from utils.helpers import parse_norm_index
from utils.router import CommandOutput, CommandRouter, option

router = CommandRouter()

F = option("--f", required=True, help="Función muestreada: JSON {dim, origin, spacing, shape, values} o CSV")


def _grid_info(f) -> dict:
    return {"dim": f.grid.dim, "shape": list(f.grid.shape), "spacing": f.grid.spacing}


@router.command("lp", F, option("--p", default="2", help='1 <= p o "inf"'))
def norma_lp(args) -> CommandOutput:
    """Norma Lᵖ por suma de Riemann"""
    f = sampled_function(args.f)
    p = parse_norm_index(args.p)
    return CommandOutput(inputs={"f": args.f, "p": args.p}, result=grid_lp_norm(f, p), diagnostics=_grid_info(f))


@router.command("cm", F, option("--m", type=int, required=True))
def norma_cm(args) -> CommandOutput:
    """Σ_{|α|<=m} ‖∂^α f‖_∞"""
    f = sampled_function(args.f)
    return CommandOutput(inputs={"f": args.f, "m": args.m}, result=cm_norm(f, args.m), diagnostics=_grid_info(f))


@router.command("holder", F, option("--s", type=float, required=True, help="Orden no entero"))
def norma_holder(args) -> CommandOutput:
    """Norma de Hölder de orden s"""
    f = sampled_function(args.f)
    return CommandOutput(inputs={"f": args.f, "s": args.s}, result=holder_seminorm(f, args.s),
                         diagnostics=_grid_info(f))


@router.command("zygmund", F, option("--m", type=int, required=True))
def norma_zygmund(args) -> CommandOutput:
    """Norma de Zygmund de orden entero m"""
    f = sampled_function(args.f)
    return CommandOutput(inputs={"f": args.f, "m": args.m}, result=zygmund_seminorm(f, args.m),
                         diagnostics=_grid_info(f))


@router.command(
    "besov", F,
    option("--s", type=float, required=True),
    option("--p", default="2"),
    option("--q", default="2"),
    option("--m", type=int, required=True),
    option("--levels", type=int, default=8, help="Niveles diádicos t_j = 2^-j"),
)
def norma_besov(args) -> CommandOutput:
    """Norma de Besov por módulos de continuidad"""
    f = sampled_function(args.f)
    p, q = parse_norm_index(args.p), parse_norm_index(args.q)
    value = besov_norm_mc(f, args.s, p, q, args.m, args.levels)
    return CommandOutput(
        inputs={"f": args.f, "s": args.s, "p": args.p, "q": args.q, "m": args.m, "levels": args.levels},
        result=value,
        diagnostics=_grid_info(f),
    )


@router.command(
    "omega", F,
    option("--m", type=int, default=1),
    option("--p", default="inf"),
    option("--t", type=float, required=True, help="Radio t >= 0"),
)
def modulo(args) -> CommandOutput:
    """Módulo de continuidad ω_{m,p}(f, t)"""
    f = sampled_function(args.f)
    p = parse_norm_index(args.p)
    return CommandOutput(
        inputs={"f": args.f, "m": args.m, "p": args.p, "t": args.t},
        result=modulus_of_continuity(f, args.m, p, args.t),
        diagnostics=_grid_info(f),
    )

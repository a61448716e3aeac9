# ==========================================
# commands/fourier.py
# ==========================================
from commands.catalog import sampled_function
from core.distributions import fourier_quadrature_1d
from utils.helpers import parse_float_list
from utils.router import CommandOutput, CommandRouter, option

router = CommandRouter()


@router.command(
    "",
    option("--f", required=True, help="Función muestreada 1-D (JSON o CSV)"),
    option("--y", required=True, help='Frecuencias "0,1,2"'),
)
def transformar(args) -> CommandOutput:
    """Transformada de Fourier por trapecios con normalización (2π)^(-1/2)"""
    f = sampled_function(args.f)
    ys = parse_float_list(args.y)
    values = fourier_quadrature_1d(f, ys)
    return CommandOutput(
        inputs={"f": args.f, "y": ys},
        result=[{"y": y, "value": v} for y, v in zip(ys, values)],
        diagnostics={"points": f.grid.size, "spacing": f.grid.spacing},
    )

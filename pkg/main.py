import sys
from typing import Optional, Sequence

from config.logging_config import configure_logging
from utils.router import CommandApp, option

# Importar comandos
from commands import dist, fourier, matrix, measure, metric, norms, perm, quotient, rat, real, taylor

app = CommandApp(
    prog="workbench",
    description="Workbench de matemática constructiva: cocientes, números, grupos, "
                "álgebra lineal exacta, métrica, medida, análisis y distribuciones",
)

app.add_global_option(option("--verbose", action="store_true", help="Registro INFO en stderr"))

# Incluir comandos
app.include_router(quotient.router, prefix="quotient")
app.include_router(real.router, prefix="real")
app.include_router(rat.router, prefix="rat")
app.include_router(perm.router, prefix="perm")
app.include_router(matrix.router, prefix="matrix")
app.include_router(metric.router, prefix="metric")
app.include_router(measure.router, prefix="measure")
app.include_router(norms.router, prefix="norms")
app.include_router(taylor.router, prefix="taylor")
app.include_router(dist.router, prefix="dist")
app.include_router(fourier.router, prefix="fourier")


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Punto de entrada de la CLI

    Returns:
        int: código de salida (0 éxito, 1 error del dominio, 2 error de uso)
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    configure_logging(verbose="--verbose" in argv)
    return app.run(argv)


if __name__ == "__main__":
    sys.exit(run())

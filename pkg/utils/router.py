# ==========================================
# utils/router.py
# ==========================================
"""
Registro de comandos por decoradores sobre argparse

Cada módulo de commands/ expone `router = CommandRouter()` y registra sus
acciones con `@router.command(...)`; main.py las reúne con
`app.include_router(router, prefix=...)`.
"""
import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO, Tuple

from pydantic import ValidationError

from core.errors import WorkbenchError
from models.schemas import ReportEnvelope
from utils.helpers import to_jsonable

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


class CommandError(Exception):
    """Error a nivel de comando con su código de salida"""

    def __init__(self, exit_code: int, detail: str):
        super().__init__(detail)
        self.exit_code = exit_code
        self.detail = detail


@dataclass
class CommandOutput:
    inputs: Dict[str, Any]
    result: Any
    diagnostics: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class Option:
    flags: Tuple[str, ...]
    kwargs: Dict[str, Any]


def option(*flags: str, **kwargs: Any) -> Option:
    return Option(tuple(flags), kwargs)


@dataclass
class _Registered:
    name: str
    handler: Callable[[argparse.Namespace], CommandOutput]
    options: Sequence[Option]
    help: Optional[str]


class CommandRouter:
    def __init__(self):
        self.commands: List[_Registered] = []

    def command(self, name: str = "", *options: Option, help: Optional[str] = None):
        """
        Registra un manejador; name vacío hace que la familia sea el comando
        """
        def decorator(func: Callable[[argparse.Namespace], CommandOutput]):
            self.commands.append(_Registered(name, func, options, help or (func.__doc__ or "").strip()))
            return func

        return decorator


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"❌ Uso incorrecto: {message}\n")
        raise SystemExit(EXIT_USAGE)


class CommandApp:
    def __init__(self, prog: str, description: str):
        self.prog = prog
        self.description = description
        self.families: Dict[str, CommandRouter] = {}
        self.global_options: List[Option] = []

    def include_router(self, router: CommandRouter, prefix: str) -> None:
        self.families[prefix] = router

    def add_global_option(self, opt: Option) -> None:
        self.global_options.append(opt)

    def build_parser(self) -> argparse.ArgumentParser:
        parser = _Parser(prog=self.prog, description=self.description)
        for opt in self.global_options:
            parser.add_argument(*opt.flags, **opt.kwargs)
        families = parser.add_subparsers(dest="family", required=True, parser_class=_Parser)
        for prefix, router in self.families.items():
            leaf = [c for c in router.commands if not c.name]
            if leaf:
                self._attach(families.add_parser(prefix, help=leaf[0].help), leaf[0], prefix)
                continue
            family = families.add_parser(prefix)
            actions = family.add_subparsers(dest="action", required=True, parser_class=_Parser)
            for registered in router.commands:
                self._attach(actions.add_parser(registered.name, help=registered.help),
                             registered, f"{prefix} {registered.name}")
        return parser

    @staticmethod
    def _attach(sub: argparse.ArgumentParser, registered: _Registered, command: str) -> None:
        for opt in registered.options:
            sub.add_argument(*opt.flags, **opt.kwargs)
        sub.set_defaults(_handler=registered.handler, _command=command)

    def run(self, argv: Sequence[str], stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
        """
        Ejecuta un comando y escribe el reporte JSON en stdout

        Returns:
            int: 0 si tuvo éxito, 2 ante errores de uso, 1 ante errores del dominio
        """
        stdout = stdout or sys.stdout
        stderr = stderr or sys.stderr
        try:
            args = self.build_parser().parse_args(list(argv))
        except SystemExit as e:
            return EXIT_OK if e.code in (0, None) else EXIT_USAGE

        try:
            output = args._handler(args)
        except CommandError as e:
            stderr.write(f"❌ {e.detail}\n")
            return e.exit_code
        except WorkbenchError as e:
            logger.info("Error del dominio en %s: %s", args._command, e.name)
            stderr.write(f"❌ DomainError: {e}\n")
            return EXIT_DOMAIN
        except ValidationError as e:
            stderr.write(f"❌ DomainError: InvalidInput: {e.error_count()} errores de validación\n{e}\n")
            return EXIT_DOMAIN

        envelope = ReportEnvelope(
            command=args._command,
            inputs=to_jsonable(output.inputs),
            result=to_jsonable(output.result),
            diagnostics=to_jsonable(output.diagnostics),
        )
        stdout.write(json.dumps(envelope.model_dump(), ensure_ascii=False, indent=2) + "\n")
        logger.info("✅ %s completado", args._command)
        return EXIT_OK

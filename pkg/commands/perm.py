# ==========================================
# commands/perm.py
# ==========================================
from typing import Any, List

from config.settings import settings
from core.errors import CapExceeded, UnknownElement
from core.groups import (
    FiniteGroup, Permutation, PermutationGroup, is_subgroup, left_cosets, perm_compose, perm_inverse,
    right_cosets, sign,
)
from models.schemas import CayleyTableInput
from utils.helpers import load_json
from utils.router import CommandError, CommandOutput, CommandRouter, EXIT_USAGE, option

router = CommandRouter()

GROUP_OPTIONS = (
    option("--n", type=int, help="Grado del grupo de permutaciones Pn"),
    option("--table", help="Archivo JSON {elements, table}"),
    option("--subset", required=True,
           help='Elementos separados por ";" (permutaciones "2 3 1") o por "," (etiquetas)'),
)


def _load_group(args) -> FiniteGroup:
    if (args.n is None) == (args.table is None):
        raise CommandError(EXIT_USAGE, "indique exactamente uno de --n o --table")
    if args.n is not None:
        if args.n > settings.permutation_enumeration_cap:
            raise CapExceeded(f"n = {args.n} supera el máximo {settings.permutation_enumeration_cap}")
        return PermutationGroup(args.n)
    return CayleyTableInput.model_validate(load_json(args.table)).to_group()


def _parse_subset(text: str, group: FiniteGroup) -> List[Any]:
    if isinstance(group, PermutationGroup):
        return [Permutation.parse(p) for p in text.split(";") if p.strip()]
    by_text = {str(e): e for e in group.elements}
    members = []
    for label in (p.strip() for p in text.split(",")):
        if not label:
            continue
        if label not in by_text:
            raise UnknownElement(f"{label!r} no pertenece al grupo")
        members.append(by_text[label])
    return members


@router.command(
    "compose",
    option("--p", required=True, help='Permutación "2 3 1"'),
    option("--q", required=True, help='Permutación "2 1 3"'),
)
def componer(args) -> CommandOutput:
    """p ∘ q con (p ∘ q)(k) = p(q(k))"""
    p, q = Permutation.parse(args.p), Permutation.parse(args.q)
    return CommandOutput(inputs={"p": str(p), "q": str(q)}, result=str(perm_compose(p, q)))


@router.command("inverse", option("--p", required=True, help='Permutación "2 3 1"'))
def invertir(args) -> CommandOutput:
    """Permutación inversa"""
    p = Permutation.parse(args.p)
    return CommandOutput(inputs={"p": str(p)}, result=str(perm_inverse(p)), diagnostics={"sign": sign(p)})


@router.command("subgroup", *GROUP_OPTIONS)
def subgrupo(args) -> CommandOutput:
    """Criterio de subgrupo sobre Pn o una tabla de Cayley"""
    group = _load_group(args)
    subset = _parse_subset(args.subset, group)
    return CommandOutput(
        inputs={"group_order": group.order(), "subset": [str(x) for x in subset]},
        result=is_subgroup(subset, group),
    )


@router.command(
    "cosets",
    *GROUP_OPTIONS,
    option("--side", choices=["left", "right"], default="left"),
)
def clases_laterales(args) -> CommandOutput:
    """Clases laterales de un subgrupo"""
    group = _load_group(args)
    subset = _parse_subset(args.subset, group)
    cosets = left_cosets(subset, group) if args.side == "left" else right_cosets(subset, group)
    return CommandOutput(
        inputs={"group_order": group.order(), "subset": [str(x) for x in subset], "side": args.side},
        result=[[str(x) for x in c] for c in cosets],
        diagnostics={"index": len(cosets)},
    )

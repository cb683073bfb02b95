"""
Resolution of command-line targets to enumerated groups.

Builtin names: c<n>, d<order>, q<order>, a<degree>, pgl2_<p>, s1..s7.
Anything else that names an existing file is read as a `.grp` file.
"""

import logging
import re
from pathlib import Path
from typing import Callable, Dict, List, Sequence

from ..catalog import build_entry, catalog_entry
from ..constructors import alternating, cyclic, dihedral, from_generator_file, generalized_quaternion, pgl2
from ..engine import FiniteGroup
from ..errors import UnknownTarget
from ..utils.concurrency import run_jobs
from .common import CommandContext

logger = logging.getLogger("TargetResolver")

_BUILTIN = re.compile(r"^(?P<kind>c|d|q|a|pgl2_|s)(?P<n>[0-9]+)$")

_FAMILIES: Dict[str, Callable[[int], FiniteGroup]] = {
    "c": cyclic,
    "d": dihedral,
    "q": generalized_quaternion,
    "a": alternating,
    "pgl2_": pgl2,
}


def resolve_target(name: str, ctx: CommandContext) -> FiniteGroup:
    match = _BUILTIN.match(name.lower())
    if match:
        kind, n = match.group("kind"), int(match.group("n"))
        if kind == "s":
            if not 1 <= n <= 7:
                raise UnknownTarget(f"unknown catalog group {name!r} (expected s1..s7)")
            return build_entry(catalog_entry(f"S{n}"), ctx.data_dir, ctx.cap).relabel(name)
        try:
            group = _FAMILIES[kind](n)
        except ValueError as e:
            raise UnknownTarget(f"{name!r} is not a valid builtin group: {e}") from e
        return group.relabel(name)

    path = Path(name)
    if path.is_file():
        return from_generator_file(path, cap=ctx.cap)
    raise UnknownTarget(f"{name!r} is neither a builtin group name nor an existing .grp file")


def resolve_targets(names: Sequence[str], ctx: CommandContext) -> List[FiniteGroup]:
    """Targets are built concurrently; results keep the order of ``names``."""
    logger.debug(f"Resolving {len(names)} targets")
    return run_jobs([lambda n=n: resolve_target(n, ctx) for n in names], ctx.max_workers)

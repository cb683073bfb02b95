"""
Reader and writer for `.grp` generator files.

Grammar (UTF-8, one directive per line):

    # comment to end of line
    smallgroup <n> <i>        optional, at most once
    degree <d>                required, exactly once
    gen (1 2 3)(5 6)          one or more; 1-based cycles, fixed points omitted

`gen ()` denotes the identity. It is accepted but dropped with a warning.
"""

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

from ..errors import CatalogDataMissing, ParseError

logger = logging.getLogger("GroupType.GrpFormat")

MAX_DEGREE = 65535

_CYCLE = re.compile(r"\(([^()]*)\)")
_INT = re.compile(r"[0-9]+")

Cycle = Tuple[int, ...]


@dataclass
class GeneratorFile:
    path: str
    degree: int
    generators: List[List[Cycle]] = field(default_factory=list)
    smallgroup: Optional[Tuple[int, int]] = None


def _parse_int(token: str, path: str, line_no: int, what: str) -> int:
    if not _INT.fullmatch(token):
        raise ParseError(path, line_no, f"{what} must be a non-negative integer, got {token!r}")
    return int(token)


def parse_cycles(text: str, path: str = "<string>", line_no: int = 0) -> List[Cycle]:
    """Parse `(1 2 3)(5 6)` into cycles; points are checked for repetition, not range."""
    cycles: List[Cycle] = []
    position = 0
    seen = set()
    for match in _CYCLE.finditer(text):
        if text[position:match.start()].strip():
            raise ParseError(path, line_no, f"unexpected text {text[position:match.start()].strip()!r}")
        position = match.end()
        tokens = match.group(1).split()
        if not tokens:
            continue
        points = tuple(_parse_int(t, path, line_no, "point") for t in tokens)
        for p in points:
            if p in seen:
                raise ParseError(path, line_no, f"point {p} repeated")
            seen.add(p)
        cycles.append(points)
    if text[position:].strip():
        raise ParseError(path, line_no, f"unexpected text {text[position:].strip()!r}")
    if position == 0:
        raise ParseError(path, line_no, "expected at least one parenthesised cycle")
    return cycles


def parse_generator_text(text: str, path: str = "<string>") -> GeneratorFile:
    degree: Optional[int] = None
    smallgroup: Optional[Tuple[int, int]] = None
    raw_generators: List[Tuple[int, List[Cycle]]] = []
    last_line = 0

    for line_no, raw in enumerate(text.splitlines(), start=1):
        last_line = line_no
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, *tail = line.split(None, 1)
        rest = tail[0].strip() if tail else ""
        if keyword == "smallgroup":
            if smallgroup is not None:
                raise ParseError(path, line_no, "duplicate smallgroup header")
            parts = rest.split()
            if len(parts) != 2:
                raise ParseError(path, line_no, "smallgroup needs exactly two integers")
            n, i = (_parse_int(p, path, line_no, "smallgroup field") for p in parts)
            if n < 1 or i < 1:
                raise ParseError(path, line_no, "smallgroup fields must be positive")
            smallgroup = (n, i)
        elif keyword == "degree":
            if degree is not None:
                raise ParseError(path, line_no, "duplicate degree line")
            degree = _parse_int(rest, path, line_no, "degree")
            if not 1 <= degree <= MAX_DEGREE:
                raise ParseError(path, line_no, f"degree must lie in 1..{MAX_DEGREE}")
        elif keyword == "gen":
            raw_generators.append((line_no, parse_cycles(rest, path, line_no)))
        else:
            raise ParseError(path, line_no, f"unknown directive {keyword!r}")

    if degree is None:
        raise ParseError(path, last_line, "missing degree line")
    if not raw_generators:
        raise ParseError(path, last_line, "no gen lines")

    generators: List[List[Cycle]] = []
    for line_no, cycles in raw_generators:
        for cycle in cycles:
            for p in cycle:
                if not 1 <= p <= degree:
                    raise ParseError(path, line_no, f"point {p} outside 1..{degree}")
        if not any(len(c) > 1 for c in cycles):
            logger.warning(f"{path}:{line_no}: identity generator ignored")
            continue
        generators.append(cycles)

    return GeneratorFile(path=path, degree=degree, generators=generators, smallgroup=smallgroup)


def read_generator_file(path: Union[str, Path]) -> GeneratorFile:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError as e:
        logger.error(f"Generator file {path} not found")
        raise CatalogDataMissing(f"generator file {path} not found") from e
    except UnicodeDecodeError as e:
        raise ParseError(str(path), 0, f"not valid UTF-8: {e}") from e
    return parse_generator_text(text, str(path))


def format_cycles(cycles: Sequence[Cycle]) -> str:
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycles)


def format_generator_file(
    degree: int,
    generators: Sequence[Sequence[Cycle]],
    smallgroup: Optional[Tuple[int, int]] = None,
    comment: Optional[str] = None,
) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" if c else "#" for c in comment.splitlines())
    if smallgroup is not None:
        lines.append(f"smallgroup {smallgroup[0]} {smallgroup[1]}")
    lines.append(f"degree {degree}")
    lines.extend(f"gen {format_cycles(cycles)}" for cycles in generators)
    return "\n".join(lines) + "\n"

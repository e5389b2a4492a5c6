"""Plain-text instance files.

Digraph file::

    digraph <n> <m>
    <u> <v>          # one arc u -> v per line, m lines

Graph files use the header ``graph <n> <m>`` and unordered edge lines.
Blank lines and ``#`` comments are ignored. Labels are 0-based.
"""
from __future__ import annotations

import os
from typing import Union

from .digraph import Digraph, Graph
from .errors import GraphError, ParseError
from .families import is_family_spec, make_family

Instance = Union[Digraph, Graph]


def parse_instance(text: str) -> Instance:
    header = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 3 or fields[0] not in ("digraph", "graph"):
                raise ParseError("expected header 'digraph <n> <m>' or 'graph <n> <m>'", lineno)
            try:
                n, m = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError("vertex and arc counts must be integers", lineno) from None
            if n < 1 or m < 0:
                raise ParseError("need n >= 1 and m >= 0", lineno)
            header = (fields[0], n, m)
            continue
        if len(fields) != 2:
            raise ParseError(f"expected '<u> <v>', got {line!r}", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", lineno) from None
        if not (0 <= u < header[1] and 0 <= v < header[1]):
            raise ParseError(f"vertex out of range 0..{header[1] - 1}", lineno)
        pairs.append((u, v))
        if len(pairs) > header[2]:
            raise ParseError(f"more than the declared {header[2]} lines", lineno)
    if header is None:
        raise ParseError("empty instance file")
    kind, n, m = header
    if len(pairs) != m:
        raise ParseError(f"header declares {m} lines but {len(pairs)} were given")
    try:
        return Digraph(n, pairs) if kind == "digraph" else Graph(n, pairs)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def format_instance(inst: Instance) -> str:
    if isinstance(inst, Digraph):
        pairs = inst.arc_list()
        lines = [f"digraph {inst.n} {len(pairs)}"]
    else:
        pairs = list(inst.edge_list)
        lines = [f"graph {inst.n} {len(pairs)}"]
    lines += [f"{u} {v}" for u, v in pairs]
    return "\n".join(lines) + "\n"


def load_instance(source: str) -> Instance:
    """Resolve a family spec, a named orientation spec, or a file path."""
    if is_family_spec(source):
        return make_family(source)
    from .orientation import NAMED_ORIENTATIONS, construct_named_orientation

    if source.partition(":")[0] in NAMED_ORIENTATIONS:
        return construct_named_orientation(source)
    if not os.path.exists(source):
        raise ParseError(f"{source!r} is neither a family spec nor an existing file")
    with open(source, encoding="utf-8") as fh:
        return parse_instance(fh.read())

"""Line-oriented ``key = value`` output.

One pair per line, keys are dotted paths (``row.oracle_equivalence.violations``).
Values are integers, ``true``/``false``/``null``, fractions ``p/q``, flat arrays
``[0, 2]`` (of integers or of ``u->v`` arcs), or bare strings. The first line is
always ``format_version = 1``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Any, Iterable

FORMAT_VERSION = 1

_INT = re.compile(r"-?\d+\Z")
_FRAC = re.compile(r"-?\d+/\d+\Z")
_ARC = re.compile(r"(\d+)->(\d+)\Z")


def _scalar(value: Any) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, tuple) and len(value) == 2 and all(isinstance(x, int) for x in value):
        return f"{value[0]}->{value[1]}"
    text = str(value)
    if "\n" in text:
        raise ValueError("structured values must be single-line")
    return text


def format_value(value: Any) -> str:
    if isinstance(value, (list, set, frozenset)) or (isinstance(value, tuple) and not (
            len(value) == 2 and all(isinstance(x, int) for x in value))):
        items = sorted(value) if isinstance(value, (set, frozenset)) else list(value)
        return "[" + ", ".join(_scalar(x) for x in items) + "]"
    return _scalar(value)


def dump(pairs: Iterable[tuple[str, Any]]) -> str:
    lines = [f"format_version = {FORMAT_VERSION}"]
    for key, value in pairs:
        if " " in key or "=" in key:
            raise ValueError(f"bad key {key!r}")
        lines.append(f"{key} = {format_value(value)}")
    return "\n".join(lines) + "\n"


def _parse_scalar(token: str) -> Any:
    token = token.strip()
    if token == "null":
        return None
    if token in ("true", "false"):
        return token == "true"
    if _INT.match(token):
        return int(token)
    if _FRAC.match(token):
        return Fraction(token)
    arc = _ARC.match(token)
    if arc:
        return (int(arc.group(1)), int(arc.group(2)))
    return token


def parse_value(text: str) -> Any:
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        inner = text[1:-1].strip()
        return [_parse_scalar(x) for x in inner.split(",")] if inner else []
    return _parse_scalar(text)


def load(text: str) -> dict[str, Any]:
    out: dict[str, Any] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        key, sep, value = line.partition(" = ")
        if not sep:
            raise ValueError(f"line {lineno}: expected 'key = value'")
        out[key] = parse_value(value)
    if out.get("format_version") != FORMAT_VERSION:
        raise ValueError(f"unsupported format_version {out.get('format_version')!r}")
    return out

"""Text format for paths, points and boxes.

A path document is line oriented; ``#`` starts a comment::

    dim 2
    kind pl
    0   0 0
    1/2 1 1
    1   1 2

    dim 1
    kind step
    [0,1/2) 0
    [1/2,1) 1
    {1}     2

Rationals are integers or ``p/q``; decimals are rejected so that every
document denotes exactly one path.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .geometry import DimensionMismatch, DomainError, Interval, Path, PLPath, StepPath
from .topology import BasisBox

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")
_INTERVAL = re.compile(r"^([\[(])([^,\])]+),([^,\])]+)([\])])$")
_SINGLETON = re.compile(r"^\{([^}]+)\}$")


class ParseError(ValueError):
    def __init__(self, message, line=None, field=None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


def parse_rational(text: str, line=None) -> Fraction:
    text = text.strip()
    if not _RATIONAL.match(text):
        raise ParseError(f"expected an integer or p/q, got {text!r}", line, text)
    if "/" in text and int(text.split("/")[1]) == 0:
        raise ParseError("zero denominator", line, text)
    return Fraction(text)


def parse_interval(text: str, line=None) -> Interval:
    m = _SINGLETON.match(text)
    try:
        if m:
            return Interval.point(parse_rational(m.group(1), line))
        m = _INTERVAL.match(text)
        if not m:
            raise ParseError(f"expected an interval like [0,1/2) or {{1}}, got {text!r}", line, text)
        lo, hi = parse_rational(m.group(2), line), parse_rational(m.group(3), line)
        return Interval(lo, hi, m.group(1) == "[", m.group(4) == "]")
    except (ZeroDivisionError, DomainError) as exc:
        raise ParseError(str(exc), line, text) from None


def parse_path(text: str) -> Path:
    header = {}
    rows = []
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        if key in ("dim", "kind") and not rows:
            if key in header:
                raise ParseError(f"repeated {key}", number, key)
            header[key] = (rest.strip(), number)
        else:
            rows.append((number, line.split()))
    for key in ("dim", "kind"):
        if key not in header:
            raise ParseError(f"missing '{key}' header", None, key)
    dim_text, dim_line = header["dim"]
    if not dim_text.isdigit() or int(dim_text) < 1:
        raise ParseError("dim must be a positive integer", dim_line, "dim")
    dim = int(dim_text)
    kind, kind_line = header["kind"]
    if kind not in ("pl", "step"):
        raise ParseError("kind must be 'pl' or 'step'", kind_line, "kind")
    if not rows:
        raise ParseError("no breakpoints or pieces", None, "data")

    entries = []
    for number, fields in rows:
        if len(fields) != dim + 1:
            raise ParseError(f"expected {dim + 1} fields, got {len(fields)}", number)
        value = tuple(parse_rational(f, number) for f in fields[1:])
        head = parse_rational(fields[0], number) if kind == "pl" else parse_interval(fields[0], number)
        entries.append((head, value))
    try:
        if kind == "pl":
            return PLPath(tuple(entries))
        return StepPath(tuple(entries))
    except (DomainError, DimensionMismatch) as exc:
        raise ParseError(str(exc), None, "data") from None


def load_path(filename: str) -> Path:
    with open(filename, encoding="utf-8") as fh:
        return parse_path(fh.read())


def dump_path(path: Path) -> str:
    lines = [f"dim {path.dim}", "kind pl" if isinstance(path, PLPath) else "kind step"]
    if isinstance(path, PLPath):
        rows = [(str(t), v) for t, v in path.breakpoints]
    else:
        rows = [(str(iv), v) for iv, v in path.pieces]
    for head, v in rows:
        lines.append(" ".join([head] + [str(c) for c in v]))
    return "\n".join(lines) + "\n"


def _split_tuple(text: str):
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(not p for p in parts):
        raise ParseError(f"malformed tuple literal {text!r}")
    return parts


def parse_point(text: str) -> tuple:
    """``"(0,-1/2)"`` or ``"0,-1/2"``."""
    return tuple(parse_rational(p) for p in _split_tuple(text))


def parse_box(text: str) -> BasisBox:
    """Upper bounds such as ``"(1/2,inf)"``; ``inf`` leaves a coordinate free."""
    return BasisBox(tuple(None if p == "inf" else parse_rational(p) for p in _split_tuple(text)))

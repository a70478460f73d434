"""Plain-text matrix files.

Grammar (ASCII, locale independent)::

    file     := { comment | blank } order { comment | blank | row }
    comment  := optional whitespace, '#', anything to end of line
    order    := a nonnegative decimal integer alone on its line
    row      := exactly n entries separated by spaces or tabs
    entry    := [+-]? digits ( '/' digits )?      denominator nonzero

Exactly ``n`` rows must follow the order line and the matrix must be
symmetric. Writing uses ``p/q`` with ``/q`` omitted when ``q == 1``.
"""

import re
from fractions import Fraction

from psets.errors import AsymmetricMatrix, ParseError
from psets.exactla import SymMatrix

__all__ = ["parse_matrix", "format_matrix", "read_matrix", "write_matrix", "format_rational"]

_ENTRY = re.compile(r"[+-]?[0-9]+(?:/[0-9]+)?", re.ASCII)
_ORDER = re.compile(r"[0-9]+", re.ASCII)


def format_rational(q):
    return str(q)


def _parse_entry(tok, lineno):
    if not _ENTRY.fullmatch(tok):
        raise ParseError(f"bad entry {tok!r}", lineno)
    if "/" in tok:
        p, q = tok.split("/")
        if int(q) == 0:
            raise ParseError(f"zero denominator in {tok!r}", lineno)
        return Fraction(int(p), int(q))
    return Fraction(int(tok))


def parse_matrix(text):
    n = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            if not _ORDER.fullmatch(line):
                raise ParseError(f"expected the matrix order, got {line!r}", lineno)
            n = int(line)
            continue
        toks = line.split()
        if len(rows) == n:
            raise ParseError(f"unexpected extra row (order is {n})", lineno)
        if len(toks) != n:
            raise ParseError(f"row has {len(toks)} entries, expected {n}", lineno)
        rows.append([_parse_entry(t, lineno) for t in toks])
    if n is None:
        raise ParseError("empty input: missing matrix order")
    if len(rows) != n:
        raise ParseError(f"expected {n} rows, found {len(rows)}")
    try:
        return SymMatrix(rows)
    except AsymmetricMatrix as exc:
        raise AsymmetricMatrix(f"matrix is not symmetric: {exc}") from None


def format_matrix(a, comments=()):
    lines = [f"# {c}" for c in comments]
    lines.append(str(a.n))
    lines.extend(" ".join(format_rational(x) for x in row) for row in a.entries)
    return "\n".join(lines) + "\n"


def read_matrix(path):
    with open(path, "rb") as fh:
        data = fh.read()
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError as exc:
        raise ParseError(f"non-ASCII byte at offset {exc.start}") from None
    return parse_matrix(text)


def write_matrix(path, a, comments=()):
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_matrix(a, comments))

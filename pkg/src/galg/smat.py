"""Reading and writing ``.smat`` Seifert matrix files.

Format: a header line ``n r`` followed by ``n`` rows of ``n`` integers.
Lines starting with ``#`` are comments; blank lines are ignored.
"""

from __future__ import annotations

from .seifert import SeifertPair


class SmatError(ValueError):
    """Malformed ``.smat`` input; ``line``/``column`` are 1-based."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


def _tokens(line: str):
    col = 0
    for tok in line.split():
        col = line.index(tok, col)
        yield tok, col + 1
        col += len(tok)


def _ints(line: str, lineno: int) -> list[int]:
    out = []
    for tok, col in _tokens(line):
        try:
            out.append(int(tok))
        except ValueError:
            raise SmatError(f"non-integer token {tok!r}", lineno, col) from None
    return out


def parse_smat(text: str, validate: bool = True) -> SeifertPair:
    lines = [
        (i + 1, raw)
        for i, raw in enumerate(text.splitlines())
        if raw.strip() and not raw.lstrip().startswith("#")
    ]
    if not lines:
        raise SmatError("missing header line 'n r'")
    lineno, header = lines[0]
    head = _ints(header, lineno)
    if len(head) != 2:
        raise SmatError(f"header must hold exactly two integers 'n r', got {len(head)}", lineno)
    n, r = head
    if n < 0 or r < 1:
        raise SmatError(f"header values out of range: n={n}, r={r}", lineno)
    body = lines[1:]
    if len(body) != n:
        raise SmatError(f"expected {n} matrix rows, found {len(body)}", body[-1][0] if body else lineno)
    rows = []
    for lineno, raw in body:
        row = _ints(raw, lineno)
        if len(row) != n:
            raise SmatError(f"row length mismatch: expected {n} entries, found {len(row)}", lineno)
        rows.append(row)
    try:
        return SeifertPair(rows, r, validate=validate)
    except ValueError as exc:
        raise SmatError(f"invariant violation: {exc}") from None


def format_smat(s: SeifertPair) -> str:
    lines = [f"{s.size} {s.r}"]
    lines.extend(" ".join(str(x) for x in row) for row in s.mat)
    return "\n".join(lines) + "\n"


def read_smat(path, validate: bool = True) -> SeifertPair:
    with open(path, encoding="utf-8") as fh:
        return parse_smat(fh.read(), validate=validate)


def write_smat(path, s: SeifertPair) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_smat(s))

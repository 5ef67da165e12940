"""Plain-text code files.

Either an explicit generator::

    # comment
    q 4 modulus 1 1 1
    n 6
    k 3
    G
    1 0 0 1 1 0
    ...

or a single family stanza such as ``family rs 7 6 3``.
"""

from __future__ import annotations

from pathlib import Path

from .families import FAMILY_TAGS, FamilySpec, build_family
from .gf import FieldError, field_of_order
from .linalg import LinearCode


class CodeFileError(ValueError):
    def __init__(self, msg: str, line: int | None = None, col: int | None = None, path: str = ""):
        self.msg, self.line, self.col, self.path = msg, line, col, path
        where = path
        if line is not None:
            where += f":{line}" + (f":{col}" if col is not None else "")
        super().__init__(f"{where}: {msg}" if where else msg)


def _tokens(raw: str) -> list[tuple[str, int]]:
    """Split a line into (token, 1-based column) pairs."""
    out, i = [], 0
    while i < len(raw):
        if raw[i].isspace():
            i += 1
            continue
        j = i
        while j < len(raw) and not raw[j].isspace():
            j += 1
        out.append((raw[i:j], i + 1))
        i = j
    return out


def _int(tok: tuple[str, int], lineno: int, what: str) -> int:
    try:
        return int(tok[0])
    except ValueError:
        raise CodeFileError(f"expected an integer for {what}, got {tok[0]!r}", lineno, tok[1]) from None


def parse_code_text(text: str, path: str = "") -> LinearCode:
    lines = [(i + 1, _tokens(raw.rstrip("\r"))) for i, raw in enumerate(text.split("\n"))]
    lines = [(no, toks) for no, toks in lines if toks and not toks[0][0].startswith("#")]
    if not lines:
        raise CodeFileError("empty code file", path=path)
    try:
        return _parse(lines)
    except CodeFileError as e:
        raise CodeFileError(e.msg, e.line, e.col, path) from None


def _parse(lines) -> LinearCode:
    first_no, first = lines[0]
    if first[0][0] == "family":
        if len(lines) > 1:
            raise CodeFileError("a family stanza must be the only statement", lines[1][0], 1)
        if len(first) < 2:
            raise CodeFileError("family needs a tag", first_no, first[0][1] + 6)
        tag = first[1][0]
        if tag not in FAMILY_TAGS:
            raise CodeFileError(f"unknown family {tag!r}", first_no, first[1][1])
        params = [_int(t, first_no, "family parameter") for t in first[2:]]
        try:
            return build_family(FamilySpec(tag, params))
        except (ValueError, FieldError) as e:
            raise CodeFileError(str(e), first_no, first[1][1]) from None

    q = n = k = None
    modulus = None
    field = None
    rows: list[list[int]] = []
    in_g = False
    for no, toks in lines:
        head = toks[0][0]
        if in_g:
            if n is None:
                raise CodeFileError("n must be declared before G", no, 1)
            if len(toks) != n:
                raise CodeFileError(f"row has {len(toks)} entries, expected {n}", no, 1)
            row = []
            for tok in toks:
                v = _int(tok, no, "matrix entry")
                if not 0 <= v < q:
                    raise CodeFileError(f"entry {v} out of range for q = {q}", no, tok[1])
                row.append(v)
            rows.append(row)
            continue
        if head == "q":
            if len(toks) < 2:
                raise CodeFileError("q needs a value", no, toks[0][1])
            q = _int(toks[1], no, "q")
            if len(toks) > 2:
                if toks[2][0] != "modulus":
                    raise CodeFileError(f"unexpected token {toks[2][0]!r}", no, toks[2][1])
                modulus = [_int(t, no, "modulus coefficient") for t in toks[3:]]
            elif len(toks) != 2:
                raise CodeFileError("trailing tokens after q", no, toks[2][1])
            try:
                field = field_of_order(q, modulus)
            except (FieldError, ValueError) as e:
                raise CodeFileError(str(e), no, toks[1][1]) from None
        elif head in ("n", "k"):
            if len(toks) != 2:
                raise CodeFileError(f"{head} takes exactly one integer", no, toks[0][1])
            val = _int(toks[1], no, head)
            if head == "n":
                n = val
            else:
                k = val
        elif head == "G":
            if len(toks) != 1:
                raise CodeFileError("G must stand alone on its line", no, toks[1][1])
            if q is None or n is None or k is None:
                raise CodeFileError("q, n and k must precede G", no, 1)
            in_g = True
        else:
            raise CodeFileError(f"unknown keyword {head!r}", no, toks[0][1])
    if not in_g:
        raise CodeFileError("missing G section", lines[-1][0])
    if len(rows) != k:
        raise CodeFileError(f"G has {len(rows)} rows, expected k = {k}", lines[-1][0])
    try:
        return LinearCode(field, rows)
    except ValueError as e:
        raise CodeFileError(str(e), lines[-1][0]) from None


def parse_code_file(path: str | Path) -> LinearCode:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as e:
        raise CodeFileError(f"cannot read code file: {e.strerror}", path=str(p)) from None
    code = parse_code_text(text, str(p))
    if not code.name:
        object.__setattr__(code, "name", p.stem)
    return code


def format_code_file(C: LinearCode) -> str:
    F = C.field
    head = f"q {F.q}"
    if F.e > 1:
        head += " modulus " + " ".join(map(str, F.modulus))
    body = "\n".join(" ".join(str(int(v)) for v in row) for row in C.G)
    return f"{head}\nn {C.n}\nk {C.k}\nG\n{body}\n"

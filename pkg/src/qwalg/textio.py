"""Reading and writing the plain-text algebra format.

::

    algebra <name>
    elements <tok> <tok> ...
    zero <tok>
    one <tok>
    arrow
    <n rows of n tokens>

``#`` starts a comment running to the end of the line and blank lines are
ignored.  Row ``i`` lists ``element_i -> element_j`` for ``j`` in element
order.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .algebra import FiniteAlgebra
from .errors import ParseError


@dataclass(frozen=True)
class AlgebraDocument:
    name: str
    elements: tuple[str, ...]
    zero: str
    one: str
    rows: tuple[tuple[str, ...], ...]

    def to_algebra(self) -> FiniteAlgebra:
        return FiniteAlgebra.from_rows(self.elements, self.rows, self.zero, self.one)

    @classmethod
    def from_algebra(cls, A: FiniteAlgebra, name: str) -> "AlgebraDocument":
        return cls(
            name=name,
            elements=A.names,
            zero=A.name(A.zero),
            one=A.name(A.one),
            rows=tuple(tuple(r) for r in A.rows()),
        )


def _tokens(text: str):
    """Yield (line_no, [(col, token), ...]) for each non-blank line."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = []
        col = 0
        for part in line.split():
            col = line.index(part, col)
            toks.append((col + 1, part))
            col += len(part)
        if toks:
            yield lineno, toks


def parse(text: str) -> AlgebraDocument:
    lines = list(_tokens(text))
    pos = 0
    last_line = len(text.splitlines()) or 1

    def header(keyword: str, count: int | None) -> tuple[int, list[tuple[int, str]]]:
        nonlocal pos
        if pos >= len(lines):
            raise ParseError(last_line, 1, f"missing section '{keyword}'")
        lineno, toks = lines[pos]
        col, word = toks[0]
        if word != keyword:
            raise ParseError(lineno, col, f"expected '{keyword}', found '{word}'")
        args = toks[1:]
        if count is not None and len(args) != count:
            where = args[count][0] if len(args) > count else col + len(word)
            raise ParseError(lineno, where, f"'{keyword}' takes {count} argument(s), got {len(args)}")
        if count is None and not args:
            raise ParseError(lineno, col + len(word), f"'{keyword}' needs at least one element")
        pos += 1
        return lineno, args

    _, (name_tok,) = header("algebra", 1)
    _, elem_toks = header("elements", None)
    elements: list[str] = []
    for col, tok in elem_toks:
        if tok in elements:
            raise ParseError(lines[pos - 1][0], col, f"duplicate element '{tok}'")
        elements.append(tok)
    known = set(elements)

    def constant(keyword: str) -> str:
        lineno, ((col, tok),) = header(keyword, 1)
        if tok not in known:
            raise ParseError(lineno, col, f"{keyword} '{tok}' is not an element")
        return tok

    zero = constant("zero")
    one = constant("one")
    header("arrow", 0)
    n = len(elements)
    rows = []
    for i in range(n):
        if pos >= len(lines):
            raise ParseError(last_line, 1, f"arrow grid has {i} rows, expected {n}")
        lineno, toks = lines[pos]
        if len(toks) != n:
            col = toks[n][0] if len(toks) > n else toks[-1][0]
            raise ParseError(lineno, col, f"row '{elements[i]}' has {len(toks)} entries, expected {n}")
        for col, tok in toks:
            if tok not in known:
                raise ParseError(lineno, col, f"unknown element '{tok}' in arrow grid")
        rows.append(tuple(t for _, t in toks))
        pos += 1
    if pos < len(lines):
        lineno, toks = lines[pos]
        raise ParseError(lineno, toks[0][0], "unexpected content after arrow grid")
    return AlgebraDocument(name_tok[1], tuple(elements), zero, one, tuple(rows))


def serialize(doc: AlgebraDocument) -> str:
    out = [
        f"algebra {doc.name}",
        "elements " + " ".join(doc.elements),
        f"zero {doc.zero}",
        f"one {doc.one}",
        "arrow",
    ]
    out.extend(" ".join(row) for row in doc.rows)
    return "\n".join(out) + "\n"


def load(path: str | Path) -> FiniteAlgebra:
    return parse(Path(path).read_text()).to_algebra()


def dumps(A: FiniteAlgebra, name: str) -> str:
    return serialize(AlgebraDocument.from_algebra(A, name))

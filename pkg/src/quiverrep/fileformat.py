"""Line-oriented text formats for quivers and representations.

Quiver files::

    quiver <n>
    arrow <label> <tail> <head>

Representation files::

    rep over Q          (or F<p> with p prime)
    dims d1 d2 ... dn
    map <label> <rows>x<cols>
    <rows lines of space-separated entries>

Entries are integers or fractions ``a/b``.  Maps with zero rows or zero
columns carry no entry lines.  Blank lines and lines starting with ``#`` are
ignored everywhere.  Formatting then parsing is the identity, bit for bit.
"""

from __future__ import annotations

from .linalg import Field, Matrix
from .quiver import Quiver
from .reps import Representation


class ParseError(ValueError):
    """Syntax or shape error in a quiver or representation file."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _logical_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        out.append((no, stripped))
    return out


def parse_quiver(text: str) -> Quiver:
    lines = _logical_lines(text)
    if not lines:
        raise ParseError("empty quiver file")
    no, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "quiver":
        raise ParseError(f"expected 'quiver <n>', got {header!r}", no)
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(f"bad vertex count {parts[1]!r}", no) from None
    if n < 1:
        raise ParseError("a quiver needs at least one vertex", no)
    arrows = []
    seen = set()
    for no, line in lines[1:]:
        parts = line.split()
        if len(parts) != 4 or parts[0] != "arrow":
            raise ParseError(f"expected 'arrow <label> <tail> <head>', got {line!r}", no)
        label = parts[1]
        try:
            tail, head = int(parts[2]), int(parts[3])
        except ValueError:
            raise ParseError(f"bad arrow endpoints in {line!r}", no) from None
        if label in seen:
            raise ParseError(f"duplicate arrow label {label!r}", no)
        seen.add(label)
        if not (1 <= tail <= n and 1 <= head <= n):
            raise ParseError(f"arrow {label!r}: endpoints must lie in 1..{n}", no)
        if tail == head:
            raise ParseError(f"arrow {label!r}: loops are not allowed", no)
        arrows.append((label, tail, head))
    return Quiver.build(n, arrows)


def format_quiver(q: Quiver) -> str:
    lines = [f"quiver {q.vertex_count}"]
    lines.extend(f"arrow {a.label} {a.tail} {a.head}" for a in q.arrows)
    return "\n".join(lines) + "\n"


def parse_representation(text: str, quiver: Quiver) -> Representation:
    lines = _logical_lines(text)
    if not lines:
        raise ParseError("empty representation file")
    pos = 0

    no, header = lines[pos]
    parts = header.split()
    if len(parts) != 3 or parts[0] != "rep" or parts[1] != "over":
        raise ParseError(f"expected 'rep over <field>', got {header!r}", no)
    try:
        field = Field.from_name(parts[2])
    except ValueError as exc:
        raise ParseError(str(exc), no) from None
    pos += 1

    if pos >= len(lines):
        raise ParseError("missing 'dims' line", no)
    no, dims_line = lines[pos]
    parts = dims_line.split()
    if not parts or parts[0] != "dims":
        raise ParseError(f"expected 'dims d1 ... dn', got {dims_line!r}", no)
    try:
        dims = tuple(int(p) for p in parts[1:])
    except ValueError:
        raise ParseError(f"bad dimension in {dims_line!r}", no) from None
    if len(dims) != quiver.vertex_count:
        raise ParseError(
            f"expected {quiver.vertex_count} dimensions, got {len(dims)}", no)
    if any(d < 0 for d in dims):
        raise ParseError("dimensions must be nonnegative", no)
    pos += 1

    mats: dict[str, Matrix] = {}
    while pos < len(lines):
        no, line = lines[pos]
        parts = line.split()
        if len(parts) != 3 or parts[0] != "map":
            raise ParseError(f"expected 'map <label> <rows>x<cols>', got {line!r}", no)
        label = parts[1]
        if label not in quiver.arrow_index:
            raise ParseError(f"unknown arrow label {label!r}", no)
        if label in mats:
            raise ParseError(f"duplicate map for arrow {label!r}", no)
        try:
            rtext, ctext = parts[2].split("x", 1)
            nrows, ncols = int(rtext), int(ctext)
        except ValueError:
            raise ParseError(f"bad shape {parts[2]!r}", no) from None
        arrow = quiver.arrows[quiver.arrow_index[label]]
        want = (dims[arrow.head - 1], dims[arrow.tail - 1])
        if (nrows, ncols) != want:
            raise ParseError(
                f"map {label!r} has shape {nrows}x{ncols}, expected {want[0]}x{want[1]}", no)
        pos += 1
        entries = []
        if nrows > 0 and ncols > 0:
            for r in range(nrows):
                if pos >= len(lines):
                    raise ParseError(f"map {label!r}: expected {nrows} entry rows", no)
                rno, row_line = lines[pos]
                tokens = row_line.split()
                if len(tokens) != ncols:
                    raise ParseError(
                        f"map {label!r}: expected {ncols} entries, got {len(tokens)}", rno)
                for tok in tokens:
                    try:
                        entries.append(field.parse_scalar(tok))
                    except (ValueError, ZeroDivisionError) as exc:
                        raise ParseError(str(exc), rno) from None
                pos += 1
        mats[label] = Matrix(field, nrows, ncols, entries)
    missing = [a.label for a in quiver.arrows if a.label not in mats]
    if missing:
        raise ParseError(f"missing maps for arrows: {missing}")
    ordered = tuple(mats[a.label] for a in quiver.arrows)
    return Representation(quiver, field, dims, ordered)


def format_representation(rep: Representation) -> str:
    F = rep.field
    lines = [f"rep over {F}", "dims " + " ".join(str(d) for d in rep.dims)]
    for arrow, m in zip(rep.quiver.arrows, rep.mats):
        lines.append(f"map {arrow.label} {m.nrows}x{m.ncols}")
        if m.nrows > 0 and m.ncols > 0:
            for i in range(m.nrows):
                lines.append(" ".join(F.format_scalar(v) for v in m.row(i)))
    return "\n".join(lines) + "\n"

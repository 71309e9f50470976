"""Exact dense linear algebra over the rationals and prime fields.

Scalars are plain Python numbers: ``int``, plus ``fractions.Fraction`` for
non-integral rational values; prime-field elements are canonical residues in
``[0, p)``.  Everything is exact, no floating point appears anywhere.

Matrices are immutable, row-major, and may have zero rows or columns (maps to
or from the zero space are first class).  Elimination is deterministic:
leftmost pivot column, first nonzero row, full reduction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence

Scalar = int | Fraction
Vector = tuple

_PRIME_LIMIT = 2**31


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    top = isqrt(n)
    while f <= top:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    """The rationals (characteristic 0) or a prime field F_p with p < 2^31."""

    characteristic: int = 0

    def __post_init__(self) -> None:
        p = self.characteristic
        if p == 0:
            return
        if not (2 <= p < _PRIME_LIMIT) or not _is_prime(p):
            raise ValueError(f"characteristic must be 0 or a prime below 2^31, got {p}")

    @property
    def is_rationals(self) -> bool:
        return self.characteristic == 0

    def __str__(self) -> str:
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"

    @classmethod
    def from_name(cls, name: str) -> "Field":
        text = name.strip()
        if text in ("Q", "QQ"):
            return cls(0)
        if text.startswith("F") and len(text) > 1:
            try:
                p = int(text[1:])
            except ValueError:
                raise ValueError(f"unknown field name {name!r}") from None
            return cls(p)
        raise ValueError(f"unknown field name {name!r}")

    # -- elements ---------------------------------------------------------

    def element(self, value) -> Scalar:
        """Coerce ``value`` to a canonical scalar of this field.

        Rationals are reduced fractions (plain ints when integral); prime
        field elements are residues in [0, p).
        """
        p = self.characteristic
        if isinstance(value, Fraction):
            if p == 0:
                return value.numerator if value.denominator == 1 else value
            den = value.denominator % p
            if den == 0:
                raise ZeroDivisionError(f"denominator of {value} vanishes in F{p}")
            return value.numerator * pow(den, -1, p) % p
        if isinstance(value, int):
            return value % p if p else value
        raise TypeError(f"cannot coerce {value!r} into an element of {self}")

    def parse_scalar(self, text: str) -> Scalar:
        t = text.strip()
        try:
            if "/" in t:
                num, den = t.split("/", 1)
                value: Scalar = Fraction(int(num), int(den))
            else:
                value = int(t)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad scalar literal {text!r}: {exc}") from None
        return self.element(value)

    def format_scalar(self, value: Scalar) -> str:
        if isinstance(value, Fraction):
            if value.denominator == 1:
                return str(value.numerator)
            return f"{value.numerator}/{value.denominator}"
        return str(value)

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        p = self.characteristic
        return (a + b) % p if p else a + b

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        p = self.characteristic
        return (a - b) % p if p else a - b

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        p = self.characteristic
        return (a * b) % p if p else a * b

    def neg(self, a: Scalar) -> Scalar:
        p = self.characteristic
        return (-a) % p if p else -a

    def inv(self, a: Scalar) -> Scalar:
        if not a:
            raise ZeroDivisionError(f"inverting zero in {self}")
        p = self.characteristic
        if p:
            return pow(a, -1, p)
        return self.element(Fraction(1, 1) / a)

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))


QQ = Field(0)


def GF(p: int) -> Field:
    """The prime field with p elements (p prime)."""
    return Field(p)


class Matrix:
    """Immutable dense matrix over a fixed exact field, entries row-major."""

    __slots__ = ("field", "nrows", "ncols", "entries")

    def __init__(self, field: Field, nrows: int, ncols: int, entries: Iterable):
        if nrows < 0 or ncols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        ent = tuple(field.element(v) for v in entries)
        if len(ent) != nrows * ncols:
            raise ValueError(f"expected {nrows * ncols} entries, got {len(ent)}")
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.entries = ent

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence], ncols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("rows have differing lengths")
            if ncols is not None and ncols != width:
                raise ValueError(f"expected {ncols} columns, got {width}")
        else:
            if ncols is None:
                ncols = 0
            width = ncols
        flat = [v for r in rows for v in r]
        return cls(field, len(rows), width, flat)

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence], nrows: int | None = None) -> "Matrix":
        cols = [list(c) for c in columns]
        if cols:
            height = len(cols[0])
            if any(len(c) != height for c in cols):
                raise ValueError("columns have differing lengths")
            if nrows is not None and nrows != height:
                raise ValueError(f"expected {nrows} rows, got {height}")
        else:
            if nrows is None:
                nrows = 0
            height = nrows
        flat = [cols[j][i] for i in range(height) for j in range(len(cols))]
        return cls(field, height, len(cols), flat)

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        return cls(field, nrows, ncols, [0] * (nrows * ncols))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def column(cls, field: Field, values: Sequence) -> "Matrix":
        vals = list(values)
        return cls(field, len(vals), 1, vals)

    # -- access ---------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, key: tuple[int, int]) -> Scalar:
        i, j = key
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(f"index {key} out of range for {self.nrows}x{self.ncols} matrix")
        return self.entries[i * self.ncols + j]

    def row(self, i: int) -> tuple:
        if not 0 <= i < self.nrows:
            raise IndexError(f"row {i} out of range")
        return self.entries[i * self.ncols : (i + 1) * self.ncols]

    def column_at(self, j: int) -> tuple:
        if not 0 <= j < self.ncols:
            raise IndexError(f"column {j} out of range")
        return self.entries[j :: self.ncols] if self.ncols else ()

    def rows_as_lists(self) -> list[list]:
        c = self.ncols
        return [list(self.entries[i * c : (i + 1) * c]) for i in range(self.nrows)]

    def is_zero(self) -> bool:
        return not any(self.entries)

    # -- structure ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.field, self.nrows, self.ncols, self.entries))

    def __repr__(self) -> str:
        return f"Matrix({self.field}, {self.nrows}x{self.ncols}, {list(self.entries)!r})"

    # -- arithmetic ----------------------------------------------------------

    def _check_same_shape(self, other: "Matrix") -> None:
        if self.field != other.field:
            raise ValueError("field mismatch")
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.field, self.nrows, self.ncols,
                      [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.field, self.nrows, self.ncols,
                      [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, self.nrows, self.ncols, [-a for a in self.entries])

    def scaled(self, c) -> "Matrix":
        c = self.field.element(c)
        return Matrix(self.field, self.nrows, self.ncols, [c * a for a in self.entries])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.field != other.field:
            raise ValueError("field mismatch")
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        n, k, m = self.nrows, self.ncols, other.ncols
        a, b = self.entries, other.entries
        out = []
        for i in range(n):
            arow = a[i * k : (i + 1) * k]
            for j in range(m):
                s = 0
                for t in range(k):
                    v = arow[t]
                    if v:
                        s += v * b[t * m + j]
                out.append(s)
        return Matrix(self.field, n, m, out)

    def apply(self, vec: Sequence) -> tuple:
        """Matrix-vector product on a column vector given as a sequence."""
        if len(vec) != self.ncols:
            raise ValueError(f"vector length {len(vec)} does not match {self.ncols} columns")
        F = self.field
        vals = [F.element(v) for v in vec]
        out = []
        for i in range(self.nrows):
            s = 0
            for t, v in enumerate(self.row(i)):
                if v:
                    s += v * vals[t]
            out.append(F.element(s))
        return tuple(out)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.ncols, self.nrows,
                      [self.entries[i * self.ncols + j]
                       for j in range(self.ncols) for i in range(self.nrows)])

    def over(self, field: Field) -> "Matrix":
        """The same entries reinterpreted in another field."""
        return Matrix(field, self.nrows, self.ncols, self.entries)


# -- stacking ---------------------------------------------------------------


def hstack(mats: Sequence[Matrix], *, field: Field | None = None, nrows: int | None = None) -> Matrix:
    """Concatenate matrices left to right; kwargs supply shape when empty."""
    mats = list(mats)
    if not mats:
        if field is None or nrows is None:
            raise ValueError("hstack of no matrices needs field= and nrows=")
        return Matrix.zeros(field, nrows, 0)
    first = mats[0]
    if any(m.field != first.field or m.nrows != first.nrows for m in mats):
        raise ValueError("hstack requires equal fields and row counts")
    if nrows is not None and nrows != first.nrows:
        raise ValueError(f"expected {nrows} rows, got {first.nrows}")
    rows = []
    for i in range(first.nrows):
        row: list = []
        for m in mats:
            row.extend(m.row(i))
        rows.append(row)
    return Matrix.from_rows(first.field, rows, ncols=sum(m.ncols for m in mats))


def vstack(mats: Sequence[Matrix], *, field: Field | None = None, ncols: int | None = None) -> Matrix:
    """Concatenate matrices top to bottom; kwargs supply shape when empty."""
    mats = list(mats)
    if not mats:
        if field is None or ncols is None:
            raise ValueError("vstack of no matrices needs field= and ncols=")
        return Matrix.zeros(field, 0, ncols)
    first = mats[0]
    if any(m.field != first.field or m.ncols != first.ncols for m in mats):
        raise ValueError("vstack requires equal fields and column counts")
    if ncols is not None and ncols != first.ncols:
        raise ValueError(f"expected {ncols} columns, got {first.ncols}")
    flat: list = []
    for m in mats:
        flat.extend(m.entries)
    return Matrix(first.field, sum(m.nrows for m in mats), first.ncols, flat)


def block_diag(mats: Sequence[Matrix], *, field: Field | None = None) -> Matrix:
    """Block diagonal matrix of the given blocks (0x0 when empty)."""
    mats = list(mats)
    if not mats:
        if field is None:
            raise ValueError("block_diag of no matrices needs field=")
        return Matrix.zeros(field, 0, 0)
    F = mats[0].field
    if any(m.field != F for m in mats):
        raise ValueError("block_diag requires a single field")
    nrows = sum(m.nrows for m in mats)
    ncols = sum(m.ncols for m in mats)
    rows = [[0] * ncols for _ in range(nrows)]
    r0 = c0 = 0
    for m in mats:
        for i in range(m.nrows):
            rows[r0 + i][c0 : c0 + m.ncols] = list(m.row(i))
        r0 += m.nrows
        c0 += m.ncols
    return Matrix.from_rows(F, rows, ncols=ncols)


# -- elimination --------------------------------------------------------------


def _echelonize(rows: list[list], ncols: int, field: Field) -> list[int]:
    """In-place reduced row echelon form; returns the pivot columns.

    Deterministic: scans columns left to right, picks the first row with a
    nonzero entry, scales it to 1 and clears the column everywhere else.
    """
    p = field.characteristic
    nrows = len(rows)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        prow = rows[r]
        pv = prow[c]
        if pv != 1:
            inv = field.inv(pv)
            if p:
                for j in range(c, ncols):
                    if prow[j]:
                        prow[j] = prow[j] * inv % p
            else:
                for j in range(c, ncols):
                    if prow[j]:
                        prow[j] = prow[j] * inv
        support = [(j, prow[j]) for j in range(c + 1, ncols) if prow[j]]
        if p:
            for i in range(nrows):
                if i == r:
                    continue
                f = rows[i][c]
                if not f:
                    continue
                row = rows[i]
                row[c] = 0
                for j, v in support:
                    row[j] = (row[j] - f * v) % p
        else:
            for i in range(nrows):
                if i == r:
                    continue
                f = rows[i][c]
                if not f:
                    continue
                row = rows[i]
                row[c] = 0
                for j, v in support:
                    row[j] = row[j] - f * v
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form together with its pivot columns."""
    rows = m.rows_as_lists()
    pivots = _echelonize(rows, m.ncols, m.field)
    return Matrix.from_rows(m.field, rows, ncols=m.ncols), tuple(pivots)


def rank(m: Matrix) -> int:
    rows = m.rows_as_lists()
    return len(_echelonize(rows, m.ncols, m.field))


def _kernel_vectors(rows: list[list], ncols: int, field: Field) -> list[tuple]:
    """Echelonized right-kernel basis of the matrix given by ``rows``."""
    pivots = _echelonize(rows, ncols, field)
    pivot_set = set(pivots)
    basis_rows: list[list] = []
    for fcol in range(ncols):
        if fcol in pivot_set:
            continue
        v = [0] * ncols
        v[fcol] = 1
        for rj, pcol in enumerate(pivots):
            coef = rows[rj][fcol]
            if coef:
                v[pcol] = field.neg(coef)
        basis_rows.append(v)
    _echelonize(basis_rows, ncols, field)
    return [tuple(field.element(x) for x in row) for row in basis_rows]


def kernel_basis(m: Matrix) -> list[tuple]:
    """Deterministic echelonized basis of the right null space of m."""
    return _kernel_vectors(m.rows_as_lists(), m.ncols, m.field)


def solve_linear(a: Matrix, b: Sequence) -> tuple | None:
    """One solution of a*x = b with free variables set to zero, else None.

    Raises ValueError when the right-hand side has the wrong length.
    """
    if len(b) != a.nrows:
        raise ValueError(f"right-hand side length {len(b)} does not match {a.nrows} rows")
    F = a.field
    n = a.ncols
    rows = [list(a.row(i)) + [F.element(b[i])] for i in range(a.nrows)]
    pivots = _echelonize(rows, n + 1, F)
    if pivots and pivots[-1] == n:
        return None
    x = [0] * n
    for rj, pcol in enumerate(pivots):
        x[pcol] = rows[rj][n]
    return tuple(F.element(v) for v in x)


def solve_matrix(a: Matrix, b: Matrix) -> Matrix | None:
    """Solve a*X = b column by column (free variables zero), else None."""
    if a.field != b.field:
        raise ValueError("field mismatch")
    if a.nrows != b.nrows:
        raise ValueError(f"row counts differ: {a.nrows} vs {b.nrows}")
    F = a.field
    n, k = a.ncols, b.ncols
    rows = [list(a.row(i)) + list(b.row(i)) for i in range(a.nrows)]
    pivots = _echelonize(rows, n + k, F)
    if pivots and pivots[-1] >= n:
        return None
    out_rows = [[0] * k for _ in range(n)]
    for rj, pcol in enumerate(pivots):
        out_rows[pcol] = rows[rj][n:]
    return Matrix.from_rows(F, out_rows, ncols=k)

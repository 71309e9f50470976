"""Quiver representations over an exact field.

A representation assigns a dimension to every vertex and a matrix to every
arrow; matrices act on column vectors, so the matrix of an arrow a has shape
(dim at head(a)) x (dim at tail(a)).

Hom spaces are computed as the kernel of the commuting-square system, Ext^1
as the cokernel of the standard differential

    d : (+)_i Hom(S_i, X_i) -> (+)_a Hom(S_{t(a)}, X_{h(a)}),
    d(phi)_a = phi_{h(a)} S_a - X_a phi_{t(a)},

whose kernel is Hom(S, X) and whose cokernel is Ext^1(S, X).  Flattening is
always vertex by vertex (respectively arrow by arrow), row-major inside each
block, which keeps every basis deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

from .linalg import (
    Field,
    Matrix,
    _echelonize,
    _kernel_vectors,
    block_diag,
    hstack,
    kernel_basis,
    rank,
    solve_matrix,
    vstack,
)
from .quiver import Quiver, euler_form

DEFAULT_SEARCH_BUDGET = 2**20


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; this signals a bug, not bad input."""


class UndecidedError(RuntimeError):
    """An exhaustive search would exceed the configured budget."""


@dataclass(frozen=True)
class Representation:
    """Vertex dimensions plus one matrix per arrow, all over one field."""

    quiver: Quiver
    field: Field
    dims: tuple[int, ...]
    mats: tuple[Matrix, ...]

    def __post_init__(self) -> None:
        q = self.quiver
        q.check_vector(self.dims)
        if any(d < 0 for d in self.dims):
            raise ValueError("dimensions must be nonnegative")
        if len(self.mats) != len(q.arrows):
            raise ValueError(f"expected {len(q.arrows)} matrices, got {len(self.mats)}")
        for a, m in zip(q.arrows, self.mats):
            if m.field != self.field:
                raise ValueError(f"map {a.label!r} lives over {m.field}, not {self.field}")
            want = (self.dims[a.head - 1], self.dims[a.tail - 1])
            if m.shape != want:
                raise ValueError(
                    f"map {a.label!r} has shape {m.nrows}x{m.ncols}, expected {want[0]}x{want[1]}"
                )

    @classmethod
    def build(
        cls,
        quiver: Quiver,
        field: Field,
        dims: Sequence[int],
        maps: dict[str, Sequence[Sequence]] | None = None,
    ) -> "Representation":
        """Construct from per-arrow row lists; omitted arrows get zero maps."""
        dims = tuple(int(d) for d in dims)
        maps = dict(maps or {})
        mats = []
        for a in quiver.arrows:
            shape = (dims[a.head - 1], dims[a.tail - 1])
            if a.label in maps:
                given = maps.pop(a.label)
                m = given if isinstance(given, Matrix) else Matrix.from_rows(field, given, ncols=shape[1])
                if m.shape != shape:
                    raise ValueError(
                        f"map {a.label!r} has shape {m.nrows}x{m.ncols}, expected {shape[0]}x{shape[1]}"
                    )
                mats.append(m)
            else:
                mats.append(Matrix.zeros(field, *shape))
        if maps:
            raise ValueError(f"maps given for unknown arrows: {sorted(maps)}")
        return cls(quiver, field, dims, tuple(mats))

    @classmethod
    def zero(cls, quiver: Quiver, field: Field) -> "Representation":
        return cls.build(quiver, field, quiver.zero_vector())

    @classmethod
    def simple(cls, quiver: Quiver, field: Field, vertex: int) -> "Representation":
        return cls.build(quiver, field, quiver.unit_vector(vertex))

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def mat(self, label: str) -> Matrix:
        return self.mats[self.quiver.arrow_index[label]]

    def over(self, field: Field) -> "Representation":
        """The same matrices over another field (only away from prime fields)."""
        if field == self.field:
            return self
        if not self.field.is_rationals:
            raise ValueError(f"cannot move a representation from {self.field} to {field}")
        return Representation(
            self.quiver, field, self.dims, tuple(m.over(field) for m in self.mats)
        )


def check_compatible(x: Representation, y: Representation) -> None:
    if x.quiver != y.quiver:
        raise ValueError("representations live on different quivers")
    if x.field != y.field:
        raise ValueError(f"field mismatch: {x.field} vs {y.field}")


# -- Hom ----------------------------------------------------------------------


def _vertex_offsets(x: Representation, y: Representation) -> tuple[list[int], int]:
    offs = []
    total = 0
    for dx, dy in zip(x.dims, y.dims):
        offs.append(total)
        total += dx * dy
    return offs, total


def _commuting_system_rows(x: Representation, y: Representation) -> tuple[list[list], int]:
    """Rows of the linear system phi_{h(a)} X_a - Y_a phi_{t(a)} = 0.

    Variables are the entries of the per-vertex maps phi_i : X_i -> Y_i,
    vertex by vertex, row-major; one equation row per arrow-space coordinate.
    """
    q = x.quiver
    p = x.field.characteristic
    offs, total = _vertex_offsets(x, y)
    rows: list[list] = []
    for ai, ar in enumerate(q.arrows):
        t0, h0 = ar.tail - 1, ar.head - 1
        Xa, Ya = x.mats[ai], y.mats[ai]
        dxt, dxh = x.dims[t0], x.dims[h0]
        dyt, dyh = y.dims[t0], y.dims[h0]
        for r in range(dyh):
            base_h = offs[h0] + r * dxh
            ya_row = Ya.row(r)
            for c in range(dxt):
                row = [0] * total
                for k in range(dxh):
                    v = Xa[k, c]
                    if v:
                        row[base_h + k] = v
                for k in range(dyt):
                    v = ya_row[k]
                    if v:
                        idx = offs[t0] + k * dxt + c
                        row[idx] = (row[idx] - v) % p if p else row[idx] - v
                rows.append(row)
    return rows, total


def _unflatten_vertex(vec: Sequence, x: Representation, y: Representation) -> tuple[Matrix, ...]:
    offs, _ = _vertex_offsets(x, y)
    out = []
    for i in range(x.quiver.vertex_count):
        dx, dy = x.dims[i], y.dims[i]
        chunk = vec[offs[i] : offs[i] + dx * dy]
        out.append(Matrix(x.field, dy, dx, chunk))
    return tuple(out)


@dataclass(frozen=True)
class HomBasis:
    """Echelonized basis of Hom(source, target) as per-vertex matrix tuples."""

    source: Representation
    target: Representation
    elements: tuple[tuple[Matrix, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.elements)

    def verify(self) -> None:
        """Re-assert every commuting square for every basis element."""
        q = self.source.quiver
        for el in self.elements:
            for ai, ar in enumerate(q.arrows):
                t0, h0 = ar.tail - 1, ar.head - 1
                lhs = el[h0] @ self.source.mats[ai]
                rhs = self.target.mats[ai] @ el[t0]
                if lhs != rhs:
                    raise ConsistencyError(f"square for arrow {ar.label!r} does not commute")


def hom_basis(x: Representation, y: Representation) -> HomBasis:
    """Basis of the homomorphism space Hom(x, y)."""
    check_compatible(x, y)
    rows, total = _commuting_system_rows(x, y)
    vecs = _kernel_vectors(rows, total, x.field)
    elements = tuple(_unflatten_vertex(v, x, y) for v in vecs)
    return HomBasis(x, y, elements)


def hom_dim(x: Representation, y: Representation) -> int:
    return hom_basis(x, y).dimension


def end_dim(x: Representation) -> int:
    return hom_dim(x, x)


# -- Ext ----------------------------------------------------------------------


def ext_dim_formula(x: Representation, y: Representation) -> int:
    """dim Ext^1(x, y) via dim Hom(x, y) - <dim x, dim y>."""
    check_compatible(x, y)
    d = hom_dim(x, y) - euler_form(x.quiver, x.dims, y.dims)
    if d < 0:
        raise ConsistencyError(f"negative Ext dimension {d}; the Hom solver is broken")
    return d


@dataclass(frozen=True)
class ExtCocycleBasis:
    """Cocycle representatives of a basis of Ext^1(source, target).

    Each cocycle assigns to the arrow a a matrix S_{t(a)} -> X_{h(a)}; the
    representatives are the standard basis vectors at the non-pivot
    coordinates of the echelonized image of the differential.
    """

    source: Representation
    target: Representation
    cocycles: tuple[tuple[Matrix, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.cocycles)


def _arrow_offsets(s: Representation, x: Representation) -> tuple[list[int], int]:
    q = s.quiver
    offs = []
    total = 0
    for ar in q.arrows:
        offs.append(total)
        total += x.dims[ar.head - 1] * s.dims[ar.tail - 1]
    return offs, total


def ext_cocycle_basis(s: Representation, x: Representation) -> ExtCocycleBasis:
    """Deterministic cocycle representatives spanning Ext^1(s, x)."""
    check_compatible(s, x)
    q = s.quiver
    F = s.field
    rows, nvars = _commuting_system_rows(s, x)
    aoffs, arrow_total = _arrow_offsets(s, x)
    # image of the differential = column span of the system matrix
    image_rows = [[rows[r][v] for r in range(arrow_total)] for v in range(nvars)]
    pivots = set(_echelonize(image_rows, arrow_total, F))
    cocycles = []
    for j in range(arrow_total):
        if j in pivots:
            continue
        mats = []
        for ai, ar in enumerate(q.arrows):
            nr, nc = x.dims[ar.head - 1], s.dims[ar.tail - 1]
            size = nr * nc
            if aoffs[ai] <= j < aoffs[ai] + size:
                ent = [0] * size
                ent[j - aoffs[ai]] = 1
                mats.append(Matrix(F, nr, nc, ent))
            else:
                mats.append(Matrix.zeros(F, nr, nc))
        cocycles.append(tuple(mats))
    basis = ExtCocycleBasis(s, x, tuple(cocycles))
    if basis.dimension != ext_dim_formula(s, x):
        raise ConsistencyError(
            f"cokernel gives {basis.dimension} cocycles but the dimension formula "
            f"gives {ext_dim_formula(s, x)}"
        )
    return basis


# -- direct sums ----------------------------------------------------------------


def direct_sum(x: Representation, y: Representation) -> Representation:
    """Block-diagonal direct sum, x-coordinates first."""
    check_compatible(x, y)
    dims = tuple(a + b for a, b in zip(x.dims, y.dims))
    mats = tuple(block_diag([mx, my]) for mx, my in zip(x.mats, y.mats))
    return Representation(x.quiver, x.field, dims, mats)


def power(s: Representation, r: int) -> Representation:
    """The direct sum of r copies of s."""
    if r < 0:
        raise ValueError("negative multiplicity")
    dims = tuple(r * d for d in s.dims)
    mats = tuple(block_diag([m] * r, field=s.field) for m in s.mats)
    return Representation(s.quiver, s.field, dims, mats)


# -- subrepresentations and quotients ------------------------------------------


@dataclass(frozen=True)
class SubQuotient:
    """A subrepresentation (inclusions) or quotient (projections) of ambient."""

    ambient: Representation
    induced: Representation
    vertex_maps: tuple[Matrix, ...]
    kind: Literal["sub", "quotient"]

    def verify(self) -> None:
        """Check full rank of the vertex maps and exact intertwining."""
        q = self.ambient.quiver
        for i in range(q.vertex_count):
            m = self.vertex_maps[i]
            if self.kind == "sub":
                if m.shape != (self.ambient.dims[i], self.induced.dims[i]):
                    raise ConsistencyError(f"inclusion at vertex {i + 1} has wrong shape")
                if rank(m) != self.induced.dims[i]:
                    raise ConsistencyError(f"inclusion at vertex {i + 1} is not injective")
            else:
                if m.shape != (self.induced.dims[i], self.ambient.dims[i]):
                    raise ConsistencyError(f"projection at vertex {i + 1} has wrong shape")
                if rank(m) != self.induced.dims[i]:
                    raise ConsistencyError(f"projection at vertex {i + 1} is not surjective")
        for ai, ar in enumerate(q.arrows):
            t0, h0 = ar.tail - 1, ar.head - 1
            if self.kind == "sub":
                lhs = self.vertex_maps[h0] @ self.induced.mats[ai]
                rhs = self.ambient.mats[ai] @ self.vertex_maps[t0]
            else:
                lhs = self.induced.mats[ai] @ self.vertex_maps[t0]
                rhs = self.vertex_maps[h0] @ self.ambient.mats[ai]
            if lhs != rhs:
                raise ConsistencyError(f"arrow {ar.label!r} does not intertwine")


def kernel_intersection(x: Representation, s: Representation, hom: HomBasis | None = None) -> SubQuotient:
    """The largest subrepresentation of x killed by every map x -> s.

    At each vertex this is the kernel of the vertically stacked basis maps of
    Hom(x, s); the arrow maps restrict because each basis map intertwines.
    """
    check_compatible(x, s)
    hb = hom if hom is not None else hom_basis(x, s)
    if hb.source != x or hb.target != s:
        raise ValueError("supplied hom basis does not match the given representations")
    q, F = x.quiver, x.field
    inclusions = []
    sub_dims = []
    for i in range(q.vertex_count):
        stacked = vstack([el[i] for el in hb.elements], field=F, ncols=x.dims[i])
        cols = kernel_basis(stacked)
        inclusions.append(Matrix.from_columns(F, cols, nrows=x.dims[i]))
        sub_dims.append(len(cols))
    mats = []
    for ai, ar in enumerate(q.arrows):
        t0, h0 = ar.tail - 1, ar.head - 1
        restricted = solve_matrix(inclusions[h0], x.mats[ai] @ inclusions[t0])
        if restricted is None:
            raise ConsistencyError("kernel spaces are not arrow-stable")
        mats.append(restricted)
    induced = Representation(q, F, tuple(sub_dims), tuple(mats))
    return SubQuotient(ambient=x, induced=induced, vertex_maps=tuple(inclusions), kind="sub")


def image_sum_quotient(s: Representation, y: Representation, hom: HomBasis | None = None) -> SubQuotient:
    """The quotient of y by the sum of the images of all maps s -> y.

    Quotient coordinates are the non-pivot coordinates of the echelonized
    image span at each vertex, so the projections are deterministic.
    """
    check_compatible(s, y)
    hb = hom if hom is not None else hom_basis(s, y)
    if hb.source != s or hb.target != y:
        raise ValueError("supplied hom basis does not match the given representations")
    q, F = y.quiver, y.field
    projections = []
    sections = []
    quot_dims = []
    for i in range(q.vertex_count):
        dy = y.dims[i]
        span = hstack([el[i] for el in hb.elements], field=F, nrows=dy)
        span_rows = span.transpose().rows_as_lists()
        pivots = _echelonize(span_rows, dy, F)
        nonpivots = [c for c in range(dy) if c not in set(pivots)]
        proj_rows = []
        for qcol in nonpivots:
            row = [0] * dy
            row[qcol] = 1
            for k, pcol in enumerate(pivots):
                coef = span_rows[k][qcol]
                if coef:
                    row[pcol] = F.neg(coef)
            proj_rows.append(row)
        projections.append(Matrix.from_rows(F, proj_rows, ncols=dy))
        sections.append(Matrix.from_columns(
            F, [[1 if r == qcol else 0 for r in range(dy)] for qcol in nonpivots], nrows=dy))
        quot_dims.append(len(nonpivots))
    mats = []
    for ai, ar in enumerate(q.arrows):
        t0, h0 = ar.tail - 1, ar.head - 1
        induced_map = projections[h0] @ y.mats[ai] @ sections[t0]
        if induced_map @ projections[t0] != projections[h0] @ y.mats[ai]:
            raise ConsistencyError("image spaces are not arrow-stable")
        mats.append(induced_map)
    induced = Representation(q, F, tuple(quot_dims), tuple(mats))
    return SubQuotient(ambient=y, induced=induced, vertex_maps=tuple(projections), kind="quotient")


# -- indecomposability over small prime fields -----------------------------------


def _flatten_element(el: tuple[Matrix, ...]) -> tuple:
    out: list = []
    for m in el:
        out.extend(m.entries)
    return tuple(out)


def _coords_in_span(flat_basis: list[tuple], pivots: list[int], vec: tuple, field: Field) -> tuple:
    coords = tuple(vec[p] for p in pivots)
    # exact membership check
    n = len(vec)
    p = field.characteristic
    residual = list(vec)
    for c, row in zip(coords, flat_basis):
        if c:
            for j in range(n):
                v = row[j]
                if v:
                    residual[j] = (residual[j] - c * v) % p if p else residual[j] - c * v
    if any(residual):
        raise ConsistencyError("element does not lie in the computed endomorphism span")
    return coords


def is_indecomposable_fp(x: Representation, budget: int = DEFAULT_SEARCH_BUDGET) -> bool:
    """Exhaustive idempotent search in End(x) over a prime field.

    x is indecomposable exactly when 0 and the identity are the only
    idempotent endomorphisms.  The zero representation is decomposable by
    convention.  Raises UndecidedError when p^dim End(x) exceeds the budget.
    """
    F = x.field
    if F.is_rationals:
        raise ValueError("idempotent search needs a prime field; got Q")
    if x.is_zero():
        return False
    basis = hom_basis(x, x)
    d = basis.dimension
    p = F.characteristic
    if p**d > budget:
        raise UndecidedError(f"{p}^{d} idempotent candidates exceed the budget {budget}")
    flat = [_flatten_element(el) for el in basis.elements]
    pivots = [next(j for j, v in enumerate(vec) if v) for vec in flat]
    products: list[list[tuple]] = []
    for ei in basis.elements:
        row = []
        for ej in basis.elements:
            composed = tuple(mi @ mj for mi, mj in zip(ei, ej))
            row.append(_coords_in_span(flat, pivots, _flatten_element(composed), F))
        products.append(row)
    ident = _flatten_element(tuple(Matrix.identity(F, n) for n in x.dims))
    id_coords = _coords_in_span(flat, pivots, ident, F)
    zero_coords = (0,) * d
    for cand in itertools.product(range(p), repeat=d):
        support = [i for i in range(d) if cand[i]]
        acc = [0] * d
        for i in support:
            ci = cand[i]
            for j in support:
                m = ci * cand[j] % p
                lam = products[i][j]
                for k in range(d):
                    v = lam[k]
                    if v:
                        acc[k] += m * v
        if tuple(v % p for v in acc) == cand:
            if cand != zero_coords and cand != id_coords:
                return False
    return True


def hom_space_contains_iso(basis: HomBasis, budget: int = DEFAULT_SEARCH_BUDGET) -> bool:
    """Search the span of a Hom basis for an invertible element (prime fields).

    Raises UndecidedError when the span is too large to enumerate.
    """
    x, y = basis.source, basis.target
    if x.dims != y.dims:
        return False
    F = x.field
    if x.total_dim == 0:
        return True
    d = basis.dimension
    if d == 0:
        return False
    if F.is_rationals:
        raise ValueError("isomorphism search needs a prime field; got Q")
    p = F.characteristic
    if p**d > budget:
        raise UndecidedError(f"{p}^{d} combinations exceed the budget {budget}")
    for cand in itertools.product(range(p), repeat=d):
        if not any(cand):
            continue
        ok = True
        for i in range(x.quiver.vertex_count):
            n = x.dims[i]
            if n == 0:
                continue
            acc = Matrix.zeros(F, n, n)
            for c, el in zip(cand, basis.elements):
                if c:
                    acc = acc + el[i].scaled(c)
            if rank(acc) != n:
                ok = False
                break
        if ok:
            return True
    return False

"""Universal extension functors and their inverses, at the object level.

Throughout, s is required to be exceptional (End(s) = k and Ext^1(s,s) = 0);
the constructions are only functorial on that assumption.  The upward functor
glues a basis of Ext^1(s, x) into one extension 0 -> x -> Z -> s^r -> 0, the
downward functor dually builds 0 -> s^m -> U -> y -> 0 from Ext^1(y, s), and
the composite applies both.  The inverses peel copies of s off again via the
kernel-intersection and image-sum constructions.

Every functor value carries explicit inclusion/projection witnesses; forward
constructions verify exactness outright, inverse constructions record whether
the witness sequence is exact (it can fail to be when the input does not lie
in the domain category, which is precisely what the verification pipeline
probes for).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Literal, Sequence

from .linalg import Matrix, hstack, rank, vstack
from .quiver import Quiver, euler_form, sym_form
from .reps import (
    ConsistencyError,
    HomBasis,
    Representation,
    check_compatible,
    end_dim,
    ext_cocycle_basis,
    ext_dim_formula,
    hom_basis,
    hom_dim,
    image_sum_quotient,
    kernel_intersection,
    power,
)


class PreconditionError(ValueError):
    """A functor was applied outside its domain."""


@dataclass(frozen=True)
class MembershipReport:
    """Hom/Ext dimensions of a pair (s, x) and the resulting vanishing flags.

    The flags cover only the Hom- and Ext-vanishing halves of the domain
    categories; the direct-summand conditions are not decided here.
    """

    hom_x_s: int
    hom_s_x: int
    ext_s_x: int
    ext_x_s: int

    @property
    def hom_to_s_vanishes(self) -> bool:
        return self.hom_x_s == 0

    @property
    def hom_from_s_vanishes(self) -> bool:
        return self.hom_s_x == 0

    @property
    def ext_from_s_vanishes(self) -> bool:
        return self.ext_s_x == 0

    @property
    def ext_to_s_vanishes(self) -> bool:
        return self.ext_x_s == 0

    @property
    def fully_orthogonal(self) -> bool:
        return not (self.hom_x_s or self.hom_s_x or self.ext_s_x or self.ext_x_s)


def membership(s: Representation, x: Representation) -> MembershipReport:
    """All four Hom/Ext dimensions between x and s."""
    check_compatible(s, x)
    q = s.quiver
    hom_xs = hom_dim(x, s)
    hom_sx = hom_dim(s, x)
    ext_sx = hom_sx - euler_form(q, s.dims, x.dims)
    ext_xs = hom_xs - euler_form(q, x.dims, s.dims)
    if ext_sx < 0 or ext_xs < 0:
        raise ConsistencyError("negative Ext dimension; the Hom solver is broken")
    return MembershipReport(hom_x_s=hom_xs, hom_s_x=hom_sx, ext_s_x=ext_sx, ext_x_s=ext_xs)


def reflected_dim(q: Quiver, x_dim: Sequence[int], s_dim: Sequence[int]) -> tuple[int, ...]:
    """Dimension vector after the universal extension: x - (x, s) * s."""
    q.check_vector(x_dim)
    q.check_vector(s_dim)
    c = sym_form(q, x_dim, s_dim)
    return tuple(xd - c * sd for xd, sd in zip(x_dim, s_dim))


def predicted_end_dim(
    q: Quiver,
    x_dim: Sequence[int],
    s_dim: Sequence[int],
    end_x: int,
    direction: Literal["forward", "inverse"],
) -> int:
    """dim End of the functor value, from dim End of the input.

    Forward adds <x,s> * <s,x>, the inverse subtracts it.
    """
    prod = euler_form(q, x_dim, s_dim) * euler_form(q, s_dim, x_dim)
    if direction == "forward":
        return end_x + prod
    if direction == "inverse":
        return end_x - prod
    raise ValueError(f"direction must be 'forward' or 'inverse', got {direction!r}")


@dataclass(frozen=True)
class ExactSequenceWitness:
    """Per-vertex inclusion and projection maps of a short sequence.

    sub -> middle -> quotient; the maps always compose to zero and always
    intertwine the arrow matrices, but the rank conditions making the
    sequence exact can fail for the inverse constructions on bad input.
    """

    sub: Representation
    middle: Representation
    quotient: Representation
    inclusion: tuple[Matrix, ...]
    projection: tuple[Matrix, ...]

    def check_morphisms(self) -> None:
        q = self.middle.quiver
        for ai, ar in enumerate(q.arrows):
            t0, h0 = ar.tail - 1, ar.head - 1
            if self.middle.mats[ai] @ self.inclusion[t0] != self.inclusion[h0] @ self.sub.mats[ai]:
                raise ConsistencyError(f"inclusion does not intertwine arrow {ar.label!r}")
            if self.quotient.mats[ai] @ self.projection[t0] != self.projection[h0] @ self.middle.mats[ai]:
                raise ConsistencyError(f"projection does not intertwine arrow {ar.label!r}")

    def is_exact(self) -> bool:
        n = self.middle.quiver.vertex_count
        for i in range(n):
            if self.sub.dims[i] + self.quotient.dims[i] != self.middle.dims[i]:
                return False
            if rank(self.inclusion[i]) != self.sub.dims[i]:
                return False
            if rank(self.projection[i]) != self.quotient.dims[i]:
                return False
            if not (self.projection[i] @ self.inclusion[i]).is_zero():
                return False
        return True

    def verify(self) -> None:
        self.check_morphisms()
        if not self.is_exact():
            raise ConsistencyError("witness sequence is not exact")


@dataclass(frozen=True)
class FunctorResult:
    """Output of a universal extension functor with its sequence witness.

    multiplicity counts the copies of s glued on (forward) or peeled off
    (inverse); composite applications carry their stages instead of a single
    witness.
    """

    output: Representation
    multiplicity: int
    witness: ExactSequenceWitness | None
    exact: bool
    stages: tuple["FunctorResult", ...] = dc_field(default=())


def _require_exceptional(s: Representation) -> None:
    if end_dim(s) != 1:
        raise PreconditionError("s must be exceptional: End(s) is not one dimensional")
    if ext_dim_formula(s, s) != 0:
        raise PreconditionError("s must be exceptional: Ext1(s, s) does not vanish")


def _sigma_bar_core(s: Representation, x: Representation) -> FunctorResult:
    q, F = x.quiver, x.field
    co = ext_cocycle_basis(s, x)
    r = co.dimension
    spow = power(s, r)
    dims = tuple(xd + r * sd for xd, sd in zip(x.dims, s.dims))
    mats = []
    for ai, ar in enumerate(q.arrows):
        t0, h0 = ar.tail - 1, ar.head - 1
        glue = hstack([c[ai] for c in co.cocycles], field=F, nrows=x.dims[h0])
        top = hstack([x.mats[ai], glue], field=F, nrows=x.dims[h0])
        bottom = hstack(
            [Matrix.zeros(F, r * s.dims[h0], x.dims[t0]), spow.mats[ai]],
            field=F,
            nrows=r * s.dims[h0],
        )
        mats.append(vstack([top, bottom], field=F, ncols=dims[t0]))
    z = Representation(q, F, dims, tuple(mats))
    inclusion = tuple(
        vstack([Matrix.identity(F, x.dims[i]), Matrix.zeros(F, r * s.dims[i], x.dims[i])],
               field=F, ncols=x.dims[i])
        for i in range(q.vertex_count)
    )
    projection = tuple(
        hstack([Matrix.zeros(F, r * s.dims[i], x.dims[i]), Matrix.identity(F, r * s.dims[i])],
               field=F, nrows=r * s.dims[i])
        for i in range(q.vertex_count)
    )
    witness = ExactSequenceWitness(sub=x, middle=z, quotient=spow,
                                   inclusion=inclusion, projection=projection)
    witness.verify()
    if ext_dim_formula(s, z) != 0:
        raise ConsistencyError("universal extension failed to kill Ext1(s, -)")
    return FunctorResult(output=z, multiplicity=r, witness=witness, exact=True)


def sigma_bar(s: Representation, x: Representation) -> FunctorResult:
    """Glue a basis of Ext1(s, x) below x: 0 -> x -> Z -> s^r -> 0."""
    check_compatible(s, x)
    _require_exceptional(s)
    if hom_dim(x, s) != 0:
        raise PreconditionError("upward extension needs Hom(x, s) = 0")
    return _sigma_bar_core(s, x)


def _sigma_under_core(s: Representation, y: Representation) -> FunctorResult:
    q, F = y.quiver, y.field
    co = ext_cocycle_basis(y, s)
    m = co.dimension
    spow = power(s, m)
    dims = tuple(m * sd + yd for sd, yd in zip(s.dims, y.dims))
    mats = []
    for ai, ar in enumerate(q.arrows):
        t0, h0 = ar.tail - 1, ar.head - 1
        glue = vstack([c[ai] for c in co.cocycles], field=F, ncols=y.dims[t0])
        top = hstack([spow.mats[ai], glue], field=F, nrows=m * s.dims[h0])
        bottom = hstack(
            [Matrix.zeros(F, y.dims[h0], m * s.dims[t0]), y.mats[ai]],
            field=F,
            nrows=y.dims[h0],
        )
        mats.append(vstack([top, bottom], field=F, ncols=dims[t0]))
    u = Representation(q, F, dims, tuple(mats))
    inclusion = tuple(
        vstack([Matrix.identity(F, m * s.dims[i]), Matrix.zeros(F, y.dims[i], m * s.dims[i])],
               field=F, ncols=m * s.dims[i])
        for i in range(q.vertex_count)
    )
    projection = tuple(
        hstack([Matrix.zeros(F, y.dims[i], m * s.dims[i]), Matrix.identity(F, y.dims[i])],
               field=F, nrows=y.dims[i])
        for i in range(q.vertex_count)
    )
    witness = ExactSequenceWitness(sub=spow, middle=u, quotient=y,
                                   inclusion=inclusion, projection=projection)
    witness.verify()
    if ext_dim_formula(u, s) != 0:
        raise ConsistencyError("universal extension failed to kill Ext1(-, s)")
    return FunctorResult(output=u, multiplicity=m, witness=witness, exact=True)


def sigma_under(s: Representation, y: Representation) -> FunctorResult:
    """Glue a basis of Ext1(y, s) above y: 0 -> s^m -> U -> y -> 0."""
    check_compatible(s, y)
    _require_exceptional(s)
    if hom_dim(s, y) != 0:
        raise PreconditionError("downward extension needs Hom(s, y) = 0")
    return _sigma_under_core(s, y)


def sigma(s: Representation, x: Representation) -> FunctorResult:
    """The universal extension functor: upward then downward gluing.

    Requires Hom(x, s) = 0 = Hom(s, x).  The output dimension vector equals
    reflected_dim(x, s) and dim End grows by <x,s> * <s,x>; both facts are
    re-verified on every call.
    """
    check_compatible(s, x)
    _require_exceptional(s)
    if hom_dim(x, s) != 0:
        raise PreconditionError("universal extension needs Hom(x, s) = 0")
    if hom_dim(s, x) != 0:
        raise PreconditionError("universal extension needs Hom(s, x) = 0")
    q = x.quiver
    end_x = end_dim(x)
    first = _sigma_bar_core(s, x)
    if hom_dim(s, first.output) != 0:
        raise ConsistencyError("upward extension left a map from s behind")
    second = _sigma_under_core(s, first.output)
    out = second.output
    if out.dims != reflected_dim(q, x.dims, s.dims):
        raise ConsistencyError("output dimensions disagree with the reflection formula")
    if end_dim(out) != predicted_end_dim(q, x.dims, s.dims, end_x, "forward"):
        raise ConsistencyError("output End dimension disagrees with the prediction")
    return FunctorResult(
        output=out,
        multiplicity=first.multiplicity + second.multiplicity,
        witness=None,
        exact=True,
        stages=(first, second),
    )


def _sigma_bar_inv_core(s: Representation, x: Representation) -> FunctorResult:
    q, F = x.quiver, x.field
    hb = hom_basis(x, s)
    r = hb.dimension
    sub = kernel_intersection(x, s, hom=hb)
    projection = tuple(
        vstack([el[i] for el in hb.elements], field=F, ncols=x.dims[i])
        for i in range(q.vertex_count)
    )
    witness = ExactSequenceWitness(sub=sub.induced, middle=x, quotient=power(s, r),
                                   inclusion=sub.vertex_maps, projection=projection)
    witness.check_morphisms()
    return FunctorResult(output=sub.induced, multiplicity=r, witness=witness,
                         exact=witness.is_exact())


def sigma_bar_inv(s: Representation, x: Representation) -> FunctorResult:
    """Peel the s-socle part: the intersection of the kernels of all x -> s."""
    check_compatible(s, x)
    _require_exceptional(s)
    if ext_dim_formula(s, x) != 0:
        raise PreconditionError("inverse upward extension needs Ext1(s, x) = 0")
    return _sigma_bar_inv_core(s, x)


def _sigma_under_inv_core(s: Representation, y: Representation) -> FunctorResult:
    q, F = y.quiver, y.field
    hb = hom_basis(s, y)
    m = hb.dimension
    quot = image_sum_quotient(s, y, hom=hb)
    inclusion = tuple(
        hstack([el[i] for el in hb.elements], field=F, nrows=y.dims[i])
        for i in range(q.vertex_count)
    )
    witness = ExactSequenceWitness(sub=power(s, m), middle=y, quotient=quot.induced,
                                   inclusion=inclusion, projection=quot.vertex_maps)
    witness.check_morphisms()
    return FunctorResult(output=quot.induced, multiplicity=m, witness=witness,
                         exact=witness.is_exact())


def sigma_under_inv(s: Representation, y: Representation) -> FunctorResult:
    """Quotient by the sum of the images of all maps s -> y."""
    check_compatible(s, y)
    _require_exceptional(s)
    if ext_dim_formula(y, s) != 0:
        raise PreconditionError("inverse downward extension needs Ext1(y, s) = 0")
    return _sigma_under_inv_core(s, y)


def sigma_inv(s: Representation, x: Representation) -> FunctorResult:
    """Inverse of the universal extension functor: quotient, then kernels.

    Requires Ext1(s, x) = 0 = Ext1(x, s).  On inputs outside the domain
    category the stages still run; the recorded witnesses then fail their
    rank conditions or the output keeps a Hom against s, and callers can
    inspect which.
    """
    check_compatible(s, x)
    _require_exceptional(s)
    if ext_dim_formula(s, x) != 0:
        raise PreconditionError("inverse universal extension needs Ext1(s, x) = 0")
    if ext_dim_formula(x, s) != 0:
        raise PreconditionError("inverse universal extension needs Ext1(x, s) = 0")
    first = _sigma_under_inv_core(s, x)
    second = _sigma_bar_inv_core(s, first.output)
    return FunctorResult(
        output=second.output,
        multiplicity=first.multiplicity + second.multiplicity,
        witness=None,
        exact=first.exact and second.exact,
        stages=(first, second),
    )

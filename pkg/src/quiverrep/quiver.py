"""Quivers, dimension vectors, the Euler form and Weyl reflection machinery.

Vertices are 1-based.  Dimension vectors are plain integer tuples and may go
negative while reflections are applied; positivity is only demanded where a
root has to be positive.  Reflection words are tuples of vertex indices whose
leftmost letter acts last.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

DimVector = tuple


@dataclass(frozen=True)
class Arrow:
    label: str
    tail: int
    head: int


@dataclass(frozen=True)
class Quiver:
    """Finite quiver without loops, with labelled arrows."""

    vertex_count: int
    arrows: tuple[Arrow, ...]

    def __post_init__(self) -> None:
        n = self.vertex_count
        if n < 1:
            raise ValueError("a quiver needs at least one vertex")
        seen: set[str] = set()
        for a in self.arrows:
            if not (1 <= a.tail <= n and 1 <= a.head <= n):
                raise ValueError(f"arrow {a.label!r}: endpoints must lie in 1..{n}")
            if a.tail == a.head:
                raise ValueError(f"arrow {a.label!r}: loops are not allowed")
            if a.label in seen:
                raise ValueError(f"duplicate arrow label {a.label!r}")
            seen.add(a.label)

    @classmethod
    def build(cls, vertex_count: int, arrows: Iterable[tuple[str, int, int]]) -> "Quiver":
        return cls(vertex_count, tuple(Arrow(l, t, h) for l, t, h in arrows))

    @cached_property
    def _neighbors(self) -> tuple[tuple[int, ...], ...]:
        # opposite endpoints of all incident arrows, with multiplicity, 0-based
        nbrs: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for a in self.arrows:
            nbrs[a.tail - 1].append(a.head - 1)
            nbrs[a.head - 1].append(a.tail - 1)
        return tuple(tuple(x) for x in nbrs)

    @cached_property
    def arrow_index(self) -> dict[str, int]:
        return {a.label: i for i, a in enumerate(self.arrows)}

    def unit_vector(self, i: int) -> DimVector:
        self.check_vertex(i)
        return tuple(1 if j == i - 1 else 0 for j in range(self.vertex_count))

    def zero_vector(self) -> DimVector:
        return (0,) * self.vertex_count

    def check_vertex(self, i: int) -> None:
        if not (1 <= i <= self.vertex_count):
            raise ValueError(f"vertex {i} out of range 1..{self.vertex_count}")

    def check_vector(self, v: Sequence[int]) -> None:
        if len(v) != self.vertex_count:
            raise ValueError(f"vector length {len(v)} does not match {self.vertex_count} vertices")


def euler_form(q: Quiver, a: Sequence[int], b: Sequence[int]) -> int:
    """The (non-symmetric) Euler form <a,b> of two dimension vectors."""
    q.check_vector(a)
    q.check_vector(b)
    total = sum(x * y for x, y in zip(a, b))
    total -= sum(a[ar.tail - 1] * b[ar.head - 1] for ar in q.arrows)
    return total


def sym_form(q: Quiver, a: Sequence[int], b: Sequence[int]) -> int:
    """Symmetrized Euler form (a,b) = <a,b> + <b,a>."""
    return euler_form(q, a, b) + euler_form(q, b, a)


def _sym_with_unit(q: Quiver, a: Sequence[int], i0: int) -> int:
    # (a, e_i) for 0-based i0, using that every vertex is loop-free
    return 2 * a[i0] - sum(a[j] for j in q._neighbors[i0])


def simple_reflection(q: Quiver, i: int, a: Sequence[int]) -> DimVector:
    """The simple reflection s_i(a) = a - (a, e_i) e_i."""
    q.check_vertex(i)
    q.check_vector(a)
    i0 = i - 1
    c = _sym_with_unit(q, a, i0)
    v = list(a)
    v[i0] -= c
    return tuple(v)


def apply_word(q: Quiver, word: Sequence[int], a: Sequence[int]) -> DimVector:
    """Apply a reflection word, rightmost letter first."""
    q.check_vector(a)
    for i in word:
        q.check_vertex(i)
    v = tuple(a)
    for i in reversed(word):
        v = simple_reflection(q, i, v)
    return v


def is_positive_real_root(q: Quiver, a: Sequence[int]) -> bool:
    """Decide whether a lies in the Weyl orbit of a simple root and is > 0.

    Descends by the first simple reflection that strictly lowers the vector;
    stops at a simple root (real), at the fundamental region (imaginary) or
    as soon as a coordinate goes negative (not a root).
    """
    q.check_vector(a)
    v = tuple(int(x) for x in a)
    if any(x < 0 for x in v) or not any(v):
        return False
    while True:
        if sum(v) == 1:
            return True
        i0 = None
        for j in range(q.vertex_count):
            if _sym_with_unit(q, v, j) > 0:
                i0 = j
                break
        if i0 is None:
            return False
        c = _sym_with_unit(q, v, i0)
        w = list(v)
        w[i0] -= c
        if w[i0] < 0:
            return False
        v = tuple(w)


def reflection_word_for_root(q: Quiver, a: Sequence[int]) -> tuple[int, ...]:
    """A word w with apply_word(w, -) the reflection attached to the root a.

    Built by descent: pick the smallest i with s_i(a) < a, recurse on s_i(a),
    and wrap the result in s_i on both sides; a simple root e_j gives (j,).
    In particular apply_word(w, a) == -a.
    """
    if not is_positive_real_root(q, a):
        raise ValueError(f"{tuple(a)} is not a positive real root")
    prefix: list[int] = []
    v = tuple(int(x) for x in a)
    while sum(v) > 1:
        i0 = next(j for j in range(q.vertex_count) if _sym_with_unit(q, v, j) > 0)
        prefix.append(i0 + 1)
        c = _sym_with_unit(q, v, i0)
        w = list(v)
        w[i0] -= c
        v = tuple(w)
    base = v.index(1) + 1
    return tuple(prefix + [base] + list(reversed(prefix)))


def reflection_candidates(q: Quiver, a: Sequence[int]) -> list[DimVector]:
    """Roots strictly below a with both Euler pairings against a nonnegative.

    For the reflection word s_{i_1}..s_{i_n} of a, the roots sent negative by
    the reflection are exactly the vectors s_{i_n}..s_{i_{m+1}}(e_{i_m});
    those are enumerated, deduplicated, filtered by beta < a (componentwise,
    strictly) and <a,beta> >= 0 <= <beta,a>, and returned in lexicographic
    order.
    """
    a = tuple(int(x) for x in a)
    word = reflection_word_for_root(q, a)
    n = len(word)
    raw: set[DimVector] = set()
    for m in range(n):
        v = q.unit_vector(word[m])
        for t in range(m + 1, n):
            v = simple_reflection(q, word[t], v)
        raw.add(v)
    out = []
    for beta in raw:
        if beta == a or any(x > y for x, y in zip(beta, a)):
            continue
        if euler_form(q, a, beta) >= 0 and euler_form(q, beta, a) >= 0:
            out.append(beta)
    return sorted(out)

"""Bundled example data for the counterexample quiver.

The quiver is the 8-vertex tree with three sources feeding vertex 4, an arrow
4 -> 5 and three sinks below vertex 5.  On it live the real root
alpha = (1,1,1,8,12,2,7,7), its unique indecomposable representation X_alpha
(given by explicit 0/1 matrices, hence defined over every field), and the two
auxiliary representations X_beta1 and X_gamma1 used by the verification
pipeline.  The 2-arrow Kronecker quiver is included for small worked cases.
"""

from __future__ import annotations

from .linalg import QQ, Field
from .quiver import Quiver
from .reps import Representation

ALPHA = (1, 1, 1, 8, 12, 2, 7, 7)
ALPHA_WORD = (8, 7, 5, 4, 8, 7, 5, 8, 7, 5, 6, 4, 5, 4, 1, 2, 3)

BETA1 = (0, 0, 0, 1, 2, 0, 1, 1)
BETA2 = (0, 1, 1, 4, 7, 1, 4, 4)
BETA3 = (1, 0, 1, 4, 7, 1, 4, 4)
BETA4 = (1, 1, 0, 4, 7, 1, 4, 4)
GAMMA1 = (1, 1, 1, 3, 2, 2, 2, 2)


def counterexample_quiver() -> Quiver:
    return Quiver.build(
        8,
        [
            ("a", 1, 4),
            ("b", 2, 4),
            ("c", 3, 4),
            ("d", 4, 5),
            ("e", 5, 6),
            ("f", 5, 7),
            ("g", 5, 8),
        ],
    )


_X_ALPHA_A = [[0], [0], [0], [0], [0], [1], [0], [0]]
_X_ALPHA_B = [[0], [0], [0], [0], [0], [0], [1], [0]]
_X_ALPHA_C = [[0], [0], [0], [0], [0], [1], [1], [1]]
_X_ALPHA_D = [
    [1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 1],
]
_X_ALPHA_E = [
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0],
]
_X_ALPHA_F = [
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
]
_X_ALPHA_G = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1],
]


def x_alpha(field: Field = QQ) -> Representation:
    """The unique indecomposable of dimension vector alpha; dim End = 9."""
    base = Representation.build(
        counterexample_quiver(),
        QQ,
        ALPHA,
        {
            "a": _X_ALPHA_A,
            "b": _X_ALPHA_B,
            "c": _X_ALPHA_C,
            "d": _X_ALPHA_D,
            "e": _X_ALPHA_E,
            "f": _X_ALPHA_F,
            "g": _X_ALPHA_G,
        },
    )
    return base.over(field)


def x_beta1(field: Field = QQ) -> Representation:
    """The unique indecomposable of the real Schur root beta1."""
    base = Representation.build(
        counterexample_quiver(),
        QQ,
        BETA1,
        {
            "d": [[1], [1]],
            "f": [[1, 0]],
            "g": [[0, 1]],
        },
    )
    return base.over(field)


def x_gamma1(field: Field = QQ) -> Representation:
    """The unique indecomposable of gamma1 = alpha - (alpha, beta1) * beta1."""
    base = Representation.build(
        counterexample_quiver(),
        QQ,
        GAMMA1,
        {
            "a": [[1], [1], [1]],
            "b": [[0], [1], [0]],
            "c": [[0], [0], [1]],
            "d": [[0, 1, 0], [0, 0, 1]],
            "e": [[1, 0], [0, 1]],
            "f": [[1, 0], [0, 1]],
            "g": [[1, 0], [0, 1]],
        },
    )
    return base.over(field)


def two_kronecker() -> Quiver:
    """Two vertices joined by a double arrow 1 -> 2."""
    return Quiver.build(2, [("u", 1, 2), ("v", 1, 2)])

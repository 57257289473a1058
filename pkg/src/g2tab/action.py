"""The Lie algebra g2 acting on V and, by derivations, on formal sums of fillings.

Basis vectors of V are indexed by :class:`~g2tab.weights.Entry`. The Chevalley
generators below are integral; they were fixed once by solving the bracket
relations together with invariance of the form pairing each weight line with
its negative with coefficient 1. ``tests/test_action.py`` certifies them.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Mapping

import numpy as np

from .formal import FormalSum
from .tableau import Shape
from .weights import ALPHA, BETA, NEGATION, ZERO, Weight


class GeneratorLabel(str, enum.Enum):
    E_ALPHA = "e_alpha"
    F_ALPHA = "f_alpha"
    E_BETA = "e_beta"
    F_BETA = "f_beta"
    H_ALPHA = "h_alpha"
    H_BETA = "h_beta"

    @property
    def shift(self) -> Weight:
        return _SHIFTS[self]


_SHIFTS = {
    GeneratorLabel.E_ALPHA: ALPHA,
    GeneratorLabel.F_ALPHA: -ALPHA,
    GeneratorLabel.E_BETA: BETA,
    GeneratorLabel.F_BETA: -BETA,
    GeneratorLabel.H_ALPHA: ZERO,
    GeneratorLabel.H_BETA: ZERO,
}

RAISING_LOWERING = (
    GeneratorLabel.E_ALPHA,
    GeneratorLabel.F_ALPHA,
    GeneratorLabel.E_BETA,
    GeneratorLabel.F_BETA,
)

# (row, column, value): generator maps basis line `column` to value * line `row`
_NONZERO: dict[GeneratorLabel, tuple[tuple[int, int, int], ...]] = {
    GeneratorLabel.E_ALPHA: ((0, 3, -1), (2, 5, 1), (4, 6, -1), (6, 1, 1)),
    GeneratorLabel.F_ALPHA: ((1, 6, 2), (3, 0, -1), (5, 2, 1), (6, 4, -2)),
    GeneratorLabel.E_BETA: ((1, 2, 1), (3, 4, -1)),
    GeneratorLabel.F_BETA: ((2, 1, 1), (4, 3, -1)),
    GeneratorLabel.H_ALPHA: tuple((i, i, v) for i, v in enumerate((1, -2, 1, -1, 2, -1, 0)) if v),
    GeneratorLabel.H_BETA: tuple((i, i, v) for i, v in enumerate((0, 1, -1, 1, -1, 0, 0)) if v),
}

# IMAGES[g][e] lists (entry, coefficient) pairs of g applied to basis vector e
IMAGES: dict[GeneratorLabel, tuple[tuple[tuple[int, int], ...], ...]] = {}
for _g, _nz in _NONZERO.items():
    _cols: list[list[tuple[int, int]]] = [[] for _ in range(7)]
    for _r, _c, _v in _nz:
        _cols[_c].append((_r, _v))
    IMAGES[_g] = tuple(tuple(c) for c in _cols)


def as_label(g) -> GeneratorLabel:
    return g if isinstance(g, GeneratorLabel) else GeneratorLabel(g)


def generator_matrix(g) -> np.ndarray:
    """7x7 matrix of Fractions; entry [i, j] is the coefficient of e_i in g(e_j)."""
    m = np.array([[Fraction(0)] * 7 for _ in range(7)], dtype=object)
    for r, c, v in _NONZERO[as_label(g)]:
        m[r, c] = Fraction(v)
    return m


def invariant_form_matrix() -> np.ndarray:
    j = np.array([[Fraction(0)] * 7 for _ in range(7)], dtype=object)
    for e in range(7):
        j[e, NEGATION[e]] = Fraction(1)
    return j


def apply_to_fillings(g, terms: Mapping[tuple[int, ...], object]) -> dict[tuple[int, ...], object]:
    """Derivation action on a dict filling -> coefficient."""
    images = IMAGES[as_label(g)]
    out: dict[tuple[int, ...], object] = {}
    for f, c in terms.items():
        for i, e in enumerate(f):
            for target, v in images[e]:
                h = f[:i] + (target,) + f[i + 1 :]
                out[h] = out.get(h, 0) + v * c
    return {k: v for k, v in out.items() if v != 0}


def apply_generator(g, x: FormalSum) -> FormalSum:
    """Apply a generator to a formal sum box by box (Leibniz rule)."""
    return FormalSum.from_fillings(x.shape, apply_to_fillings(g, dict(x.fillings())))


def orthogonal_invariant(shape=Shape(2, 0)) -> FormalSum:
    """The two-box tensor sum_e v_e (x) v_{-e} on the first two boxes of a 2-box shape."""
    return FormalSum.from_fillings(shape, {(e, NEGATION[e]): 1 for e in range(7)})

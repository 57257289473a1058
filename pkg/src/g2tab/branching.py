"""Restriction of G2 irreducibles to the long-root subgroup G' of type A2.

``W(c, d)`` is the G' irreducible with highest weight c*alpha1 + d*alpha2, where
alpha1 = 2a+b and alpha2 = a+b are the highest weights of the two 3-dimensional
summands of V.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .reptheory import dim_gl3, weight_multiplicities, weyl_dim_g2
from .tableau import Shape, _semistandard
from .weights import ENTRY_WEIGHTS, Entry, Weight

A1, A2, Z = Entry.TWO_A_B, Entry.A_B, Entry.ZERO


def branch_multiplicity(a: int, b: int, c: int, d: int) -> int:
    """Multiplicity of W(c, d) in V_{a,b}, by the closed-form min rule."""
    if min(a, b, c, d) < 0:
        raise ValueError("arguments must be nonnegative")
    if c + d <= a + 2 * b and c <= a + b and d <= a + b and b <= c + d:
        return min(a + 2 * b - c - d + 1, a + b - c + 1, a + b - d + 1, c + d - b + 1, a + 1, b + 1)
    return 0


def repaired_multiplicity(a: int, b: int, c: int, d: int) -> int:
    """The min rule with c+1 and d+1 added to the minimum.

    Agrees with both the highest-weight tableaux and character restriction,
    whereas :func:`branch_multiplicity` overcounts once a >= 2 and b >= 1.
    """
    m = branch_multiplicity(a, b, c, d)
    return min(m, c + 1, d + 1) if m else 0


RULES = {"formula": branch_multiplicity, "repaired": repaired_multiplicity}


def _is_hw_tableau(shape: Shape, f) -> bool:
    p, q = shape.p, shape.q
    if not _semistandard(shape, f):
        return False
    top, bottom = f[:p], f[p:]
    if any(e not in (A1, A2, Z) for e in top):
        return False
    for j, e in enumerate(bottom):
        if e == A2:
            if top[j] != A1:
                return False
        elif e == Z:
            if top[j] == Z:
                return False
        else:
            return False
    return True


def hw_tableaux(a: int, b: int):
    """Semistandard tableaux of shape (a+b, b) that are highest weight vectors for G'."""
    shape = Shape(a + b, b)
    for top in combinations_with_replacement((A1, A2, Z), shape.p):
        for bottom in combinations_with_replacement((A2, Z), shape.q):
            f = top + bottom
            if _is_hw_tableau(shape, f):
                yield f


def hw_tableaux_counts(a: int, b: int) -> dict[tuple[int, int], int]:
    counts: Counter = Counter()
    for f in hw_tableaux(a, b):
        counts[(f.count(A1), f.count(A2))] += 1
    return dict(counts)


@dataclass(frozen=True)
class BranchTable:
    a: int
    b: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def dimension(self) -> int:
        return sum(m * dim_gl3(c, d) for (c, d), m in self.entries.items())

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "entries": [[c, d, m] for (c, d), m in sorted(self.entries.items())]}


def branch_table(a: int, b: int, rule: str = "formula") -> BranchTable:
    mult = RULES[rule]
    entries = {}
    for c in range(a + b + 1):
        for d in range(a + b + 1):
            m = mult(a, b, c, d)
            if m:
                entries[(c, d)] = m
    return BranchTable(a, b, entries)


@dataclass(frozen=True)
class BranchingCheck:
    formula_vs_tableaux: bool
    dimension_sum: bool

    @property
    def ok(self) -> bool:
        return self.formula_vs_tableaux and self.dimension_sum

    def to_json(self) -> dict:
        return {"formula_vs_tableaux": self.formula_vs_tableaux, "dimension_sum": self.dimension_sum}


def verify_branching(a: int, b: int, rule: str = "formula") -> BranchingCheck:
    table = branch_table(a, b, rule)
    return BranchingCheck(
        formula_vs_tableaux=hw_tableaux_counts(a, b) == table.entries,
        dimension_sum=table.dimension() == weyl_dim_g2(a, b),
    )


# -- restriction of characters ----------------------------------------------

# letters 1, 2, 3 of C^3 carry the weights of 2a+b, -a, -a-b
_LETTER_WEIGHTS = (ENTRY_WEIGHTS[0], ENTRY_WEIGHTS[1], ENTRY_WEIGHTS[2])


def levi_character(c: int, d: int) -> Counter:
    """Weights of W(c, d): semistandard tableaux of shape (c+d, d) in three letters."""
    shape = Shape(c + d, d)
    chars: Counter = Counter()
    for top in combinations_with_replacement(range(3), shape.p):
        for bottom in combinations_with_replacement(range(3), shape.q):
            if all(top[j] < bottom[j] for j in range(shape.q)):
                x = y = 0
                for i in top + bottom:
                    x += _LETTER_WEIGHTS[i][0]
                    y += _LETTER_WEIGHTS[i][1]
                chars[Weight(x, y)] += 1
    return chars


def restrict_character(a: int, b: int) -> dict[tuple[int, int], int]:
    """Decompose V_{a,b} under G' by peeling highest weights off its character."""
    remaining = Counter(weight_multiplicities(a, b))
    out: dict[tuple[int, int], int] = {}
    while remaining:
        # x + 2y is positive on every positive long root
        top = max(remaining, key=lambda w: (w.x + 2 * w.y, w.x))
        c, d = top.x - top.y, 2 * top.y - top.x
        if c < 0 or d < 0:
            raise AssertionError(f"{top} is not G'-dominant")
        m = remaining[top]
        out[(c, d)] = m
        for w, k in levi_character(c, d).items():
            remaining[w] -= m * k
            if remaining[w] == 0:
                del remaining[w]
            elif remaining[w] < 0:
                raise AssertionError("negative multiplicity while restricting")
    return out

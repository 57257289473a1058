"""Root and weight arithmetic for G2.

Weights are written in the basis of simple roots: ``Weight(x, y)`` stands for
``x*alpha + y*beta`` where ``alpha`` is the short simple root and ``beta`` the
long one. The inner product is normalised so that ``(alpha, alpha) = 2``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Optional


class Weight(NamedTuple):
    x: int
    y: int

    def __add__(self, other):  # type: ignore[override]
        return Weight(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return Weight(self.x - other[0], self.y - other[1])

    def __neg__(self):
        return Weight(-self.x, -self.y)

    def __mul__(self, k):  # type: ignore[override]
        return Weight(k * self.x, k * self.y)

    __rmul__ = __mul__

    def to_json(self) -> list[int]:
        return [self.x, self.y]

    def __repr__(self) -> str:
        return f"Weight({self.x}, {self.y})"


ZERO = Weight(0, 0)
ALPHA = Weight(1, 0)
BETA = Weight(0, 1)
LAMBDA1 = Weight(2, 1)
LAMBDA2 = Weight(3, 2)


class VClass(enum.Enum):
    V1 = "V1"
    V2 = "V2"
    NEITHER = "Neither"


class Entry(enum.IntEnum):
    """The seven weights of the 7-dimensional representation, in tableau order."""

    TWO_A_B = 0
    NEG_A = 1
    NEG_A_B = 2
    A_B = 3
    A = 4
    NEG_TWO_A_B = 5
    ZERO = 6

    @property
    def weight(self) -> Weight:
        return ENTRY_WEIGHTS[self]

    @property
    def symbol(self) -> str:
        return SYMBOLS[self]

    @property
    def vclass(self) -> VClass:
        return vclass(self)

    def __neg__(self) -> "Entry":
        return Entry(NEGATION[self])

    @classmethod
    def from_symbol(cls, s: str) -> "Entry":
        try:
            return cls(SYMBOLS.index(s.strip()))
        except ValueError:
            raise ValueError(f"unknown entry symbol {s!r}") from None


# indexed by Entry value
ENTRY_WEIGHTS: tuple[Weight, ...] = (
    Weight(2, 1),
    Weight(-1, 0),
    Weight(-1, -1),
    Weight(1, 1),
    Weight(1, 0),
    Weight(-2, -1),
    Weight(0, 0),
)
SYMBOLS: tuple[str, ...] = ("2a+b", "-a", "-a-b", "a+b", "a", "-2a-b", "0")
NEGATION: tuple[int, ...] = (5, 4, 3, 2, 1, 0, 6)
_CLASSES = (VClass.V1,) * 3 + (VClass.V2,) * 3 + (VClass.NEITHER,)

# G' highest weights of the two 3-dimensional summands
ALPHA1 = Entry.TWO_A_B
ALPHA2 = Entry.A_B


def entry_weight(e: int) -> Weight:
    return ENTRY_WEIGHTS[e]


def compare(e: int, f: int) -> int:
    """Three-way comparison in the tableau order: -1, 0 or 1."""
    return (e > f) - (e < f)


def negate_entry(e: int) -> Entry:
    return Entry(NEGATION[e])


def vclass(e: int) -> VClass:
    return _CLASSES[e]


def inner(u, v) -> int:
    return 2 * u[0] * v[0] - 3 * (u[0] * v[1] + u[1] * v[0]) + 6 * u[1] * v[1]


def pairing(w, root) -> int:
    """The coroot pairing <w, root^vee> = 2(w, root)/(root, root)."""
    num, den = 2 * inner(w, root), inner(root, root)
    if num % den:
        raise ValueError(f"{w} does not pair integrally with {root}")
    return num // den


SIMPLE_ROOTS = {"alpha": ALPHA, "beta": BETA}


def simple_reflection(s: str, w) -> Weight:
    """Reflect ``w`` in the hyperplane of the simple root named ``s`` ("alpha" or "beta")."""
    root = SIMPLE_ROOTS[s]
    k = pairing(w, root)
    return Weight(w[0] - k * root[0], w[1] - k * root[1])


def to_fundamental(w) -> Optional[tuple[int, int]]:
    """Coordinates (a, b) with w = a*lambda1 + b*lambda2, or None if w is not dominant."""
    a, b = 2 * w[0] - 3 * w[1], 2 * w[1] - w[0]
    if a < 0 or b < 0:
        return None
    return a, b


def from_fundamental(a: int, b: int) -> Weight:
    return Weight(2 * a + 3 * b, a + 2 * b)


def dominant_conjugate(w) -> Weight:
    """The unique dominant weight in the Weyl orbit of ``w``."""
    w = Weight(*w)
    while True:
        if pairing(w, ALPHA) < 0:
            w = simple_reflection("alpha", w)
        elif pairing(w, BETA) < 0:
            w = simple_reflection("beta", w)
        else:
            return w


def weyl_orbit(w) -> set[Weight]:
    orbit = {Weight(*w)}
    stack = list(orbit)
    while stack:
        u = stack.pop()
        for s in SIMPLE_ROOTS:
            v = simple_reflection(s, u)
            if v not in orbit:
                orbit.add(v)
                stack.append(v)
    return orbit


@dataclass(frozen=True)
class RootSystem:
    positive_roots: tuple[Weight, ...]
    rho: Weight
    gram: tuple[tuple[int, int], tuple[int, int]]

    @property
    def roots(self) -> tuple[Weight, ...]:
        return self.positive_roots + tuple(-r for r in self.positive_roots)

    @property
    def short_roots(self) -> tuple[Weight, ...]:
        return tuple(r for r in self.roots if inner(r, r) == 2)

    @property
    def long_roots(self) -> tuple[Weight, ...]:
        return tuple(r for r in self.roots if inner(r, r) == 6)


G2 = RootSystem(
    positive_roots=(Weight(1, 0), Weight(0, 1), Weight(1, 1), Weight(2, 1), Weight(3, 1), Weight(3, 2)),
    rho=Weight(5, 3),
    gram=((2, -3), (-3, 6)),
)

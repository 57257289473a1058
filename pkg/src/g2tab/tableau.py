"""Two-row vector tableaux filled with weights of the 7-dimensional representation."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from typing import Iterable, Iterator, Sequence

from .weights import ENTRY_WEIGHTS, SYMBOLS, Entry, VClass, Weight, vclass

# entries of each class occupy a contiguous run of indices: V1 = 0..2, V2 = 3..5
_CLASS_ID = (1, 1, 1, 2, 2, 2, 0)


@dataclass(frozen=True, order=True)
class Shape:
    p: int
    q: int = 0

    def __post_init__(self):
        if not (isinstance(self.p, int) and isinstance(self.q, int)):
            raise TypeError("shape lengths must be integers")
        if self.q < 0 or self.p < self.q:
            raise ValueError(f"invalid shape ({self.p},{self.q}): need p >= q >= 0")

    @classmethod
    def parse(cls, text: str) -> "Shape":
        """Parse ``"p,q"`` or ``"p"``."""
        parts = [s for s in text.replace("(", "").replace(")", "").split(",") if s.strip()]
        if not 1 <= len(parts) <= 2:
            raise ValueError(f"cannot parse shape {text!r}")
        return cls(*(int(s) for s in parts))

    @classmethod
    def from_highest_weight(cls, a: int, b: int) -> "Shape":
        return cls(a + b, b)

    @property
    def highest_weight(self) -> tuple[int, int]:
        return self.p - self.q, self.q

    @property
    def n(self) -> int:
        return self.p + self.q

    def box(self, row: int, col: int) -> int:
        """Row-major position of the box in ``row`` (0 or 1) and ``col``."""
        if row == 0 and 0 <= col < self.p:
            return col
        if row == 1 and 0 <= col < self.q:
            return self.p + col
        raise IndexError(f"no box at ({row},{col}) in shape {self}")

    def column_of(self, i: int) -> int:
        return i if i < self.p else i - self.p

    def columns(self) -> list[tuple[int, ...]]:
        """Box positions of each column, top first."""
        return [(j, self.p + j) if j < self.q else (j,) for j in range(self.p)]

    def to_json(self) -> list[int]:
        return [self.p, self.q]

    def __str__(self) -> str:
        return f"({self.p},{self.q})"


def as_shape(shape) -> Shape:
    if isinstance(shape, Shape):
        return shape
    if isinstance(shape, str):
        return Shape.parse(shape)
    return Shape(*shape)


def encode(entries: Sequence[int]) -> int:
    """Base-7 canonical index, first box most significant."""
    k = 0
    for e in entries:
        k = 7 * k + e
    return k


def decode(index: int, n: int) -> tuple[int, ...]:
    if not 0 <= index < 7**n:
        raise ValueError(f"index {index} out of range for {n} boxes")
    out = [0] * n
    for i in range(n - 1, -1, -1):
        index, out[i] = divmod(index, 7)
    return tuple(out)


def filling_weight(entries: Iterable[int]) -> Weight:
    x = y = 0
    for e in entries:
        w = ENTRY_WEIGHTS[e]
        x += w[0]
        y += w[1]
    return Weight(x, y)


@dataclass(frozen=True)
class Tableau:
    shape: Shape
    entries: tuple[Entry, ...]

    def __post_init__(self):
        if len(self.entries) != self.shape.n:
            raise ValueError(f"shape {self.shape} needs {self.shape.n} entries, got {len(self.entries)}")
        object.__setattr__(self, "entries", tuple(Entry(e) for e in self.entries))

    @classmethod
    def from_rows(cls, *rows: Sequence) -> "Tableau":
        rows = [[e if isinstance(e, int) else Entry.from_symbol(e) for e in r] for r in rows]
        top = rows[0] if rows else []
        bottom = rows[1] if len(rows) > 1 else []
        if len(rows) > 2:
            raise ValueError("at most two rows")
        return cls(Shape(len(top), len(bottom)), tuple(top) + tuple(bottom))

    @classmethod
    def column(cls, top: int, bottom: int) -> "Tableau":
        return cls(Shape(1, 1), (top, bottom))

    @classmethod
    def from_index(cls, shape, index: int) -> "Tableau":
        shape = as_shape(shape)
        return cls(shape, decode(index, shape.n))

    @property
    def index(self) -> int:
        return encode(self.entries)

    @property
    def rows(self) -> tuple[tuple[Entry, ...], tuple[Entry, ...]]:
        p = self.shape.p
        return self.entries[:p], self.entries[p:]

    def weight(self) -> Weight:
        return filling_weight(self.entries)

    def to_json(self) -> dict:
        top, bottom = self.rows
        return {"shape": self.shape.to_json(), "rows": [[e.symbol for e in top], [e.symbol for e in bottom]]}

    @classmethod
    def from_json(cls, obj) -> "Tableau":
        if isinstance(obj, str):
            obj = json.loads(obj)
        t = cls.from_rows(*obj["rows"])
        if list(obj.get("shape", t.shape.to_json())) != t.shape.to_json():
            raise ValueError("shape does not match rows")
        return t

    def to_csv(self) -> str:
        return ";".join(",".join(e.symbol for e in row) for row in self.rows)

    def __str__(self) -> str:
        top, bottom = self.rows
        lines = [" ".join(f"{e.symbol:>5}" for e in top)]
        if bottom:
            lines.append(" ".join(f"{e.symbol:>5}" for e in bottom))
        return "\n".join(lines)


def weight_of(t: Tableau) -> Weight:
    return t.weight()


# -- predicates on raw fillings ---------------------------------------------


def _semistandard(shape: Shape, f: Sequence[int]) -> bool:
    p, q = shape.p, shape.q
    for j in range(1, p):
        if f[j - 1] > f[j]:
            return False
    for j in range(1, q):
        if f[p + j - 1] > f[p + j]:
            return False
    return all(f[j] < f[p + j] for j in range(q))


def _g2_conditions(shape: Shape, f: Sequence[int]) -> bool:
    """Rules (b)-(d); assumes nothing about semistandardness."""
    p, q = shape.p, shape.q
    for j in range(q):
        c = _CLASS_ID[f[j]]
        if c and c == _CLASS_ID[f[p + j]]:
            return False
    n = p + q
    for i in range(n):
        ci = _CLASS_ID[f[i]]
        if not ci:
            continue
        coli = i if i < p else i - p
        for k in range(i + 1, n):
            if _CLASS_ID[f[k]] != ci:
                continue
            colk = k if k < p else k - p
            if coli < colk and f[i] > f[k]:
                return False
            if colk < coli and f[k] > f[i]:
                return False
    return not (Entry.TWO_A_B in f and Entry.NEG_TWO_A_B in f)


def is_semistandard(t: Tableau) -> bool:
    return _semistandard(t.shape, t.entries)


def is_g2_tableau(t: Tableau) -> bool:
    """Semistandard, no column inside a single class, same-class entries weakly
    increasing left to right across columns, and not both 2a+b and -2a-b."""
    return _semistandard(t.shape, t.entries) and _g2_conditions(t.shape, t.entries)


def is_g2_filling(shape, f: Sequence[int]) -> bool:
    shape = as_shape(shape)
    return _semistandard(shape, f) and _g2_conditions(shape, f)


# -- enumeration ------------------------------------------------------------


def fillings(shape) -> Iterator[tuple[int, ...]]:
    shape = as_shape(shape)
    return product(range(7), repeat=shape.n)


def _rows_above(lower: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Weakly increasing rows r with r[j] >= lower[j], in lexicographic order."""
    q = len(lower)
    row = [0] * q

    def rec(j: int, floor: int):
        if j == q:
            yield tuple(row)
            return
        for v in range(max(floor, lower[j]), 7):
            row[j] = v
            yield from rec(j + 1, v)

    return rec(0, 0)


def semistandard_fillings(shape) -> Iterator[tuple[int, ...]]:
    shape = as_shape(shape)
    p, q = shape.p, shape.q
    for top in combinations_with_replacement(range(7), p):
        lower = [top[j] + 1 for j in range(q)]
        if q and max(lower) > 6:
            continue
        for bottom in _rows_above(lower):
            yield top + bottom


def g2_fillings(shape) -> Iterator[tuple[int, ...]]:
    shape = as_shape(shape)
    p, q = shape.p, shape.q
    for top in combinations_with_replacement(range(7), p):
        if 0 in top and 5 in top:
            continue
        if any(top[j] >= 6 for j in range(q)):
            continue
        # smallest same-class entry strictly to the right of each column in row 1
        right_min = [[7, 7, 7] for _ in range(p + 1)]
        for j in range(p - 1, -1, -1):
            right_min[j] = list(right_min[j + 1])
            c = _CLASS_ID[top[j]]
            if c:
                right_min[j][c] = top[j]
        has0 = 0 in top
        has5 = 5 in top
        bottom = [0] * q

        def rec(j: int, floor: int):
            if j == q:
                yield top + tuple(bottom)
                return
            above = top[j]
            cabove = _CLASS_ID[above]
            for v in range(max(floor, above + 1), 7):
                c = _CLASS_ID[v]
                if c:
                    if c == cabove:
                        continue
                    if v > right_min[j + 1][c]:
                        # later v's are larger still, or of another class
                        continue
                if (v == 0 and has5) or (v == 5 and has0):
                    continue
                bottom[j] = v
                yield from rec(j + 1, v)

        yield from rec(0, 0)


def _wrap(shape: Shape, it: Iterable[tuple[int, ...]]) -> Iterator[Tableau]:
    for f in it:
        yield Tableau(shape, f)


def enumerate_fillings(shape) -> Iterator[Tableau]:
    shape = as_shape(shape)
    return _wrap(shape, fillings(shape))


def enumerate_semistandard(shape) -> Iterator[Tableau]:
    shape = as_shape(shape)
    return _wrap(shape, semistandard_fillings(shape))


def enumerate_g2(shape, weight=None) -> Iterator[Tableau]:
    shape = as_shape(shape)
    it = g2_fillings(shape)
    if weight is not None:
        weight = Weight(*weight)
        it = (f for f in it if filling_weight(f) == weight)
    return _wrap(shape, it)


def count_by_weight(fs: Iterable[Sequence[int]]) -> Counter:
    return Counter(filling_weight(f) for f in fs)


def column_class_pair(t: Tableau, j: int) -> tuple[VClass, ...]:
    return tuple(vclass(t.entries[i]) for i in t.shape.columns()[j])


def tableaux_to_csv(ts: Iterable[Tableau]) -> str:
    return "".join(t.to_csv() + "\n" for t in ts)


__all__ = [
    "Shape",
    "Tableau",
    "as_shape",
    "encode",
    "decode",
    "weight_of",
    "filling_weight",
    "is_semistandard",
    "is_g2_tableau",
    "is_g2_filling",
    "enumerate_fillings",
    "enumerate_semistandard",
    "enumerate_g2",
    "fillings",
    "semistandard_fillings",
    "g2_fillings",
    "count_by_weight",
    "tableaux_to_csv",
    "SYMBOLS",
]

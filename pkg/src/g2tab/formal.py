"""Sparse formal linear combinations of fillings of one shape."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .tableau import Shape, Tableau, as_shape, decode, encode


class MixedShapes(ValueError):
    """Raised when tableaux of different shapes are combined in one sum."""


@dataclass
class FormalSum:
    """A vector of V_lambda: canonical index -> coefficient, zero coefficients dropped."""

    shape: Shape
    terms: dict[int, object] = field(default_factory=dict)

    def __post_init__(self):
        self.shape = as_shape(self.shape)
        limit = 7**self.shape.n
        clean = {}
        for k, c in self.terms.items():
            if not 0 <= k < limit:
                raise ValueError(f"index {k} out of range for shape {self.shape}")
            if c != 0:
                clean[k] = c
        self.terms = clean

    @classmethod
    def of(cls, items: Iterable[tuple[Tableau, object]], shape=None) -> "FormalSum":
        acc: dict[int, object] = {}
        for t, c in items:
            if shape is None:
                shape = t.shape
            elif t.shape != as_shape(shape):
                raise MixedShapes(f"{t.shape} != {shape}")
            k = t.index
            acc[k] = acc.get(k, 0) + c
        if shape is None:
            raise ValueError("empty sum needs an explicit shape")
        return cls(shape, acc)

    @classmethod
    def from_fillings(cls, shape, items: Mapping[tuple[int, ...], object]) -> "FormalSum":
        acc: dict[int, object] = {}
        for f, c in items.items():
            k = encode(f)
            acc[k] = acc.get(k, 0) + c
        return cls(shape, acc)

    @classmethod
    def single(cls, t: Tableau, c=1) -> "FormalSum":
        return cls(t.shape, {t.index: c})

    def fillings(self) -> Iterator[tuple[tuple[int, ...], object]]:
        n = self.shape.n
        for k, c in sorted(self.terms.items()):
            yield decode(k, n), c

    def items(self) -> Iterator[tuple[Tableau, object]]:
        for f, c in self.fillings():
            yield Tableau(self.shape, f), c

    def coefficient(self, t: Tableau) -> object:
        if t.shape != self.shape:
            raise MixedShapes(f"{t.shape} != {self.shape}")
        return self.terms.get(t.index, 0)

    def _check(self, other: "FormalSum"):
        if other.shape != self.shape:
            raise MixedShapes(f"{other.shape} != {self.shape}")

    def __add__(self, other: "FormalSum") -> "FormalSum":
        self._check(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc.get(k, 0) + c
        return FormalSum(self.shape, acc)

    def __neg__(self) -> "FormalSum":
        return FormalSum(self.shape, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + (-other)

    def __rmul__(self, c) -> "FormalSum":
        return FormalSum(self.shape, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self.shape == other.shape and self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def weights(self) -> set:
        from .tableau import filling_weight

        return {filling_weight(f) for f, _ in self.fillings()}

    def to_json(self) -> dict:
        return {
            "shape": self.shape.to_json(),
            "terms": [[t.to_json()["rows"], str(c)] for t, c in self.items()],
        }

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*{t.to_csv()}" for t, c in self.items()) or "0"
        return f"FormalSum{self.shape}[{body}]"

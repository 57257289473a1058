"""Dense row echelon forms over a prime field or the rationals, one weight block at a time.

Prime moduli below 2**31 run on int64 arrays; products of two residues then fit
in 62 bits and matrix products are split into 16-bit halves. Larger moduli and
the rationals fall back to object arrays of Python numbers.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

import numpy as np

DEFAULT_MODULUS = 2**31 - 1
SECOND_MODULUS = 2**31 - 19
_FAST_LIMIT = 2**31
_SPLIT = 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for sp in small:
        if n % sp == 0:
            return n == sp
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.3e24
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    def __init__(self, p: int = DEFAULT_MODULUS):
        if p <= 2**30 or not is_prime(p):
            raise ValueError(f"modulus must be a prime above 2**30, got {p}")
        self.p = p
        self.fast = p < _FAST_LIMIT
        self.dtype = np.int64 if self.fast else object

    @property
    def label(self):
        return self.p

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("F", self.p))

    def array(self, data) -> np.ndarray:
        a = np.array(data, dtype=self.dtype)
        return a % self.p

    def zeros(self, shape) -> np.ndarray:
        return np.zeros(shape, dtype=self.dtype)

    def reduce(self, a: np.ndarray) -> np.ndarray:
        return a % self.p

    def inv(self, x) -> int:
        return pow(int(x), -1, self.p)

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """a @ b for reduced residues."""
        if not self.fast:
            return a.dot(b) % self.p
        if a.shape[1] >= 2**16:
            raise OverflowError("inner dimension too large for split products")
        lo = a & ((1 << _SPLIT) - 1)
        hi = a >> _SPLIT
        return (((hi @ b) % self.p << _SPLIT) + lo @ b) % self.p

    def matmul_small(self, a: np.ndarray, m: np.ndarray) -> np.ndarray:
        """a @ m where m has small integer entries (an action matrix)."""
        if not self.fast:
            return a.dot(m.astype(object)) % self.p
        return (a @ m) % self.p

    def to_python(self, x) -> int:
        return int(x)

    def scalar(self, x):
        if isinstance(x, Fraction):
            return x.numerator % self.p * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p


class RationalField:
    dtype = object
    label = "exact"

    def __repr__(self) -> str:
        return "RationalField()"

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("Q")

    def array(self, data) -> np.ndarray:
        a = np.array(data, dtype=object)
        return a

    def zeros(self, shape) -> np.ndarray:
        z = np.empty(shape, dtype=object)
        z.fill(0)
        return z

    def reduce(self, a: np.ndarray) -> np.ndarray:
        return a

    def inv(self, x) -> Fraction:
        return Fraction(1) / x

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if a.shape[1] == 0:
            return self.zeros((a.shape[0], b.shape[1]))
        return a.dot(b)

    def matmul_small(self, a: np.ndarray, m: np.ndarray) -> np.ndarray:
        return self.matmul(a, m.astype(object))

    def to_python(self, x) -> Fraction:
        return Fraction(x)

    def scalar(self, x):
        return Fraction(x)


def make_field(mode) -> "PrimeField | RationalField":
    """``"exact"`` / None-like for the rationals, an int (or numeric string) for F_p."""
    if isinstance(mode, (PrimeField, RationalField)):
        return mode
    if mode in (None, "exact", "rational", "Q"):
        return RationalField()
    return PrimeField(int(mode))


def _nonzero_rows(a: np.ndarray) -> np.ndarray:
    if a.dtype == object:
        return np.array([i for i in range(a.shape[0]) if any(a[i])], dtype=np.intp)
    return np.flatnonzero(a.any(axis=1))


def rref(field, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; returns the nonzero rows and their pivot columns."""
    a = a.copy()
    k, d = a.shape
    r = 0
    pivots: list[int] = []
    for c in range(d):
        if r == k:
            break
        nz = np.flatnonzero(a[r:, c] != 0)
        if not len(nz):
            continue
        i = r + nz[0]
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = field.reduce(a[r] * field.inv(a[r, c]))
        col = a[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col != 0)
        if len(hit):
            a[hit] = field.reduce(a[hit] - field.reduce(np.outer(col[hit], a[r])))
        pivots.append(c)
        r += 1
    return a[:r], pivots


class BlockEliminator:
    """A subspace of field^dim kept as a reduced row echelon basis."""

    def __init__(self, field, dim: int):
        self.field = field
        self.dim = dim
        self.rows = field.zeros((0, dim))
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, v: np.ndarray) -> np.ndarray:
        """Remainder of each row of ``v`` modulo the span; zero at every pivot column."""
        v = self.field.reduce(v)
        if not self.pivots or not len(v):
            return v
        return self.field.reduce(v - self.field.matmul(v[:, self.pivots], self.rows))

    def contains(self, v: np.ndarray) -> bool:
        return not np.any(self.reduce(v) != 0)

    def add(self, v: np.ndarray) -> np.ndarray:
        """Enlarge the span by the rows of ``v``; return a basis of what was new."""
        if not len(v):
            return self.field.zeros((0, self.dim))
        w = self.reduce(v)
        w = w[_nonzero_rows(w)]
        if not len(w):
            return self.field.zeros((0, self.dim))
        new, newp = rref(self.field, w)
        if self.pivots:
            self.rows = self.field.reduce(self.rows - self.field.matmul(self.rows[:, newp], new))
        rows = np.vstack([self.rows, new]) if self.pivots else new
        pivots = self.pivots + newp
        order = np.argsort(pivots, kind="stable")
        self.rows = rows[order]
        self.pivots = [pivots[i] for i in order]
        return new

    def rank_with(self, extra: np.ndarray) -> int:
        """Rank of the span enlarged by ``extra``, without modifying this basis."""
        w = self.reduce(extra)
        w = w[_nonzero_rows(w)]
        if not len(w):
            return self.rank
        return self.rank + len(rref(self.field, w)[1])

    def solve_remainder(self, v: np.ndarray) -> np.ndarray:
        return self.reduce(v.reshape(1, -1))[0]


def rational_reconstruct(a: int, p: int) -> Optional[Fraction]:
    """Smallest fraction n/d with n = a*d mod p and |n|, d <= sqrt(p/2)."""
    a %= p
    bound = int((p // 2) ** 0.5)
    r0, r1 = p, a
    s0, s1 = 0, 1
    while r1 > bound:
        qt = r0 // r1
        r0, r1 = r1, r0 - qt * r1
        s0, s1 = s1, s0 - qt * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    return Fraction(r1, s1)

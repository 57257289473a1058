"""Dimension and weight-multiplicity oracles: Weyl's formula, Freudenthal's recursion, hook-content."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .tableau import as_shape, filling_weight, g2_fillings
from .weights import G2, Weight, dominant_conjugate, from_fundamental, inner, to_fundamental, weyl_orbit


class HighestWeight(NamedTuple):
    a: int
    b: int

    @property
    def weight(self) -> Weight:
        return from_fundamental(self.a, self.b)

    @property
    def shape(self):
        from .tableau import Shape

        return Shape(self.a + self.b, self.b)

    @classmethod
    def of_shape(cls, shape) -> "HighestWeight":
        shape = as_shape(shape)
        return cls(shape.p - shape.q, shape.q)


def _check(*args: int):
    if any(not isinstance(v, int) or v < 0 for v in args):
        raise ValueError(f"expected nonnegative integers, got {args}")


def weyl_dim_g2(a: int, b: int) -> int:
    """prod over positive roots g of (lambda + rho, g) / (rho, g)."""
    _check(a, b)
    lam_rho = from_fundamental(a, b) + G2.rho
    d = Fraction(1)
    for g in G2.positive_roots:
        d *= Fraction(inner(lam_rho, g), inner(G2.rho, g))
    assert d.denominator == 1
    return int(d)


def weyl_dim_g2_closed(a: int, b: int) -> int:
    _check(a, b)
    num = (a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3) * (a + 3 * b + 4) * (2 * a + 3 * b + 5)
    return num // 120


def dim_gl3(c: int, d: int) -> int:
    """Dimension of the G' irreducible with highest weight c*alpha1 + d*alpha2."""
    _check(c, d)
    return (c + 1) * (d + 1) * (c + d + 2) // 2


def dim_gl(n: int, partition) -> int:
    """Hook-content formula for the GL_n irreducible of the given partition."""
    parts = [x for x in partition if x]
    conj = [sum(1 for x in parts if x > j) for j in range(parts[0])] if parts else []
    num = den = 1
    for i, row in enumerate(parts):
        for j in range(row):
            num *= n + j - i
            den *= (row - j - 1) + (conj[j] - i - 1) + 1
    return num // den


@lru_cache(maxsize=None)
def _dominant_multiplicities(a: int, b: int) -> dict[Weight, int]:
    lam = from_fundamental(a, b)
    rho = G2.rho
    top = inner(lam + rho, lam + rho)
    dominant = []
    for m in range(2 * lam.x + 1):
        for n in range(2 * lam.y + 1):
            mu = lam - Weight(m, n)
            if to_fundamental(mu) is not None:
                dominant.append((m + n, mu))
    dominant.sort()
    mult: dict[Weight, int] = {lam: 1}

    def lookup(nu: Weight) -> int:
        return mult.get(dominant_conjugate(nu), 0)

    for _, mu in dominant:
        if mu == lam:
            continue
        acc = 0
        for g in G2.positive_roots:
            k = 1
            while True:
                nu = mu + k * g
                if nu.x > lam.x or nu.y > lam.y:
                    break
                acc += lookup(nu) * inner(nu, g)
                k += 1
        den = top - inner(mu + rho, mu + rho)
        m, r = divmod(2 * acc, den)
        assert r == 0 and den > 0, (a, b, mu)
        if m:
            mult[mu] = m
    return mult


def weight_multiplicities(a: int, b: int) -> dict[Weight, int]:
    """Full weight diagram of V_{a,b}."""
    _check(a, b)
    out = {}
    for mu, m in _dominant_multiplicities(a, b).items():
        for nu in weyl_orbit(mu):
            out[nu] = m
    return out


def freudenthal(a: int, b: int, mu) -> int:
    """Multiplicity of the weight ``mu`` in V_{a,b}."""
    _check(a, b)
    lam = from_fundamental(a, b)
    d = dominant_conjugate(Weight(*mu))
    if d.x > lam.x or d.y > lam.y:
        return 0
    return _dominant_multiplicities(a, b).get(d, 0)


def character_counts(shape) -> Counter:
    """Number of G2 tableaux of the shape in each weight."""
    return Counter(filling_weight(f) for f in g2_fillings(as_shape(shape)))

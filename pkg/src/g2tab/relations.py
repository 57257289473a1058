"""Relation families on V_lambda, their closure under g2, and the quotient S_lambda.

All computations run in a :class:`WorkingSpace`. By default that is V_lambda
modulo the alternating relations and the symmetry of single-box columns: both
families are spans of one- and two-term relations, both are stable under the
group, and both belong to every relation space we build, so quotienting by them
first loses nothing and shrinks 7**n coordinates to a few thousand. Ranks
reported by :class:`RelationBasis` are always ranks inside V_lambda itself.
"""

from __future__ import annotations

import json
import logging
import math
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product
from pathlib import Path
from typing import Iterable, Iterator, Optional

import numpy as np

from .action import IMAGES, RAISING_LOWERING, GeneratorLabel, as_label
from .formal import FormalSum, MixedShapes
from .linalg import DEFAULT_MODULUS, BlockEliminator, PrimeField, RationalField, make_field, rational_reconstruct
from .tableau import Shape, Tableau, as_shape, encode, filling_weight, g2_fillings
from .weights import NEGATION, Weight

log = logging.getLogger(__name__)

CACHE_VERSION = 1
DEFAULT_MODE = DEFAULT_MODULUS

FAMILIES = ("alternating", "exchange", "orthogonal", "pairing", "exclusion", "transposition")
# the subset whose quotient has the Weyl dimension in every tested degree
CONSISTENT_FAMILIES = ("alternating", "exchange", "orthogonal", "pairing")
# spans of these are stable under g2 and are built into the reduced working space
SYMMETRY_FAMILIES = ("alternating", "row_symmetry")

_CLASS_ID = (1, 1, 1, 2, 2, 2, 0)
_V1 = (0, 1, 2)
_V2 = (3, 4, 5)


class CertificateMissing(RuntimeError):
    """Straightening was requested before the shape's basis certificate was established."""


# -- raw families: dicts filling -> integer coefficient ----------------------


def _free_assignments(shape: Shape, fixed: Iterable[int], reduced: bool) -> Iterator[list[Optional[int]]]:
    """Templates filling every box outside ``fixed``.

    With ``reduced`` only one representative per symmetry class of the free part
    is produced: columns lying entirely in the free part get increasing entries,
    free single-box columns get a sorted multiset. Other representatives differ
    from these by alternating/row-symmetry relations, which are already quotiented out.
    """
    fixed = set(fixed)
    p, q, n = shape.p, shape.q, shape.n
    groups: list[tuple[tuple[int, ...], list[tuple[int, ...]]]] = []
    loose: list[int] = []
    singles: list[int] = []
    for j in range(p):
        boxes = (j, p + j) if j < q else (j,)
        free = [b for b in boxes if b not in fixed]
        if len(boxes) == 2 and len(free) == 2:
            vals = list(combinations(range(7), 2)) if reduced else list(product(range(7), repeat=2))
            groups.append((boxes, vals))
        elif len(boxes) == 1 and free:
            singles.append(boxes[0])
        else:
            loose.extend(free)
    if singles:
        if reduced:
            vals = list(combinations_with_replacement(range(7), len(singles)))
        else:
            vals = list(product(range(7), repeat=len(singles)))
        groups.append((tuple(singles), vals))
    for b in loose:
        groups.append(((b,), [(v,) for v in range(7)]))
    for choice in product(*(vals for _, vals in groups)):
        t: list[Optional[int]] = [None] * n
        for (boxes, _), vals in zip(groups, choice):
            for b, v in zip(boxes, vals):
                t[b] = v
        yield t


def _emit(template: list, assign: Iterable[tuple[dict[int, int], int]]) -> dict[tuple[int, ...], int]:
    out: dict[tuple[int, ...], int] = {}
    for placement, coef in assign:
        t = list(template)
        for b, v in placement.items():
            t[b] = v
        key = tuple(t)
        out[key] = out.get(key, 0) + coef
    return {k: v for k, v in out.items() if v}


def _alternating(shape: Shape, reduced: bool = False):
    p = shape.p
    for j in range(shape.q):
        top, bot = j, p + j
        for t in _free_assignments(shape, (top, bot), reduced):
            for a in range(7):
                for b in range(a, 7):
                    yield _emit(t, [({top: a, bot: b}, 1), ({top: b, bot: a}, 1)])


def _row_symmetry(shape: Shape, reduced: bool = False):
    for j, k in combinations(range(shape.q, shape.p), 2):
        for t in _free_assignments(shape, (j, k), reduced):
            for c in range(7):
                for d in range(c + 1, 7):
                    yield _emit(t, [({j: c, k: d}, 1), ({j: d, k: c}, -1)])


def _exchange(shape: Shape, reduced: bool = False):
    p, q = shape.p, shape.q
    # two full columns: [ab][cd] - [ac][bd] + [ad][bc]
    for j, k in combinations(range(q), 2):
        tj, bj, tk, bk = j, p + j, k, p + k
        for t in _free_assignments(shape, (tj, bj, tk, bk), reduced):
            for a, b, c, d in product(range(7), repeat=4):
                g = _emit(
                    t,
                    [
                        ({tj: a, bj: b, tk: c, bk: d}, 1),
                        ({tj: a, bj: c, tk: b, bk: d}, -1),
                        ({tj: a, bj: d, tk: b, bk: c}, 1),
                    ],
                )
                if g:
                    yield g
    # full column against a single box: [ab]c - [ac]b + [bc]a
    for j in range(q):
        for k in range(q, p):
            tj, bj = j, p + j
            for t in _free_assignments(shape, (tj, bj, k), reduced):
                for a, b, c in product(range(7), repeat=3):
                    g = _emit(t, [({tj: a, bj: b, k: c}, 1), ({tj: a, bj: c, k: b}, -1), ({tj: b, bj: c, k: a}, 1)])
                    if g:
                        yield g
    yield from _row_symmetry(shape, reduced)


def _orthogonal(shape: Shape, reduced: bool = False):
    for i, k in combinations(range(shape.n), 2):
        for t in _free_assignments(shape, (i, k), reduced):
            yield _emit(t, [({i: e, k: NEGATION[e]}, 1) for e in range(7)])


def _pairing(shape: Shape, reduced: bool = False):
    p = shape.p
    for j in range(shape.q):
        top, bot = j, p + j
        for t in _free_assignments(shape, (top, bot), reduced):
            for cls in (_V1, _V2):
                yield _emit(t, [({top: w, bot: NEGATION[w]}, 1) for w in cls])


def _exclusion(shape: Shape, reduced: bool = False):
    p = shape.p
    for j in range(shape.q):
        top, bot = j, p + j
        for t in _free_assignments(shape, (top, bot), reduced):
            for cls in (_V1, _V2):
                for a, b in product(cls, repeat=2):
                    yield _emit(t, [({top: a, bot: b}, 1)])


def _transposition(shape: Shape, reduced: bool = False):
    for i, k in combinations(range(shape.n), 2):
        if shape.column_of(i) == shape.column_of(k):
            continue
        for t in _free_assignments(shape, (i, k), reduced):
            for cls in (_V1, _V2):
                for u, v in combinations(cls, 2):
                    yield _emit(t, [({i: u, k: v}, 1), ({i: v, k: u}, -1)])


_RAW = {
    "alternating": _alternating,
    "row_symmetry": _row_symmetry,
    "exchange": _exchange,
    "orthogonal": _orthogonal,
    "pairing": _pairing,
    "exclusion": _exclusion,
    "transposition": _transposition,
}


def family_terms(name: str, shape, reduced: bool = False) -> Iterator[dict[tuple[int, ...], int]]:
    """Raw generators of a family as dicts filling -> integer coefficient."""
    return _RAW[name](as_shape(shape), reduced)


def _as_sums(name: str, shape) -> Iterator[FormalSum]:
    shape = as_shape(shape)
    for g in _RAW[name](shape, False):
        yield FormalSum.from_fillings(shape, g)


def alternating_generators(shape) -> Iterator[FormalSum]:
    """T + (T with a two-box column flipped); empty when there is no such column."""
    return _as_sums("alternating", shape)


def exchange_generators(shape) -> Iterator[FormalSum]:
    """Three-term exchanges between columns, and symmetry of single-box columns."""
    return _as_sums("exchange", shape)


def orthogonal_generators(shape) -> Iterator[FormalSum]:
    return _as_sums("orthogonal", shape)


def pairing_generators(shape) -> Iterator[FormalSum]:
    return _as_sums("pairing", shape)


def exclusion_generators(shape) -> Iterator[FormalSum]:
    return _as_sums("exclusion", shape)


def transposition_generators(shape) -> Iterator[FormalSum]:
    return _as_sums("transposition", shape)


# -- working space ----------------------------------------------------------


class WorkingSpace:
    """Weight-graded coordinates for V_lambda, or for V_lambda modulo the symmetry families.

    Inside every weight block the G2 tableaux come last, so echelon pivots land
    on the other fillings first.
    """

    def __init__(self, shape, reduced: bool = True):
        self.shape = shape = as_shape(shape)
        self.reduced = reduced
        p, q, n = shape.p, shape.q, shape.n
        if reduced:
            cols = list(combinations(range(7), 2))
            ones = list(combinations_with_replacement(range(7), p - q))
            basis = []
            for cs in product(cols, repeat=q):
                top = tuple(c[0] for c in cs)
                bottom = tuple(c[1] for c in cs)
                for o in ones:
                    basis.append(top + o + bottom)
        else:
            basis = list(product(range(7), repeat=n))
        self.dim = len(basis)
        self.base_rank = 7**n - self.dim
        g2 = set(g2_fillings(shape))
        by_weight: dict[Weight, list[tuple[int, ...]]] = defaultdict(list)
        for f in sorted(basis, key=encode):
            by_weight[filling_weight(f)].append(f)
        self.blocks: dict[Weight, list[tuple[int, ...]]] = {}
        self.g2_start: dict[Weight, int] = {}
        self.position: dict[tuple[int, ...], tuple[Weight, int]] = {}
        for mu in sorted(by_weight):
            fs = by_weight[mu]
            other = [f for f in fs if f not in g2]
            mine = [f for f in fs if f in g2]
            self.blocks[mu] = other + mine
            self.g2_start[mu] = len(other)
            for i, f in enumerate(self.blocks[mu]):
                self.position[f] = (mu, i)
        self.g2_count = sum(len(b) - self.g2_start[mu] for mu, b in self.blocks.items())
        self._action: dict[tuple[GeneratorLabel, Weight], np.ndarray] = {}

    def canonical(self, f: tuple[int, ...]) -> Optional[tuple[int, tuple[int, ...]]]:
        """(sign, representative) of a filling, or None if it lies in the symmetry span."""
        if not self.reduced:
            return 1, f
        p, q = self.shape.p, self.shape.q
        g = list(f)
        sign = 1
        for j in range(q):
            a, b = g[j], g[p + j]
            if a == b:
                return None
            if a > b:
                g[j], g[p + j] = b, a
                sign = -sign
        g[q:p] = sorted(g[q:p])
        return sign, tuple(g)

    def project(self, terms: dict[tuple[int, ...], object]) -> dict[tuple[int, ...], object]:
        out: dict[tuple[int, ...], object] = {}
        for f, c in terms.items():
            cf = self.canonical(f)
            if cf is None:
                continue
            s, g = cf
            out[g] = out.get(g, 0) + s * c
        return {k: v for k, v in out.items() if v != 0}

    def block_dim(self, mu) -> int:
        return len(self.blocks.get(Weight(*mu), ()))

    def fillings_of_weight(self, mu) -> int:
        """Number of fillings of V_lambda (not of the working space) of weight ``mu``."""
        return _filling_weight_counts(self.shape.n).get(Weight(*mu), 0)

    def action_matrix(self, g, mu: Weight) -> Optional[np.ndarray]:
        """Integer matrix of a raising/lowering generator from block ``mu`` to ``mu + shift``."""
        g = as_label(g)
        key = (g, mu)
        if key in self._action:
            return self._action[key]
        target = mu + g.shift
        if target not in self.blocks:
            self._action[key] = None
            return None
        src = self.blocks[mu]
        m = np.zeros((len(self.blocks[target]), len(src)), dtype=np.int64)
        images = IMAGES[g]
        for col, f in enumerate(src):
            for i, e in enumerate(f):
                for t, v in images[e]:
                    cf = self.canonical(f[:i] + (t,) + f[i + 1 :])
                    if cf is None:
                        continue
                    s, h = cf
                    m[self.position[h][1], col] += s * v
        self._action[key] = m
        return m

    def vector(self, field, terms: dict[tuple[int, ...], object]) -> tuple[Weight, np.ndarray]:
        """Dense block vector of a weight-homogeneous projected sum."""
        mu = None
        for f in terms:
            w = self.position[f][0]
            if mu is None:
                mu = w
            elif w != mu:
                raise ValueError("sum is not weight-homogeneous")
        if mu is None:
            raise ValueError("empty sum")
        v = field.zeros(len(self.blocks[mu]))
        for f, c in terms.items():
            v[self.position[f][1]] = field.scalar(c)
        return mu, v


_WEIGHT_COUNTS: dict[int, dict[Weight, int]] = {}


def _filling_weight_counts(n: int) -> dict[Weight, int]:
    """Weight multiplicities of the n-fold tensor power of V."""
    if n not in _WEIGHT_COUNTS:
        counts = {Weight(0, 0): 1}
        from .weights import ENTRY_WEIGHTS

        for _ in range(n):
            nxt: dict[Weight, int] = defaultdict(int)
            for w, c in counts.items():
                for e in ENTRY_WEIGHTS:
                    nxt[w + e] += c
            counts = dict(nxt)
        _WEIGHT_COUNTS[n] = counts
    return _WEIGHT_COUNTS[n]


def _normalise(terms: dict[tuple[int, ...], int]) -> tuple:
    items = sorted(terms.items())
    g = 0
    for _, c in items:
        g = math.gcd(g, c)
    if items[0][1] < 0:
        g = -g
    return tuple((k, c // g) for k, c in items)


# -- relation bases ---------------------------------------------------------


@dataclass
class Certificate:
    shape: Shape
    modulus: object
    relation_rank: int
    quotient_dim: int
    graded: dict[Weight, int]
    g2_count: int
    spanning: bool
    independent: bool

    @property
    def counts(self) -> tuple[int, int]:
        return self.g2_count, self.quotient_dim

    @property
    def ok(self) -> bool:
        return self.spanning and self.independent

    def to_json(self) -> dict:
        return {
            "shape": self.shape.to_json(),
            "modulus": self.modulus,
            "relation_rank": self.relation_rank,
            "quotient_dim": self.quotient_dim,
            "graded": [[list(w), d] for w, d in sorted(self.graded.items()) if d],
            "spanning": self.spanning,
            "independent": self.independent,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, obj: dict, g2_count: Optional[int] = None) -> "Certificate":
        graded = {Weight(*w): d for w, d in obj["graded"]}
        return cls(
            shape=Shape(*obj["shape"]),
            modulus=obj["modulus"],
            relation_rank=obj["relation_rank"],
            quotient_dim=obj["quotient_dim"],
            graded=graded,
            g2_count=g2_count if g2_count is not None else obj.get("g2_count", obj["quotient_dim"]),
            spanning=obj["spanning"],
            independent=obj["independent"],
        )


class RelationBasis:
    """A g2-closed relation subspace of V_lambda, stored block by block in echelon form."""

    def __init__(self, space: WorkingSpace, field=None):
        self.space = space
        self.shape = space.shape
        self.field = make_field(DEFAULT_MODE if field is None else field)
        self.blocks: dict[Weight, BlockEliminator] = {
            mu: BlockEliminator(self.field, len(fs)) for mu, fs in space.blocks.items()
        }
        self._frontier: dict[Weight, list[np.ndarray]] = defaultdict(list)
        self.certificate: Optional[Certificate] = None

    # ranks
    @property
    def rank(self) -> int:
        return self.space.base_rank + sum(b.rank for b in self.blocks.values())

    def graded_rank(self, mu) -> int:
        """Rank of the relation space in weight ``mu`` of V_lambda."""
        mu = Weight(*mu)
        b = self.blocks.get(mu)
        return self.space.fillings_of_weight(mu) - self.space.block_dim(mu) + (b.rank if b else 0)

    def grading(self) -> dict[Weight, int]:
        return {mu: self.graded_rank(mu) for mu in _filling_weight_counts(self.shape.n)}

    @property
    def quotient_dim(self) -> int:
        return 7**self.shape.n - self.rank

    def weight_graded_dims(self) -> dict[Weight, int]:
        counts = _filling_weight_counts(self.shape.n)
        return {mu: c - self.graded_rank(mu) for mu, c in sorted(counts.items())}

    # building
    def add_terms(self, gens: Iterable[dict[tuple[int, ...], int]], *, enqueue: bool = True) -> None:
        """Project raw generators into the working space and add them, deduplicated."""
        seen: set = set()
        pending: dict[Weight, list[np.ndarray]] = defaultdict(list)
        for g in gens:
            t = self.space.project(g)
            if not t:
                continue
            key = _normalise(t)
            if key in seen:
                continue
            seen.add(key)
            mu, v = self.space.vector(self.field, t)
            pending[mu].append(v)
        for mu, vs in pending.items():
            new = self.blocks[mu].add(np.vstack(vs))
            if enqueue and len(new):
                self._frontier[mu].append(new)

    def add(self, gens: Iterable[FormalSum], *, enqueue: bool = True) -> None:
        def raw():
            for x in gens:
                if x.shape != self.shape:
                    raise MixedShapes(f"{x.shape} != {self.shape}")
                yield dict(x.fillings())

        self.add_terms(raw(), enqueue=enqueue)

    def close(self) -> int:
        """Saturate under the four raising/lowering generators; return the number of rounds."""
        rounds = 0
        while self._frontier:
            rounds += 1
            frontier, self._frontier = self._frontier, defaultdict(list)
            candidates: dict[Weight, list[np.ndarray]] = defaultdict(list)
            for mu, chunks in frontier.items():
                rows = np.vstack(chunks) if len(chunks) > 1 else chunks[0]
                for g in RAISING_LOWERING:
                    m = self.space.action_matrix(g, mu)
                    if m is None:
                        continue
                    img = self.field.matmul_small(rows, m.T)
                    candidates[mu + g.shift].append(img)
            for mu, imgs in candidates.items():
                new = self.blocks[mu].add(np.vstack(imgs))
                if len(new):
                    self._frontier[mu].append(new)
            log.debug("closure round %d: rank %d", rounds, self.rank)
        return rounds

    # queries
    def is_stable(self) -> bool:
        """Every generator maps every basis row back into the span."""
        for mu, b in self.blocks.items():
            if not b.rank:
                continue
            for g in RAISING_LOWERING:
                m = self.space.action_matrix(g, mu)
                if m is None:
                    continue
                img = self.field.matmul_small(b.rows, m.T)
                if not self.blocks[mu + g.shift].contains(img):
                    return False
        return True

    def contains(self, x: FormalSum) -> bool:
        if x.shape != self.shape:
            raise MixedShapes(f"{x.shape} != {self.shape}")
        t = self.space.project(dict(x.fillings()))
        by_mu: dict[Weight, dict] = defaultdict(dict)
        for f, c in t.items():
            by_mu[self.space.position[f][0]][f] = c
        for part in by_mu.values():
            mu, v = self.space.vector(self.field, part)
            if not self.blocks[mu].contains(v.reshape(1, -1)):
                return False
        return True

    def rows(self) -> Iterator[FormalSum]:
        """Basis rows in working-space coordinates, lifted to V_lambda."""
        for mu, b in self.blocks.items():
            fs = self.space.blocks[mu]
            for r in b.rows:
                yield FormalSum.from_fillings(
                    self.shape, {fs[i]: self.field.to_python(r[i]) for i in np.flatnonzero(r != 0)}
                )

    def certify(self) -> Certificate:
        """Check that the G2 tableaux span a complement of the relation space."""
        total = self.space.base_rank
        for mu, b in self.blocks.items():
            d = len(self.space.blocks[mu])
            start = self.space.g2_start[mu]
            units = self.field.zeros((d - start, d))
            for i in range(d - start):
                units[i, start + i] = 1
            total += b.rank_with(units) if len(units) else b.rank
        g2 = self.space.g2_count
        cert = Certificate(
            shape=self.shape,
            modulus=self.field.label,
            relation_rank=self.rank,
            quotient_dim=self.quotient_dim,
            graded={mu: d for mu, d in self.weight_graded_dims().items()},
            g2_count=g2,
            spanning=total == 7**self.shape.n,
            independent=total == self.rank + g2,
        )
        self.certificate = cert
        return cert

    def straighten(self, t: Tableau) -> FormalSum:
        """Expand a filling in the G2-tableau basis of the quotient."""
        if self.certificate is None or not self.certificate.ok:
            raise CertificateMissing(f"no valid basis certificate for shape {self.shape}")
        if t.shape != self.shape:
            raise MixedShapes(f"{t.shape} != {self.shape}")
        cf = self.space.canonical(tuple(t.entries))
        if cf is None:
            return FormalSum(self.shape)
        sign, f = cf
        mu, idx = self.space.position[f]
        fs = self.space.blocks[mu]
        v = self.field.zeros(len(fs))
        v[idx] = self.field.scalar(sign)
        rem = self.blocks[mu].solve_remainder(v)
        out = {}
        for i in np.flatnonzero(rem != 0):
            if i < self.space.g2_start[mu]:
                raise AssertionError("remainder outside the G2 tableaux despite a valid certificate")
            out[fs[i]] = self._present(rem[i])
        return FormalSum.from_fillings(self.shape, out)

    def _present(self, x):
        if isinstance(self.field, PrimeField):
            r = rational_reconstruct(int(x), self.field.p)
            if r is None:
                raise ValueError("coefficient has no small rational lift")
            return r
        return x


def lie_closure(gens: Iterable[FormalSum], shape, *, field=None, reduced: bool = False) -> RelationBasis:
    """Smallest g2-stable subspace containing ``gens``.

    With ``reduced`` the computation runs modulo the symmetry families, so the
    result also contains them.
    """
    rb = RelationBasis(WorkingSpace(shape, reduced=reduced), field)
    rb.add(gens)
    rb.close()
    return rb


def relation_basis(shape, families: Iterable[str] = FAMILIES, *, field=None, close: bool = True) -> RelationBasis:
    """Relation space spanned by ``families`` (plus the symmetry families), closed under g2."""
    shape = as_shape(shape)
    families = tuple(families)
    unknown = set(families) - set(_RAW)
    if unknown:
        raise ValueError(f"unknown relation families {sorted(unknown)}")
    rb = RelationBasis(WorkingSpace(shape, reduced=True), field)

    def gens():
        for name in families:
            if name in SYMMETRY_FAMILIES:
                continue
            yield from family_terms(name, shape, reduced=True)

    rb.add_terms(gens())
    if close:
        rb.close()
    return rb


_MODELS: dict[tuple, RelationBasis] = {}


def _families_key(families) -> tuple[str, ...]:
    families = tuple(FAMILIES if families is None else families)
    unknown = set(families) - set(_RAW)
    if unknown:
        raise ValueError(f"unknown relation families {sorted(unknown)}")
    return tuple(sorted(set(families), key=list(_RAW).index))


def quotient_model(shape, field=None, families=None) -> RelationBasis:
    """The closed relation basis for ``shape`` (memoised per shape, field and families)."""
    shape = as_shape(shape)
    field = make_field(DEFAULT_MODE if field is None else field)
    fams = _families_key(families)
    key = (shape, field.label, fams)
    if key not in _MODELS:
        _MODELS[key] = relation_basis(shape, fams, field=field)
    return _MODELS[key]


def relation_rank(shape, field=None, families=None) -> int:
    return quotient_model(shape, field, families).rank


def quotient_dimension(shape, field=None, families=None) -> int:
    return quotient_model(shape, field, families).quotient_dim


def weight_graded_dims(shape, field=None, families=None) -> dict[Weight, int]:
    return quotient_model(shape, field, families).weight_graded_dims()


def basis_certificate(shape, field=None, families=None) -> Certificate:
    rb = quotient_model(shape, field, families)
    return rb.certificate or rb.certify()


def straighten(t: Tableau, field=None, families=None) -> FormalSum:
    """Straighten using the memoised model of the tableau's shape.

    Raises CertificateMissing unless :func:`basis_certificate` has succeeded for
    that shape, field and family set.
    """
    field = make_field(DEFAULT_MODE if field is None else field)
    rb = _MODELS.get((t.shape, field.label, _families_key(families)))
    if rb is None or rb.certificate is None:
        raise CertificateMissing(f"no basis certificate computed for shape {t.shape}")
    return rb.straighten(t)


# -- on-disk certificate cache ----------------------------------------------


def _families_tag(families) -> str:
    fams = _families_key(families)
    if fams == _families_key(FAMILIES):
        return ""
    return "_" + "-".join(f[:3] for f in fams)


def cache_path(cache_dir, shape, field, families=None) -> Path:
    shape = as_shape(shape)
    field = make_field(field)
    name = f"shape_{shape.p}_{shape.q}_{field.label}{_families_tag(families)}.json"
    return Path(cache_dir) / f"v{CACHE_VERSION}" / name


def load_cached(cache_dir, shape, field, families=None) -> Optional[Certificate]:
    path = cache_path(cache_dir, shape, field, families)
    if not path.exists():
        return None
    try:
        return Certificate.from_json(json.loads(path.read_text()))
    except (ValueError, KeyError):
        log.warning("ignoring unreadable cache file %s", path)
        return None


def store_cached(cache_dir, cert: Certificate, families=None) -> Path:
    path = cache_path(cache_dir, cert.shape, cert.modulus, families)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(cert.dumps() + "\n")
    return path


__all__ = [
    "FAMILIES",
    "CONSISTENT_FAMILIES",
    "SYMMETRY_FAMILIES",
    "CertificateMissing",
    "Certificate",
    "RelationBasis",
    "WorkingSpace",
    "FormalSum",
    "MixedShapes",
    "alternating_generators",
    "exchange_generators",
    "orthogonal_generators",
    "pairing_generators",
    "exclusion_generators",
    "transposition_generators",
    "family_terms",
    "lie_closure",
    "relation_basis",
    "quotient_model",
    "relation_rank",
    "quotient_dimension",
    "weight_graded_dims",
    "basis_certificate",
    "straighten",
    "RationalField",
    "PrimeField",
]

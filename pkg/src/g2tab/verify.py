"""The acceptance suite as data: one :class:`CheckResult` per numbered criterion."""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

import numpy as np

from . import relations as rel
from .action import (
    RAISING_LOWERING,
    GeneratorLabel,
    apply_generator,
    generator_matrix,
    invariant_form_matrix,
    orthogonal_invariant,
)
from .branching import branch_table, hw_tableaux_counts
from .linalg import DEFAULT_MODULUS, SECOND_MODULUS, make_field
from .reptheory import dim_gl, freudenthal, weyl_dim_g2
from .tableau import Shape, count_by_weight, g2_fillings
from .weights import ALPHA, BETA, ENTRY_WEIGHTS, pairing


@dataclass(frozen=True)
class CheckResult:
    criterion: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} [{self.criterion:>2}] {self.name}: {self.detail} ({self.seconds:.2f}s)"

    def to_json(self) -> dict:
        return {
            "criterion": self.criterion,
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "seconds": round(self.seconds, 3),
        }


def shapes_up_to(max_boxes: int) -> list[Shape]:
    """Every two-row shape with 1..max_boxes boxes, by box count then longer first row."""
    out = []
    for n in range(1, max_boxes + 1):
        for q in range(n // 2 + 1):
            out.append(Shape(n - q, q))
    return out


def _timed(criterion: int, name: str, fn: Callable[[], tuple[bool, str]], limit: Optional[float] = None):
    t0 = time.perf_counter()
    ok, detail = fn()
    dt = time.perf_counter() - t0
    if limit is not None and dt >= limit:
        ok = False
        detail += f"; exceeded {limit:g}s"
    return CheckResult(criterion, name, ok, detail, dt)


def _mismatches(bad: list, total: int) -> str:
    if not bad:
        return f"{total}/{total} agree"
    head = ", ".join(str(b) for b in bad[:4])
    more = f" (+{len(bad) - 4} more)" if len(bad) > 4 else ""
    return f"{total - len(bad)}/{total} agree; mismatches {head}{more}"


def _label(shape: Shape) -> str:
    return f"({shape.p},{shape.q})"


# -- criteria ---------------------------------------------------------------

SPOT_VALUES = {
    (1, 0): 7, (1, 1): 14, (2, 0): 27, (2, 1): 64, (2, 2): 77, (3, 0): 77,
    (3, 1): 189, (3, 2): 286, (3, 3): 273, (4, 1): 448,
}


def g2_counts(max_p: int = 8) -> CheckResult:
    def run():
        bad, total = [], 0
        for p in range(max_p + 1):
            for q in range(p + 1):
                total += 1
                n = sum(1 for _ in g2_fillings(Shape(p, q)))
                w = weyl_dim_g2(p - q, q)
                if n != w:
                    bad.append((f"({p},{q})", n, w))
        for (p, q), v in SPOT_VALUES.items():
            n = sum(1 for _ in g2_fillings(Shape(p, q)))
            if n != v:
                bad.append((f"spot ({p},{q})", n, v))
        return not bad, _mismatches(bad, total)

    return _timed(1, f"G2 tableau counts equal Weyl dimensions, p <= {max_p}", run, 30.0)


def _models(shapes, field, families, threads: int):
    def build(s):
        rb = rel.quotient_model(s, field, families)
        if rb.certificate is None:
            rb.certify()
        return s, rb

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return dict(pool.map(build, shapes))
    return dict(build(s) for s in shapes)


def quotient_dims(shapes, field=None, families=None, threads: int = 1) -> CheckResult:
    def run():
        models = _models(shapes, field, families, threads)
        bad = []
        for s, rb in models.items():
            w = weyl_dim_g2(s.p - s.q, s.q)
            if rb.quotient_dim != w:
                bad.append((_label(s), rb.quotient_dim, w))
        return not bad, _mismatches(bad, len(shapes))

    return _timed(2, "quotient dimension equals Weyl dimension", run, 600.0)


def certificates(shapes, field=None, families=None, threads: int = 1) -> CheckResult:
    def run():
        models = _models(shapes, field, families, threads)
        bad = []
        for s, rb in models.items():
            c = rb.certificate
            if not c.ok:
                bad.append((_label(s), f"spanning={c.spanning}", f"independent={c.independent}"))
        return not bad, _mismatches(bad, len(shapes))

    return _timed(3, "G2 tableaux are a basis of the quotient", run)


def graded_dims(shapes, field=None, families=None, threads: int = 1) -> CheckResult:
    def run():
        models = _models(shapes, field, families, threads)
        bad, total = [], 0
        for s, rb in models.items():
            a, b = s.p - s.q, s.q
            graded = rb.weight_graded_dims()
            tab = count_by_weight(g2_fillings(s))
            for mu, d in graded.items():
                total += 1
                f = freudenthal(a, b, mu)
                if not d == f == tab.get(mu, 0):
                    bad.append((_label(s), tuple(mu), d, f, tab.get(mu, 0)))
        return not bad, _mismatches(bad, total)

    return _timed(4, "graded quotient = Freudenthal = G2 tableau count per weight", run)


MULTIPLICITY_FACTS = (((0, 1), (1, 1), 1), ((1, 1), (4, 2), 2), ((0, 1), (0, 0), 2))


def multiplicity_facts() -> CheckResult:
    def run():
        bad = []
        for (a, b), mu, want in MULTIPLICITY_FACTS:
            got = freudenthal(a, b, mu)
            if got != want:
                bad.append(((a, b), mu, got, want))
        return not bad, _mismatches(bad, len(MULTIPLICITY_FACTS))

    return _timed(5, "weight multiplicities 1, 2, 2", run, 1.0)


def branching(max_table: int = 5, max_dim: int = 25, rule: str = "formula") -> CheckResult:
    def run():
        parts = []
        bad_pt = [
            (a, b)
            for a in range(max_table + 1)
            for b in range(max_table + 1)
            if hw_tableaux_counts(a, b) != branch_table(a, b, rule).entries
        ]
        parts.append("pointwise " + _mismatches(bad_pt, (max_table + 1) ** 2))
        bad_dim = [
            (a, b)
            for a in range(max_dim + 1)
            for b in range(max_dim + 1)
            if branch_table(a, b, rule).dimension() != weyl_dim_g2(a, b)
        ]
        parts.append("dimension sums " + _mismatches(bad_dim, (max_dim + 1) ** 2))
        v = {(0, 0): 1, (1, 0): 1, (0, 1): 1}
        v_ok = branch_table(1, 0, rule).entries == v == hw_tableaux_counts(1, 0)
        parts.append(f"V = 1+3+3bar {'holds' if v_ok else 'fails'}")
        return not bad_pt and not bad_dim and v_ok, "; ".join(parts)

    return _timed(6, f"branching to A2 ({rule} rule)", run, 10.0)


def _action_problems() -> list[str]:
    m = {g.value: generator_matrix(g) for g in GeneratorLabel}
    j = invariant_form_matrix()
    out = []

    def br(x, y):
        return x.dot(y) - y.dot(x)

    zero = np.zeros((7, 7), dtype=object)
    if not (br(m["e_alpha"], m["f_alpha"]) == m["h_alpha"]).all():
        out.append("[e_alpha,f_alpha] != h_alpha")
    if not (br(m["e_beta"], m["f_beta"]) == m["h_beta"]).all():
        out.append("[e_beta,f_beta] != h_beta")
    if not (br(m["e_alpha"], m["f_beta"]) == zero).all():
        out.append("[e_alpha,f_beta] != 0")
    if not (br(m["e_beta"], m["f_alpha"]) == zero).all():
        out.append("[e_beta,f_alpha] != 0")
    for h, root in (("h_alpha", ALPHA), ("h_beta", BETA)):
        diag = [m[h][i, i] for i in range(7)]
        want = [pairing(ENTRY_WEIGHTS[i], root) for i in range(7)]
        if diag != want or np.count_nonzero(m[h] != 0) != sum(1 for v in want if v):
            out.append(f"{h} eigenvalues")
    for g in RAISING_LOWERING:
        if not (m[g.value].T.dot(j) + j.dot(m[g.value]) == zero).all():
            out.append(f"{g.value} not skew for the form")
        if apply_generator(g, orthogonal_invariant()):
            out.append(f"{g.value} moves the invariant")
    return out


def action_checks() -> CheckResult:
    def run():
        bad = _action_problems()
        return not bad, "all identities hold" if not bad else "; ".join(bad)

    return _timed(7, "Chevalley generators: brackets, Cartan values, invariance", run)


EXCHANGE_ONLY = ("alternating", "exchange")


def exchange_calibration(shapes, field=None) -> CheckResult:
    def run():
        bad = []
        for s in shapes:
            d = rel.quotient_dimension(s, field, EXCHANGE_ONLY)
            w = dim_gl(7, (s.p, s.q))
            if d != w:
                bad.append((_label(s), d, w))
        return not bad, _mismatches(bad, len(shapes))

    return _timed(8, "exchange-only quotients equal GL7 Schur module dimensions", run)


def closure_stability(shapes, field=None, families=None, threads: int = 1) -> CheckResult:
    def run():
        models = _models(shapes, field, families, threads)
        bad = [_label(s) for s, rb in models.items() if not rb.is_stable()]
        return not bad, _mismatches(bad, len(shapes))

    return _timed(9, "relation spaces are stable under the generators", run)


def _signature(shape, field, families):
    rb = rel.quotient_model(shape, field, families)
    c = rb.certificate or rb.certify()
    return c.relation_rank, c.quotient_dim, c.spanning, c.independent, tuple(sorted(c.graded.items()))


def reproducibility(shapes, field=None, second=None, families=None, exact_boxes: int = 4) -> CheckResult:
    first = make_field(DEFAULT_MODULUS if field is None else field)
    other = make_field(SECOND_MODULUS if second is None else second)

    def run():
        bad = []
        for s in shapes:
            sig = _signature(s, first, families)
            if _signature(s, other, families) != sig:
                bad.append((_label(s), f"{first.label} vs {other.label}"))
            if s.n <= exact_boxes and _signature(s, "exact", families) != sig:
                bad.append((_label(s), f"{first.label} vs exact"))
        return not bad, _mismatches(bad, len(shapes))

    return _timed(10, "results agree across two primes and the rationals", run)


# -- the suite ----------------------------------------------------------------


def run_suite(
    max_boxes: int = 5,
    *,
    field=None,
    second=None,
    families=None,
    rule: str = "formula",
    threads: int = 1,
    only: Optional[Iterable[int]] = None,
    on_result: Optional[Callable[[CheckResult], None]] = None,
) -> list[CheckResult]:
    """Run the numbered criteria; relation-space criteria cover shapes up to ``max_boxes``."""
    if max_boxes < 1:
        raise ValueError("max_boxes must be at least 1")
    shapes = shapes_up_to(max_boxes)
    small = [s for s in shapes if s.n <= 4]
    wanted = set(range(1, 11) if only is None else only)
    steps = {
        1: lambda: g2_counts(),
        2: lambda: quotient_dims(shapes, field, families, threads),
        3: lambda: certificates(shapes, field, families, threads),
        4: lambda: graded_dims(shapes, field, families, threads),
        5: multiplicity_facts,
        6: lambda: branching(rule=rule),
        7: action_checks,
        8: lambda: exchange_calibration(small, field),
        9: lambda: closure_stability(shapes, field, families, threads),
        10: lambda: reproducibility(shapes, field, second, families),
    }
    results = []
    for k in sorted(wanted):
        r = steps[k]()
        results.append(r)
        if on_result:
            on_result(r)
    return results


def summary(results: list[CheckResult]) -> Counter:
    return Counter("passed" if r.passed else "failed" for r in results)

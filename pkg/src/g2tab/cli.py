"""Command-line front end.

Exit codes: 0 success, 2 usage error, 3 resource bound exceeded, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from . import relations as rel
from .action import GeneratorLabel, generator_matrix, invariant_form_matrix
from .branching import RULES, branch_table, verify_branching
from .linalg import DEFAULT_MODULUS, SECOND_MODULUS, PrimeField, make_field
from .reptheory import freudenthal, weyl_dim_g2
from .tableau import Shape, count_by_weight, enumerate_fillings, enumerate_g2, enumerate_semistandard, g2_fillings
from .verify import run_suite
from .weights import Weight

EXIT_OK, EXIT_USAGE, EXIT_BOUND, EXIT_FAILED = 0, 2, 3, 4

FAMILY_SETS = {"all": rel.FAMILIES, "consistent": rel.CONSISTENT_FAMILIES}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    scalar_mode: object  # "exact" or a prime
    max_boxes: int
    threads: int
    cache_dir: Optional[Path]
    output: str

    def __post_init__(self):
        if self.max_boxes < 1:
            raise UsageError("max-boxes must be at least 1")
        if self.threads < 1:
            raise UsageError("threads must be at least 1")
        if self.scalar_mode != "exact":
            try:
                PrimeField(int(self.scalar_mode))
            except ValueError as exc:
                raise UsageError(str(exc)) from None

    @property
    def field(self):
        return make_field(self.scalar_mode)

    @classmethod
    def resolve(cls, args: argparse.Namespace, env=os.environ) -> "RunConfig":
        """Flags win over environment variables, which win over defaults."""
        if args.exact:
            mode: object = "exact"
        elif args.modulus is not None:
            mode = args.modulus
        else:
            raw = env.get("G2TAB_MODULUS", "").strip()
            if raw.lower() == "exact":
                mode = "exact"
            elif raw:
                try:
                    mode = int(raw)
                except ValueError:
                    raise UsageError(f"G2TAB_MODULUS must be an integer or 'exact', got {raw!r}") from None
            else:
                mode = DEFAULT_MODULUS
        threads = args.threads
        if threads is None:
            try:
                threads = int(env.get("G2TAB_THREADS", "1"))
            except ValueError:
                raise UsageError("G2TAB_THREADS must be an integer") from None
        if args.no_cache:
            cache = None
        elif args.cache_dir is not None:
            cache = Path(args.cache_dir)
        elif env.get("G2TAB_CACHE"):
            cache = Path(env["G2TAB_CACHE"])
        else:
            base = env.get("XDG_CACHE_HOME") or Path.home() / ".cache"
            cache = Path(base) / "g2tab"
        return cls(mode, args.max_boxes, threads, cache, args.output)


# -- argument types ---------------------------------------------------------


def _nonneg(s: str) -> int:
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {s!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {v}")
    return v


def _shape(s: str) -> Shape:
    try:
        return Shape.parse(s)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _weight(s: str) -> Weight:
    try:
        x, y = (int(v) for v in s.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"weight must be 'x,y', got {s!r}") from None
    return Weight(x, y)


def _families(s: str) -> tuple[str, ...]:
    if s in FAMILY_SETS:
        return FAMILY_SETS[s]
    names = tuple(n.strip() for n in s.split(",") if n.strip())
    unknown = [n for n in names if n not in rel.FAMILIES and n not in rel.SYMMETRY_FAMILIES]
    if unknown or not names:
        raise argparse.ArgumentTypeError(f"unknown relation families: {', '.join(unknown) or s!r}")
    return names


# -- output -----------------------------------------------------------------


def _emit(cfg: RunConfig, obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _emit_rows(cfg: RunConfig, header: Sequence[str], rows: Sequence[Sequence]) -> None:
    if cfg.output == "json":
        for r in rows:
            _emit(cfg, dict(zip(header, r)))
    elif cfg.output == "csv":
        print(",".join(header))
        for r in rows:
            print(",".join(_csv_cell(v) for v in r))
    else:
        cells = [[str(h) for h in header]] + [[_table_cell(v) for v in r] for r in rows]
        widths = [max(len(c[i]) for c in cells) for i in range(len(header))]
        for c in cells:
            print("  ".join(v.rjust(w) for v, w in zip(c, widths)))


def _csv_cell(v) -> str:
    if isinstance(v, (list, tuple)):
        return '"' + ",".join(str(x) for x in v) + '"'
    return str(v)


def _table_cell(v) -> str:
    if isinstance(v, (list, tuple)):
        return "(" + ",".join(str(x) for x in v) + ")"
    return str(v)


# -- commands ---------------------------------------------------------------


def cmd_dim(cfg: RunConfig, args) -> int:
    print(weyl_dim_g2(args.a, args.b))
    return EXIT_OK


def cmd_enumerate(cfg: RunConfig, args) -> int:
    if args.filter == "g2":
        stream = enumerate_g2(args.shape, args.weight)
    else:
        stream = enumerate_fillings(args.shape) if args.filter == "all" else enumerate_semistandard(args.shape)
        if args.weight is not None:
            stream = (t for t in stream if t.weight() == args.weight)
    if args.count:
        print(sum(1 for _ in stream))
        return EXIT_OK
    for t in stream:
        if cfg.output == "json":
            _emit(cfg, t.to_json())
        elif cfg.output == "csv":
            print(t.to_csv())
        else:
            print(t)
            print()
    return EXIT_OK


def cmd_quotient(cfg: RunConfig, args) -> int:
    shape = args.shape
    if shape.n > cfg.max_boxes:
        print(
            f"shape {shape.p},{shape.q} has {shape.n} boxes, above the bound {cfg.max_boxes}; "
            "raise --max-boxes to compute it",
            file=sys.stderr,
        )
        return EXIT_BOUND
    field = cfg.field
    cert = None
    if cfg.cache_dir is not None and not args.refresh:
        cert = rel.load_cached(cfg.cache_dir, shape, field, args.families)
    if cert is None:
        cert = rel.basis_certificate(shape, field, args.families)
        if cfg.cache_dir is not None:
            rel.store_cached(cfg.cache_dir, cert, args.families)
    print(cert.dumps())
    if not cert.ok:
        a, b = shape.p - shape.q, shape.q
        print(
            f"CERTIFICATE FAILED for shape {shape.p},{shape.q}: quotient dimension {cert.quotient_dim}, "
            f"Weyl dimension {weyl_dim_g2(a, b)}, spanning={cert.spanning}, independent={cert.independent}",
            file=sys.stderr,
        )
        return EXIT_FAILED
    return EXIT_OK


def cmd_branch(cfg: RunConfig, args) -> int:
    if args.verify:
        check = verify_branching(args.a, args.b, args.rule)
        _emit(cfg, check.to_json())
        if not check.ok:
            print(f"branching mismatch for V({args.a},{args.b}) under the {args.rule} rule", file=sys.stderr)
            return EXIT_FAILED
        return EXIT_OK
    table = branch_table(args.a, args.b, args.rule)
    if cfg.output == "json":
        _emit(cfg, table.to_json())
    else:
        _emit_rows(cfg, ("c", "d", "multiplicity"), [(c, d, m) for (c, d), m in sorted(table.entries.items())])
    return EXIT_OK


def cmd_character(cfg: RunConfig, args) -> int:
    shape = args.shape
    a, b = shape.p - shape.q, shape.q
    counts = count_by_weight(g2_fillings(shape))
    rows, bad = [], 0
    for mu in sorted(counts):
        f = freudenthal(a, b, mu)
        bad += counts[mu] != f
        rows.append((list(mu), counts[mu], f))
    _emit_rows(cfg, ("weight", "g2_tableaux", "freudenthal"), rows)
    if bad:
        print(f"{bad} weights disagree", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def cmd_matrices(cfg: RunConfig, args) -> int:
    out = {g.value: [[str(x) for x in row] for row in generator_matrix(g)] for g in GeneratorLabel}
    out["form"] = [[str(x) for x in row] for row in invariant_form_matrix()]
    _emit(cfg, out)
    return EXIT_OK


def cmd_verify_all(cfg: RunConfig, args) -> int:
    # a second, different field for the reproducibility check
    second = DEFAULT_MODULUS if cfg.scalar_mode in ("exact", SECOND_MODULUS) else SECOND_MODULUS

    def report(r):
        if cfg.output == "json":
            _emit(cfg, r.to_json())
        else:
            print(r.line(), flush=True)

    results = run_suite(
        cfg.max_boxes,
        field=cfg.field,
        second=second,
        families=args.families,
        rule=args.rule,
        threads=cfg.threads,
        only=args.only,
        on_result=report,
    )
    failed = [r for r in results if not r.passed]
    if failed:
        print(f"FAILED {len(failed)} of {len(results)} checks: {[r.criterion for r in failed]}", file=sys.stderr)
        return EXIT_FAILED
    if cfg.output != "json":
        print(f"PASS all {len(results)} checks")
    return EXIT_OK


# -- parser -----------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("run configuration")
    mode = g.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="exact rational arithmetic")
    mode.add_argument("--modulus", type=int, help="prime modulus above 2**30 (env G2TAB_MODULUS)")
    g.add_argument("--max-boxes", type=int, default=5, help="largest shape to build relation spaces for")
    g.add_argument("--threads", type=int, help="worker threads (env G2TAB_THREADS)")
    g.add_argument("--cache-dir", help="certificate cache directory (env G2TAB_CACHE)")
    g.add_argument("--no-cache", action="store_true")
    g.add_argument("--output", choices=("json", "csv", "table"), default="json")
    g.add_argument("-v", "--verbose", action="store_true")

    p = _Parser(prog="g2tab", description="Tableau model for G2 representations.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("dim", parents=[common], help="Weyl dimension of V(a,b)")
    s.add_argument("--a", type=_nonneg, required=True)
    s.add_argument("--b", type=_nonneg, required=True)
    s.set_defaults(func=cmd_dim)

    s = sub.add_parser("enumerate", parents=[common], help="list or count tableaux of a shape")
    s.add_argument("--shape", type=_shape, required=True, help="p,q")
    s.add_argument("--filter", choices=("all", "semistandard", "g2"), default="g2")
    s.add_argument("--weight", type=_weight, help="x,y in the alpha,beta basis")
    s.add_argument("--count", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("quotient", parents=[common], help="relation rank, quotient and basis certificate")
    s.add_argument("--shape", type=_shape, required=True)
    s.add_argument("--families", type=_families, default=rel.FAMILIES, help="all, consistent, or a comma list")
    s.add_argument("--refresh", action="store_true", help="ignore any cached certificate")
    s.set_defaults(func=cmd_quotient)

    s = sub.add_parser("branch", parents=[common], help="restriction to the long-root A2")
    s.add_argument("--a", type=_nonneg, required=True)
    s.add_argument("--b", type=_nonneg, required=True)
    s.add_argument("--verify", action="store_true")
    s.add_argument("--rule", choices=sorted(RULES), default="formula")
    s.set_defaults(func=cmd_branch)

    s = sub.add_parser("character", parents=[common], help="G2 tableau weights against Freudenthal")
    s.add_argument("--shape", type=_shape, required=True)
    s.set_defaults(func=cmd_character)

    s = sub.add_parser("matrices", parents=[common], help="dump the generator matrices as fractions")
    s.set_defaults(func=cmd_matrices)

    s = sub.add_parser("verify-all", parents=[common], help="run every acceptance check")
    s.add_argument("--families", type=_families, default=rel.FAMILIES)
    s.add_argument("--rule", choices=sorted(RULES), default="formula")
    s.add_argument("--only", type=lambda v: [int(x) for x in v.split(",")], help="criterion numbers, e.g. 1,5,7")
    s.set_defaults(func=cmd_verify_all)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        cfg = RunConfig.resolve(args)
    except UsageError as exc:
        print(f"g2tab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return args.func(cfg, args)


if __name__ == "__main__":
    sys.exit(main())

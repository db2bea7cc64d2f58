"""Batch verification runner and table printer.

Exit codes: 0 all identities held, 1 at least one counterexample,
2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .combinat import stirling_signed
from .identities import conj_P, gen_binom
from .partitions import enumerate_partitions
from .registry import REGISTRY, IdentityReport, check

log = logging.getLogger("genbinom")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

# Conjecture sweeps beyond these caps need --large.
CONJ_N_LIMIT = 6
CONJ_U_LIMIT = 6


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class SweepConfig:
    identity: str
    n_max: int
    r_max: int | None = None
    s_max: int | None = None
    umax: int = 6
    oracle_cap: int = 16
    timing: bool = False
    large: bool = False

    def __post_init__(self):
        if self.r_max is None:
            object.__setattr__(self, "r_max", self.n_max)
        if self.s_max is None:
            object.__setattr__(self, "s_max", self.n_max)
        if self.identity not in REGISTRY:
            raise UsageError(f"unknown identity {self.identity!r}; see `genbinom list`")
        for name in ("n_max", "r_max", "s_max", "umax", "oracle_cap"):
            if getattr(self, name) < 1:
                raise UsageError(f"{name} must be >= 1")
        if REGISTRY[self.identity].conjecture and not self.large:
            if self.n_max > CONJ_N_LIMIT or self.umax > CONJ_U_LIMIT:
                raise UsageError(
                    f"conjecture sweeps above n={CONJ_N_LIMIT}, umax={CONJ_U_LIMIT} need --large"
                )

    def as_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "r_max": self.r_max,
            "s_max": self.s_max,
            "umax": self.umax,
            "oracle_cap": self.oracle_cap,
        }


def _check_task(task):
    identity_id, params, timing = task
    return check(identity_id, params, timing)


def run_sweep(config: SweepConfig, jobs: int = 1) -> list[IdentityReport]:
    """One report per admissible grid point, ordered lexicographically on parameters."""
    identity = REGISTRY[config.identity]
    points = sorted(identity.grid(config), key=lambda p: tuple(p[k] for k in identity.params))
    tasks = [(config.identity, p, config.timing) for p in points]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_check_task, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    return [_check_task(t) for t in tasks]


def summarize(reports: Sequence[IdentityReport]) -> dict:
    passed = sum(r.equal for r in reports)
    return {"total": len(reports), "passed": passed, "failed": len(reports) - passed}


def format_json(config: SweepConfig, reports: Sequence[IdentityReport]) -> str:
    doc = {
        "identity": config.identity,
        "config": config.as_dict(),
        "results": [r.to_dict() for r in reports],
        "summary": summarize(reports),
    }
    return json.dumps(doc, indent=2) + "\n"


def format_tsv(config: SweepConfig, reports: Sequence[IdentityReport]) -> str:
    names = REGISTRY[config.identity].params
    lines = ["\t".join([*names, "lhs", "rhs", "equal", "elapsed_ms"])]
    for r in reports:
        elapsed = "" if r.elapsed_ms is None else str(r.elapsed_ms)
        row = [str(r.params[k]) for k in names] + [r.lhs, r.rhs, str(r.equal).lower(), elapsed]
        lines.append("\t".join(row))
    return "\n".join(lines) + "\n"


# -- tables ------------------------------------------------------------------


def _align(rows: list[list[str]]) -> str:
    widths = [max(len(row[k]) for row in rows if k < len(row)) for k in range(max(map(len, rows)))]
    out = []
    for row in rows:
        cells = [row[0].ljust(widths[0])] + [c.rjust(widths[k]) for k, c in enumerate(row[1:], 1)]
        out.append("  ".join(cells).rstrip())
    return "\n".join(out) + "\n"


def print_table(kind: str, bound: int) -> str:
    """Text table of <lambda,r> (|lambda| <= bound), s(n,k) (n <= bound) or P_jk (j <= bound)."""
    if bound < 1:
        raise UsageError("--max must be >= 1")
    if kind == "stirling":
        rows = [["n\\k"] + [str(k) for k in range(1, bound + 1)]]
        for n in range(1, bound + 1):
            rows.append([str(n)] + [str(stirling_signed(n, k)) for k in range(1, n + 1)])
        return _align(rows)
    if kind == "genbinom":
        rows = [["lambda"] + [f"r={r}" for r in range(1, bound + 1)]]
        for n in range(1, bound + 1):
            for lam in enumerate_partitions(n):
                rows.append([repr(lam)] + [str(gen_binom(lam, r)) for r in range(1, n + 1)])
        return _align(rows)
    if kind == "pjk":
        lines = ["P_00 = 1"]
        for j in range(1, bound + 1):
            for k in range(1, j + 1):
                lines.append(f"P_{j}{k} = {conj_P(j, k)}" if j < 10 and k < 10 else f"P_{j},{k} = {conj_P(j, k)}")
        return "\n".join(lines) + "\n"
    raise UsageError(f"unknown table kind {kind!r}")


# -- entry point ----------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="genbinom", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="sweep one identity over a parameter grid")
    v.add_argument("--identity", required=True)
    v.add_argument("--n-max", type=int, required=True)
    v.add_argument("--r-max", type=int)
    v.add_argument("--s-max", type=int)
    v.add_argument("--umax", type=int, default=6)
    v.add_argument("--oracle-cap", type=int, default=16)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=("json", "tsv"), default="json")
    v.add_argument("--out", default="-", help="report path, '-' for stdout")
    v.add_argument("--timing", action="store_true", help="record elapsed_ms (breaks byte-identical reports)")
    v.add_argument("--large", action="store_true", help="allow conjecture sweeps beyond the default caps")

    t = sub.add_parser("table", help="print a table of core values")
    t.add_argument("--kind", required=True, choices=("genbinom", "stirling", "pjk"))
    t.add_argument("--max", type=int, required=True, dest="bound")

    sub.add_parser("list", help="list registered identities")
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")

    if args.command == "list":
        width = max(map(len, REGISTRY))
        for key in sorted(REGISTRY):
            ident = REGISTRY[key]
            print(f"{key.ljust(width)}  ({', '.join(ident.params)})  {ident.statement}")
        return EXIT_OK

    if args.command == "table":
        try:
            sys.stdout.write(print_table(args.kind, args.bound))
        except UsageError as exc:
            print(f"genbinom: {exc}", file=sys.stderr)
            return EXIT_USAGE
        return EXIT_OK

    try:
        config = SweepConfig(
            identity=args.identity,
            n_max=args.n_max,
            r_max=args.r_max,
            s_max=args.s_max,
            umax=args.umax,
            oracle_cap=args.oracle_cap,
            timing=args.timing,
            large=args.large,
        )
        if args.jobs < 1:
            raise UsageError("--jobs must be >= 1")
    except UsageError as exc:
        print(f"genbinom: {exc}", file=sys.stderr)
        return EXIT_USAGE

    reports = run_sweep(config, jobs=args.jobs)
    text = (format_json if args.format == "json" else format_tsv)(config, reports)
    try:
        if args.out == "-":
            sys.stdout.write(text)
        else:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
    except OSError as exc:
        print(f"genbinom: cannot write report: {exc}", file=sys.stderr)
        return EXIT_IO

    summary = summarize(reports)
    log.info("%s: %d/%d passed", config.identity, summary["passed"], summary["total"])
    for r in reports:
        if not r.equal:
            print(f"counterexample {config.identity} {r.params}: lhs = {r.lhs} ; rhs = {r.rhs}", file=sys.stderr)
    return EXIT_OK if summary["failed"] == 0 else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

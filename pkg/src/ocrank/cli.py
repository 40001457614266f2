"""Command-line interface: ``ocrank {table,moments,verify,gap,bench}``.

Exit status is 0 on success, 1 when a verification check fails and 2 for
usage errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from . import _kernels
from .bivariate import COMBINATORIAL, CONVENTIONS, PRODUCT, residual_crank_product
from .enumeration import ENUMERATION_CAP, crank_table_enum
from .moments import crank_moment_series
from .verify import rank_crank_gap, run_suite

COMMANDS = ("table", "moments", "verify", "gap", "bench")


@dataclass
class RunConfig:
    command: str
    d: int = 1
    k: int = 1
    nmax: int = 10
    convention: str = PRODUCT
    format: str = "csv"
    out: str | None = None
    backend: str | None = None
    dmax: int = 4
    kmax: int = 4
    enum_cap: int = 20
    table_nmax: int = 100


class UsageError(ValueError):
    pass


def _validate(cfg: RunConfig) -> None:
    if cfg.command not in COMMANDS:
        raise UsageError(f"unknown command {cfg.command!r}")
    if cfg.nmax < 0:
        raise UsageError("--nmax must be non-negative")
    for name in ("d", "k", "dmax", "kmax"):
        if getattr(cfg, name) < 1:
            raise UsageError(f"--{name} must be at least 1")
    if cfg.convention not in CONVENTIONS:
        raise UsageError(f"--convention must be one of {CONVENTIONS}")
    if cfg.format not in ("csv", "json"):
        raise UsageError("--format must be csv or json")
    if cfg.command == "table" and cfg.convention == COMBINATORIAL and cfg.nmax > ENUMERATION_CAP:
        raise UsageError(f"the combinatorial table is enumerated; --nmax must be <= {ENUMERATION_CAP}")
    if cfg.convention != PRODUCT and cfg.command != "table":
        raise UsageError("--convention only applies to the table command")
    if cfg.backend is not None and cfg.backend not in _kernels.available_backends():
        raise UsageError(f"--backend must be one of {_kernels.available_backends()}")


def _emit(columns: list[str], rows: list[dict], fmt: str, extra: dict | None = None) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue()
    doc = {"columns": columns, "rows": [{c: str(r[c]) for c in columns} for r in rows]}
    if extra:
        doc.update(extra)
    return json.dumps(doc, indent=2) + "\n"


def _table(cfg: RunConfig) -> tuple[str, int]:
    if cfg.convention == PRODUCT:
        t = residual_crank_product(cfg.d, cfg.nmax, backend=cfg.backend)
    else:
        t = crank_table_enum(cfg.d, cfg.nmax, COMBINATORIAL)
    rows = [{"d": cfg.d, "n": n, "m": m, "count": t.entry(m, n)}
            for n in range(cfg.nmax + 1) for m in range(-n, n + 1)]
    return _emit(["d", "n", "m", "count"], rows, cfg.format), 0


def _moments(cfg: RunConfig) -> tuple[str, int]:
    v = crank_moment_series(cfg.d, cfg.k, cfg.nmax)
    rows = [{"d": cfg.d, "k": cfg.k, "n": n, "value": x} for n, x in enumerate(v.values) if n >= 1]
    return _emit(["d", "k", "n", "value"], rows, cfg.format), 0


def _gap(cfg: RunConfig) -> tuple[str, int]:
    g = rank_crank_gap(cfg.d, cfg.nmax)
    rows = [{"d": cfg.d, "n": n, "crank_moment": c, "rank_moment": r, "difference": c - r}
            for n, (c, r) in enumerate(zip(g.crank, g.rank))]
    first = None
    if g.first_negative is not None:
        first = {"n": str(g.first_negative[0]), "value": str(g.first_negative[1])}
    return _emit(["d", "n", "crank_moment", "rank_moment", "difference"], rows, cfg.format,
                 {"first_negative": first}), 0


def _verify(cfg: RunConfig) -> tuple[str, int]:
    reports = run_suite(cfg.dmax, cfg.kmax, cfg.nmax, cfg.enum_cap)
    status = 0 if all(r.passed for r in reports) else 1
    if cfg.format == "json":
        doc = {"status": "pass" if status == 0 else "fail",
               "reports": [r.to_dict() for r in reports]}
        return json.dumps(doc, indent=2) + "\n", status
    rows = [{"check": r.name, "status": r.status, "witnesses": len(r.witnesses),
             "params": ";".join(f"{key}={v}" for key, v in r.params.items())} for r in reports]
    return _emit(["check", "status", "witnesses", "params"], rows, "csv"), status


def _bench(cfg: RunConfig) -> tuple[str, int]:
    from .bench import run_benchmarks

    rows = run_benchmarks(cfg.d, cfg.k, cfg.nmax, cfg.table_nmax)
    for r in rows:
        r["seconds"] = f"{r['seconds']:.6f}"
    return _emit(["task", "backend", "nmax", "seconds"], rows, cfg.format), 0


HANDLERS = {"table": _table, "moments": _moments, "verify": _verify, "gap": _gap, "bench": _bench}


def run(cfg: RunConfig) -> tuple[str, int]:
    """Dispatch ``cfg``; returns (artifact text, exit status)."""
    _validate(cfg)
    previous = _kernels.get_backend()
    if cfg.backend:
        _kernels.set_backend(cfg.backend)
    try:
        return HANDLERS[cfg.command](cfg)
    finally:
        _kernels.set_backend(previous)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ocrank", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, nmax):
        p.add_argument("--nmax", type=int, default=nmax, help="truncation order N")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", help="output file (default: stdout)")
        p.add_argument("--backend", choices=_kernels.available_backends(),
                       help="residue kernel backend (default: numba unless OCRANK_NO_NUMBA is set)")
        return p

    p = common(sub.add_parser("table", help="residual crank table M[d](m, n)"), 10)
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--convention", choices=CONVENTIONS, default=PRODUCT)

    p = common(sub.add_parser("moments", help="positive crank moments M[d]_k^+(n)"), 10)
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--k", type=int, default=1)

    p = common(sub.add_parser("verify", help="run every check; exit 1 on failure"), 30)
    p.add_argument("--dmax", type=int, default=4)
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--enum-cap", dest="enum_cap", type=int, default=20,
                   help="largest n checked against brute-force enumeration")

    p = common(sub.add_parser("gap", help="crank minus rank first moments"), 40)
    p.add_argument("--d", type=int, default=3)

    p = common(sub.add_parser("bench", help="time the series kernels per backend"), 1000)
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--table-nmax", dest="table_nmax", type=int, default=100)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(**{k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__})
    try:
        text, status = run(cfg)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"ocrank: error: {exc}", file=sys.stderr)
        return 2
    if cfg.out:
        with open(cfg.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())

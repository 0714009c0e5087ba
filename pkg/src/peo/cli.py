"""Command-line front end: ``peo count|verify|bounds|oracle|table1``.

Every command writes one JSON document (or CSV) to stdout or ``--output``.
Counts are printed as decimal strings.  Exit codes: 0 ok, 2 a check or
golden comparison failed, 3 resource limit reached, 4 bad configuration.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from dataclasses import dataclass
from typing import List, Optional

EXIT_OK = 0
EXIT_MISMATCH = 2
EXIT_RESOURCE = 3
EXIT_CONFIG = 4

FAMILY_CHOICES = ["subset", "prime-subset", "superset", "prime-superset"]

log = logging.getLogger("peo")


class ConfigError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad input; that code means "mismatch" here."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(EXIT_CONFIG)


@dataclass
class RunConfig:
    command: str
    kind: Optional[str] = None
    family: Optional[str] = None
    k: Optional[int] = None
    n: int = 7
    kmax: int = 3
    method: str = "prime"
    mode: str = "staged"
    prune: bool = False
    raw: bool = False
    equation: Optional[str] = None
    order: int = 50
    output: Optional[str] = None
    format: str = "json"
    threads: int = 1
    mem_gb: Optional[float] = None
    checkpoint: Optional[str] = None
    growth_order: int = 60
    exact_n: int = 12

    @property
    def family_key(self) -> Optional[str]:
        return None if self.family is None else self.family.replace("-", "_")

    def validate(self) -> "RunConfig":
        if self.n < 0:
            raise ConfigError("-n must be non-negative")
        if self.threads < 1:
            raise ConfigError("--threads must be at least 1")
        if self.mem_gb is not None and self.mem_gb <= 0:
            raise ConfigError("--mem-gb must be positive")
        if self.kmax < 1:
            raise ConfigError("--kmax must be at least 1")
        if self.command == "count" and self.kind == "family":
            if self.family is None or self.k is None:
                raise ConfigError("count family needs --family and -k")
            if self.k < 1:
                raise ConfigError("-k must be at least 1")
        if self.command == "count" and self.kind == "exact":
            if self.family is not None or self.k is not None:
                raise ConfigError("count exact takes --method, not --family/-k")
        if self.checkpoint and not (self.command == "count" and self.kind == "exact"):
            raise ConfigError("--checkpoint only applies to count exact")
        if self.command == "oracle" and (self.n > 7 or self.kmax > 3):
            raise ConfigError("oracle enumeration is exponential; use -n <= 7 and --kmax <= 3")
        if self.command == "verify" and self.order < 0:
            raise ConfigError("--order must be non-negative")
        if self.command == "bounds" and self.growth_order < 6:
            raise ConfigError("--growth-order must be at least 6")
        return self


def default_threads() -> int:
    v = os.environ.get("PEO_THREADS")
    if not v:
        return 1
    try:
        return max(1, int(v))
    except ValueError:
        raise ConfigError(f"PEO_THREADS must be an integer, got {v!r}")


# -- commands --------------------------------------------------------------

def cmd_count(cfg: RunConfig):
    from .golden import O_N
    if cfg.kind == "exact":
        from .exact import MemoryBudgetExceeded, count
        try:
            values = count(cfg.n, cfg.method, threads=cfg.threads, mem_gb=cfg.mem_gb,
                           checkpoint=cfg.checkpoint, prune=cfg.prune)
        except MemoryBudgetExceeded as exc:
            log.error("%s", exc)
            doc = {"command": "count", "kind": "exact", "method": cfg.method, "n": cfg.n,
                   "values": [str(v) for v in exc.completed],
                   "completed_through": len(exc.completed) - 1}
            return doc, EXIT_RESOURCE
        bad = [i for i, (a, b) in enumerate(zip(values, O_N)) if a != b]
        doc = {"command": "count", "kind": "exact", "method": cfg.method, "n": cfg.n,
               "values": [str(v) for v in values]}
        if bad:
            doc["golden_mismatches"] = bad
        return doc, EXIT_MISMATCH if bad else EXIT_OK
    from .solver import solve
    from .systems import build_system
    fam = cfg.family_key
    sys_ = build_system(fam, cfg.k, symmetry=not cfg.raw, forward=not cfg.raw)
    values = solve(sys_, cfg.n, mode=cfg.mode).root_counts()
    doc = {"command": "count", "kind": "family", "family": fam, "k": cfg.k, "n": cfg.n,
           "values": [str(v) for v in values]}
    return doc, EXIT_OK


def cmd_verify(cfg: RunConfig):
    from .analysis import CATALOGUE, SERIES_EQUATIONS, get_equation, verify_algebraic
    from .oracle import maps_series
    from .solver import root_series

    jobs = [(eq, f"{fam} k={k}", (fam, k)) for fam, k, eq in SERIES_EQUATIONS]
    jobs.append(("maps", "Eulerian maps", None))
    if cfg.equation:
        try:
            p = get_equation(cfg.equation)
        except KeyError as exc:
            raise ConfigError(str(exc.args[0]))
        name = next(key for key, val in CATALOGUE.items() if val is p)
        jobs = [j for j in jobs if j[0] == name]
    results = []
    for eq, label, src in jobs:
        s = maps_series(cfg.order) if src is None else root_series(src[0], src[1], cfg.order)
        chk = verify_algebraic(s, CATALOGUE[eq])
        results.append({"equation": eq, "label": CATALOGUE[eq].label, "series": label,
                        "order": cfg.order, "holds": chk.holds,
                        "first_failure": chk.first_failure, "status": str(chk)})
    ok = all(r["holds"] for r in results)
    return {"command": "verify", "results": results}, EXIT_OK if ok else EXIT_MISMATCH


def cmd_bounds(cfg: RunConfig):
    from .analysis import (UNIVARIATE, estimate_growth, fekete_lower_bound,
                           growth_from_polynomial, root_isolate)
    from .exact import count_prime
    from .solver import root_series

    roots = []
    for name, p in UNIVARIATE.items():
        rs = root_isolate(p, 0, 1, 1e-12)
        g = growth_from_polynomial(p)
        roots.append({"polynomial": name, "label": p.label,
                      "roots": [r.to_json() for r in rs],
                      "candidates": g if isinstance(g, list) else [g],
                      "growth": None if isinstance(g, list) else g})
    seqs = []
    o = count_prime(cfg.exact_n, threads=cfg.threads, mem_gb=cfg.mem_gb)
    named = [("o_n", o)]
    fams = [(cfg.family_key, cfg.k)] if cfg.family else [
        (f, k) for f in ("subset", "prime_subset", "superset", "prime_superset")
        for k in range(1, (min(cfg.kmax, 2) if f in ("subset", "superset") else cfg.kmax) + 1)]
    for fam, k in fams:
        named.append((f"{fam} k={k}", root_series(fam, k, cfg.growth_order)))
    for name, s in named:
        seqs.append({"name": name, "n": len(s) - 1,
                     "fekete": fekete_lower_bound(s).to_json(),
                     "estimate": estimate_growth(s).to_json()})
    return {"command": "bounds", "roots": roots, "sequences": seqs}, EXIT_OK


def cmd_oracle(cfg: RunConfig):
    from .exact import count_prime
    from .oracle import (brute_family_counts, brute_orientations, eulerian_maps_count,
                         family_generator, generate_eulerian_maps)
    from .solver import root_series

    n = cfg.n
    checks = []

    def add(name, ok, detail=""):
        checks.append({"name": name, "passed": bool(ok), "detail": detail})

    got = [len(generate_eulerian_maps(m)) for m in range(n + 1)]
    want = [eulerian_maps_count(m) for m in range(n + 1)]
    add("eulerian maps", got == want, f"{got}")
    o = count_prime(n)
    bo = [brute_orientations(m) for m in range(n + 1)]
    add("brute orientations", bo == o, f"{bo}")
    for fam in ("subset", "prime_subset", "superset", "prime_superset"):
        for k in range(1, cfg.kmax + 1):
            b = brute_family_counts(fam, k, n)
            s = root_series(fam, k, n)
            add(f"{fam} k={k} counts", b == s, f"{b}")
    for k in range(1, cfg.kmax + 1):
        for m in range(n + 1):
            L, LL = family_generator("L", k).codes(m), family_generator("LL", k).codes(m)
            U, UU = family_generator("U", k).codes(m), family_generator("UU", k).codes(m)
            add(f"L k={k} within LL, n={m}", L <= LL)
            add(f"UU k={k} within U, n={m}", UU <= U)
            if k == 1:
                add(f"UU = U for k=1, n={m}", UU == U)
    ok = all(c["passed"] for c in checks)
    doc = {"command": "oracle", "n": n, "kmax": cfg.kmax, "checks": checks, "passed": ok}
    return doc, EXIT_OK if ok else EXIT_MISMATCH


def cmd_table1(cfg: RunConfig):
    from .analysis import bounds_report
    from .golden import EULERIAN_MAPS, O_N, ORIENTED_MAPS, TABLE1

    rows = bounds_report(cfg.n, cfg.kmax, o_n=O_N[:cfg.n + 1] if cfg.n < len(O_N) else None)
    diffs = []
    for row in rows:
        if row.family is not None:
            expected = TABLE1.get((row.family, row.k))
        elif row.name == "Eulerian maps":
            expected = EULERIAN_MAPS[1:]
        elif row.name == "Eulerian orientations":
            expected = O_N[1:]
        else:
            expected = ORIENTED_MAPS
        if expected is None:
            continue
        for i, (a, b) in enumerate(zip(expected, row.counts), start=1):
            if a != b:
                diffs.append({"row": row.name, "n": i, "expected": str(a), "got": str(b)})
    doc = {"command": "table1", "n": cfg.n, "kmax": cfg.kmax,
           "rows": [r.to_json() for r in rows], "diffs": diffs}
    return doc, EXIT_MISMATCH if diffs else EXIT_OK


COMMANDS = {
    "count": cmd_count,
    "verify": cmd_verify,
    "bounds": cmd_bounds,
    "oracle": cmd_oracle,
    "table1": cmd_table1,
}


# -- output ----------------------------------------------------------------

def to_csv(doc) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    cmd = doc["command"]
    if cmd == "count":
        w.writerow(["n", "value"])
        for i, v in enumerate(doc["values"]):
            w.writerow([i, v])
    elif cmd == "verify":
        w.writerow(["equation", "series", "order", "status"])
        for r in doc["results"]:
            w.writerow([r["equation"], r["series"], r["order"], r["status"]])
    elif cmd == "bounds":
        w.writerow(["name", "quantity", "value"])
        for r in doc["roots"]:
            for g in r["candidates"]:
                w.writerow([r["polynomial"], "growth_from_root", repr(g)])
        for s in doc["sequences"]:
            w.writerow([s["name"], "fekete_lower", s["fekete"]["certified_lower"]])
            w.writerow([s["name"], "estimate", repr(s["estimate"]["estimate"])])
            for p in s["estimate"]["ratios"]:
                w.writerow([s["name"], f"ratio@{p['inv_n']!r}", repr(p["ratio"])])
    elif cmd == "oracle":
        w.writerow(["check", "passed", "detail"])
        for c in doc["checks"]:
            w.writerow([c["name"], c["passed"], c["detail"]])
    elif cmd == "table1":
        w.writerow(["row", "growth"] + [str(i) for i in range(1, doc["n"] + 1)])
        for r in doc["rows"]:
            g = "" if r["growth"] is None else repr(r["growth"])
            w.writerow([r["name"], g] + r["counts"])
    return buf.getvalue()


def emit(doc, cfg: RunConfig):
    from .schemas import validate
    validate(doc["command"], doc)
    text = to_csv(doc) if cfg.format == "csv" else json.dumps(doc, indent=2) + "\n"
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- argument parsing ------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("-o", "--output", default=None, help="write here instead of stdout")
    common.add_argument("--threads", type=int, default=None,
                        help="worker threads (default: $PEO_THREADS or 1)")
    common.add_argument("--mem-gb", type=float, default=None, help="memory budget for exact counts")
    common.add_argument("-v", "--verbose", action="store_true")

    ap = _Parser(prog="peo", description="Counting and bounding planar Eulerian orientations.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count", parents=[common], help="exact o_n or a family counting sequence")
    p.add_argument("kind", choices=["exact", "family"])
    p.add_argument("-n", type=int, default=7)
    p.add_argument("--method", choices=["standard", "prime"], default="prime")
    p.add_argument("--family", choices=FAMILY_CHOICES)
    p.add_argument("-k", type=int)
    p.add_argument("--mode", choices=["staged", "picard"], default="staged")
    p.add_argument("--raw", action="store_true", help="solve the unreduced system")
    p.add_argument("--prune", action="store_true", help="aggregate only quasi-balanced suffixes")
    p.add_argument("--checkpoint", metavar="PATH")

    p = sub.add_parser("verify", parents=[common], help="check series against the equation catalogue")
    p.add_argument("--eq", dest="equation", help="equation name (default: all)")
    p.add_argument("--order", type=int, default=50)

    p = sub.add_parser("bounds", parents=[common], help="root isolation, Fekete bounds, growth estimates")
    p.add_argument("--family", choices=FAMILY_CHOICES)
    p.add_argument("-k", type=int)
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("-n", "--growth-order", dest="growth_order", type=int, default=60)
    p.add_argument("--exact-n", type=int, default=12)

    p = sub.add_parser("oracle", parents=[common], help="brute-force cross-checks")
    p.add_argument("-n", "--n", type=int, default=5)
    p.add_argument("--kmax", type=int, default=2)

    p = sub.add_parser("table1", parents=[common], help="family counts table with golden diff")
    p.add_argument("-n", "--n", type=int, default=7)
    p.add_argument("--kmax", type=int, default=3)
    return ap


def parse_config(argv: Optional[List[str]] = None) -> RunConfig:
    args = build_parser().parse_args(argv)
    d = vars(args)
    verbose = d.pop("verbose", False)
    logging.basicConfig(level=logging.INFO if verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    if d.get("threads") is None:
        d["threads"] = default_threads()
    if args.command == "bounds" and (d.get("family") is None) != (d.get("k") is None):
        raise ConfigError("bounds takes --family and -k together")
    fields = {k: v for k, v in d.items() if k in RunConfig.__dataclass_fields__}
    return RunConfig(**fields).validate()


def main(argv: Optional[List[str]] = None) -> int:
    try:
        cfg = parse_config(argv)
    except ConfigError as exc:
        print(f"peo: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        doc, code = COMMANDS[cfg.command](cfg)
    except ConfigError as exc:
        print(f"peo: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except MemoryError:
        print("peo: out of memory", file=sys.stderr)
        return EXIT_RESOURCE
    emit(doc, cfg)
    if code == EXIT_MISMATCH:
        print("peo: check failed, see output", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())

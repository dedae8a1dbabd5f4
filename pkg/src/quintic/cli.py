"""Command-line surface.

Subcommands: classify, rank, matrix, predict, symbol, tables, scan, audit,
primes.  Reports go to standard output (or --out) as canonical JSON; tables
also render csv and md, and the report path can write a companion matplotlib
figure next to the delimited output.  Exit codes: 0 success, 2 invalid input,
3 unsupported form, 4 factorization budget exceeded, 5 internal evaluation
mismatch.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import time

from . import config as config_mod
from .config import Config, set_config
from .cyclo import CyclotomicInt
from .errors import InvalidInput, QuinticError
from .forms import classify, factor_rational
from .genus import (
    genus_matrix,
    hypothesis_audit,
    predict,
    rank_ambiguous,
)
from .ideals import split_prime
from .oracle import PRIME_CLASSES, prime_stream
from .report import (
    build_table,
    classification_section,
    document,
    genus_section,
    rank_section,
    render_table,
    to_json,
)
from .residue import norm_residue_symbol


def parse_element(text: str) -> CyclotomicInt:
    parts = text.split(",")
    if len(parts) == 1:
        try:
            return CyclotomicInt(int(parts[0]))
        except ValueError:
            raise InvalidInput(f"bad element syntax {text!r}; expected c0,c1,c2,c3")
    if len(parts) != 4:
        raise InvalidInput(f"bad element syntax {text!r}; expected c0,c1,c2,c3")
    try:
        return CyclotomicInt(*(int(p) for p in parts))
    except ValueError:
        raise InvalidInput(f"bad element syntax {text!r}; expected integers")


def parse_prime(text: str):
    if ":" in text:
        p_str, idx_str = text.split(":", 1)
    else:
        p_str, idx_str = text, "0"
    try:
        p, idx = int(p_str), int(idx_str)
    except ValueError:
        raise InvalidInput(f"bad prime syntax {text!r}; expected p or p:index")
    primes = split_prime(p)
    if not 0 <= idx < len(primes):
        raise InvalidInput(f"prime index {idx} out of range; {p} has {len(primes)} primes above it")
    return primes[idx]


def _parse_n(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise InvalidInput(f"n must be an integer, got {text!r}")
    if n < 2:
        raise InvalidInput(f"n must be at least 2, got {n}")
    return n


def cmd_classify(args) -> dict:
    c = classify(_parse_n(args.n))
    return document("classify", classification=classification_section(c))


def cmd_rank(args) -> dict:
    n = _parse_n(args.n)
    c = classify(n)
    r = rank_ambiguous(n)
    return document(
        "rank", classification=classification_section(c), rank=rank_section(r)
    )


def cmd_matrix(args) -> dict:
    n = _parse_n(args.n)
    g = genus_matrix(n)
    return document(
        "matrix",
        classification=classification_section(g.classification),
        genus=genus_section(g, include_steps=False),
        flags=[dict(f) for f in g.flags],
    )


def cmd_predict(args) -> dict:
    n = _parse_n(args.n)
    g = predict(n, args.mode)
    return document(
        "predict",
        mode=args.mode,
        classification=classification_section(g.classification),
        genus=genus_section(g),
        flags=[dict(f) for f in g.flags],
    )


def cmd_symbol(args) -> dict:
    beta = parse_element(args.beta)
    alpha = parse_element(args.alpha)
    P = parse_prime(args.prime)
    exponent = norm_residue_symbol(beta, alpha, P)
    return document(
        "symbol",
        beta=str(beta),
        alpha=str(alpha),
        prime=P.label(),
        exponent=exponent,
    )


def cmd_audit(args) -> dict:
    n = _parse_n(args.n)
    c = classify(n)
    hypotheses = hypothesis_audit(c)
    c = dataclasses.replace(c, hypothesis_flags=hypotheses)
    r = rank_ambiguous(n)
    g = genus_matrix(n)
    derived = predict(n, "derived")
    section = genus_section(derived, include_steps=True)
    return document(
        "audit",
        classification=classification_section(c),
        rank=rank_section(r),
        genus=section,
        route_agreement=all(e.engine == e.script for e in g.matrix_entries),
        flags=[dict(f) for f in derived.flags],
    )


def cmd_tables(args) -> tuple[str, dict]:
    doc = build_table(args.which)
    text = render_table(doc, args.format)
    return text, doc


def cmd_primes(args) -> dict:
    primes = prime_stream(getattr(args, "class"), args.count)
    return document(
        "primes", prime_class=getattr(args, "class"), count=args.count, primes=primes
    )


def scan_rows(start: int, stop: int, form_filter: str, derived: bool) -> list[dict]:
    rows = []
    for n in range(max(start, 2), stop + 1):
        try:
            factor_rational(n)
        except QuinticError:
            continue  # not 5th-power-free: outside the enumeration
        try:
            c = classify(n)
        except QuinticError as exc:
            rows.append({"n": n, "error": type(exc).__name__, "message": str(exc)})
            continue
        if form_filter != "any" and c.form.value != f"Form{form_filter}":
            continue
        if not c.supported and form_filter == "any":
            continue
        row = {"n": n, "form": c.form.value, "q1": c.q1, "e1": c.e1, "q2": c.q2}
        try:
            row["prediction_theorem"] = predict(n, "theorem").prediction_theorem
            if derived:
                g = predict(n, "derived")
                row["rank"] = {"t": g.t, "s": g.s, "rank_bound_gamma": g.rank_bound_gamma}
                row["matrix"] = [
                    {"prime": e.prime, "value": e.value} for e in g.matrix_entries
                ]
                row["flags"] = [dict(f) for f in g.flags]
        except QuinticError as exc:
            row["error"] = type(exc).__name__
            row["message"] = str(exc)
        rows.append(row)
    return rows


def cmd_scan(args) -> tuple[str, list[dict]]:
    if args.to < args.start:
        return "", []
    if args.to >= 1 << 63 or args.start >= 1 << 63:
        raise InvalidInput("scan bounds must stay below 2^63")
    rows = scan_rows(args.start, args.to, args.form, args.derived)
    text = "".join(json.dumps(row) + "\n" for row in rows)
    return text, rows


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quintic",
        description=(
            "classification, residue symbols, ambiguous-class ranks, and "
            "5-class-number predictions for pure quintic fields"
        ),
    )
    env = config_mod.from_env()
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=env.seed,
                        help="deterministic seed (env QUINTIC_SEED)")
    common.add_argument("--rho-budget-ms", type=int, default=env.rho_budget_ms,
                        help="factorization time budget (env QUINTIC_RHO_BUDGET_MS)")
    common.add_argument("--out", help="write the report to this path instead of stdout")
    common.add_argument("--timings", action="store_true",
                        help="append wall-clock timings (breaks byte determinism)")

    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("classify", parents=[common], help="congruence form of n")
    p.add_argument("n")
    p = sub.add_parser("rank", parents=[common],
                       help="ramified primes, q*, and the ambiguous rank t")
    p.add_argument("n")
    p = sub.add_parser("matrix", parents=[common],
                       help="genus matrix M with both evaluation routes")
    p.add_argument("n")
    p = sub.add_parser("predict", parents=[common], help="5-class-number prediction")
    p.add_argument("n")
    p.add_argument("--mode", choices=("theorem", "derived"), default="theorem")
    p = sub.add_parser("symbol", parents=[common], help="norm residue symbol exponent")
    p.add_argument("--beta", required=True, help="element as c0,c1,c2,c3")
    p.add_argument("--alpha", required=True, help="element as c0,c1,c2,c3")
    p.add_argument("--prime", required=True, help="rational prime, optionally p:index")
    p = sub.add_parser("tables", parents=[common], help="regenerate a reference table")
    p.add_argument("--which", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--format", choices=("json", "csv", "md"), default="json")
    p.add_argument("--figure", help="also render a companion figure to this path")
    p = sub.add_parser("scan", parents=[common], help="enumerate a radicand range")
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="to", type=int, required=True)
    p.add_argument("--form", choices=("1", "2", "3", "any"), default="any")
    p.add_argument("--derived", action="store_true",
                   help="add rank and matrix columns (slow)")
    p.add_argument("--figure", help="also render a companion figure to this path")
    p = sub.add_parser("audit", parents=[common],
                       help="full dual-route audit of the genus computation")
    p.add_argument("n")
    p = sub.add_parser("primes", parents=[common], help="prime streams by class")
    p.add_argument("--class", choices=PRIME_CLASSES, required=True)
    p.add_argument("--count", type=int, required=True)
    return parser


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    set_config(Config(seed=args.seed, rho_budget_ms=args.rho_budget_ms))
    started = time.monotonic()
    try:
        if args.cmd == "tables":
            text, doc = cmd_tables(args)
            if args.figure:
                from .figures import save_table_figure

                save_table_figure(doc, args.figure)
        elif args.cmd == "scan":
            text, rows = cmd_scan(args)
            if args.figure:
                from .figures import save_scan_figure

                save_scan_figure(rows, args.figure)
        else:
            handler = {
                "classify": cmd_classify,
                "rank": cmd_rank,
                "matrix": cmd_matrix,
                "predict": cmd_predict,
                "symbol": cmd_symbol,
                "audit": cmd_audit,
                "primes": cmd_primes,
            }[args.cmd]
            doc = handler(args)
            if args.timings:
                doc["timings"] = {"wall_ms": round(1000 * (time.monotonic() - started), 3)}
            text = to_json(doc)
    except QuinticError as exc:
        err = document("error", error=type(exc).__name__, message=str(exc))
        _emit(to_json(err), args.out)
        return exc.exit_code
    _emit(text, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())

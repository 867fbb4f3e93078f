"""Command-line entry point: census, verify, upper-bound, rows, block, svg.

Exit status 0 on success, 1 when a checked identity fails (the offending n
is named on stderr), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence

from .census import census, meridian_exclusion_report
from .hyperbolic import block_check
from .rows import row_feasibility
from .surface import SurfaceParams, build
from .svg import FIGURES
from .upper_bound import BRUTE_FORCE_LIMIT, construction_tightness, upper_bound_report

CENSUS_RANGE = (3, 10_000)
VERIFY_RANGE = (5, 10_000)
BRUTE_RANGE = (5, BRUTE_FORCE_LIMIT)


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple[int, int]:
    """``"7"`` or ``"5..200"`` -> inclusive bounds."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            bounds = int(lo), int(hi)
        else:
            bounds = int(text), int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}: expected N or A..B") from None
    if bounds[0] > bounds[1]:
        raise UsageError(f"empty range {text!r}")
    return bounds


def _within(bounds: tuple[int, int], allowed: tuple[int, int], what: str) -> range:
    if bounds[0] < allowed[0] or bounds[1] > allowed[1]:
        raise UsageError(f"{what} range {bounds[0]}..{bounds[1]} outside {allowed[0]}..{allowed[1]}")
    return range(bounds[0], bounds[1] + 1)


def _n_values(args, allowed: tuple[int, int], default: str) -> range:
    if args.n is not None and args.n_range is not None:
        raise UsageError("give --n or --n-range, not both")
    text = args.n if args.n is not None else args.n_range if args.n_range is not None else default
    return _within(parse_range(text), allowed, "n")


def _model(n: int):
    return build(SurfaceParams(n), strict=n >= 5)


def census_record(n: int) -> dict:
    model = _model(n)
    result = census(model)
    doc = result.to_dict(model.rows)
    doc["meridian_fate"] = {str(k): v for k, v in meridian_exclusion_report(model, result)["gaps"].items()}
    return doc


def verify_record(n: int) -> dict:
    model = _model(n)
    result = census(model)
    counts = result.counts
    expected = {"belts_adjacent": 3 * n - 6, "meridians_remaining": n - 5, "merged": 2, "total": 4 * n - 11}
    return {
        "n": n,
        "total": result.total,
        "expected_total": 4 * n - 11,
        "ok": all(counts[k] == v for k, v in expected.items()),
        "counts": counts,
    }


def upper_bound_record(n: int, brute_max: int, construction: bool) -> dict:
    doc = upper_bound_report(n, brute_max)
    doc["identity_holds"] = doc["total_bound"] == 4 * n - 11
    if doc["laminar_max"] is not None:
        doc["identity_holds"] = doc["identity_holds"] and doc["laminar_max"] == n - 5
    if construction:
        model = _model(n)
        tight = construction_tightness(census(model), model)
        doc["construction_attains"] = tight["attains"]
    return doc


def _sweep(fn: Callable[[int], dict], values: Sequence[int], jobs: int) -> list[dict]:
    if jobs <= 1 or len(values) <= 1:
        return [fn(v) for v in values]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map preserves input order, so output stays sorted by n
        return list(pool.map(fn, values, chunksize=max(1, len(values) // (4 * jobs))))


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _text_census(doc: dict) -> str:
    c = doc["counts"]
    return (f"n={doc['n']} kissing={doc['kissing']} belts={c['belts_adjacent']} "
            f"meridians={c['meridians_remaining']} merged={c['merged']} length={doc['systole_length']}")


def _text_verify(doc: dict) -> str:
    status = "ok" if doc["ok"] else "MISMATCH"
    return f"n={doc['n']} total={doc['total']} expected={doc['expected_total']} {status}"


def _text_upper(doc: dict) -> str:
    lam = "-" if doc["laminar_max"] is None else doc["laminar_max"]
    line = (f"n={doc['n']} laminar_max={lam} edge_bound={doc['edge_bound']} "
            f"total_bound={doc['total_bound']} identity={'ok' if doc['identity_holds'] else 'FAIL'}")
    if doc.get("construction_attains") is not None:
        line += f" attained={'yes' if doc['construction_attains'] else 'no'}"
    return line


def _text_rows(doc: dict) -> str:
    verdict = "feasible" if doc["feasible"] else "infeasible: " + "; ".join(doc["obstructions"])
    return f"k={doc['k']} m={doc['m_approx']:.6f} r={doc['r_approx']:.6f} h={doc['h_approx']:.6f} {verdict}"


def _block_doc() -> dict:
    out = {}
    for key, value in block_check().items():
        out[key] = value if isinstance(value, bool) else str(value)
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sphere-kissing", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_n=True, with_format=True):
        if with_n:
            p.add_argument("--n", help="N or A..B")
            p.add_argument("--n-range", help="A..B")
        if with_format:
            p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--out", help="write to PATH instead of stdout")

    p = sub.add_parser("census", help="systole census per n")
    common(p)
    p.add_argument("--jobs", type=int, default=1)
    p = sub.add_parser("verify", help="check total = 4n-11 and its parts")
    common(p)
    p.add_argument("--jobs", type=int, default=1)
    p = sub.add_parser("upper-bound", help="laminar and Euler bounds")
    common(p)
    p.add_argument("--brute-max", type=int, default=BRUTE_FORCE_LIMIT)
    p.add_argument("--construction", action="store_true", help="also check the census attains the bounds")
    p = sub.add_parser("rows", help="construction with k rows of chimneys")
    common(p, with_n=False)
    p.add_argument("--k", default="1..9", help="K or A..B; even k are skipped in a range")
    p = sub.add_parser("block", help="area and angles of the hexagonal cusp block")
    common(p, with_n=False)
    p = sub.add_parser("svg", help="schematic figure")
    common(p, with_format=False)
    p.add_argument("--figure", choices=sorted(FIGURES), default="systoles")
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(args: argparse.Namespace) -> int:
    failed: list[int] = []
    if args.command == "census":
        docs = _sweep(census_record, _n_values(args, CENSUS_RANGE, "5"), args.jobs)
        render = _text_census
    elif args.command == "verify":
        docs = _sweep(verify_record, _n_values(args, VERIFY_RANGE, "5..200"), args.jobs)
        failed = [d["n"] for d in docs if not d["ok"]]
        render = _text_verify
    elif args.command == "upper-bound":
        if not BRUTE_RANGE[0] <= args.brute_max <= BRUTE_RANGE[1]:
            raise UsageError(f"--brute-max {args.brute_max} outside {BRUTE_RANGE[0]}..{BRUTE_RANGE[1]}")
        values = _n_values(args, VERIFY_RANGE, f"5..{args.brute_max}")
        docs = [upper_bound_record(n, args.brute_max, args.construction) for n in values]
        failed = [d["n"] for d in docs if not d["identity_holds"] or d.get("construction_attains") is False]
        render = _text_upper
    elif args.command == "rows":
        lo, hi = parse_range(args.k)
        if lo < 1:
            raise UsageError("k must be at least 1")
        if lo == hi and lo % 2 == 0:
            raise UsageError(f"k={lo}: (1, {lo}) is not a lattice translation")
        docs = [row_feasibility(k).to_dict() for k in range(lo, hi + 1) if k % 2]
        render = _text_rows
    elif args.command == "block":
        doc = _block_doc()
        if args.format == "json":
            _emit(_dump(doc), args.out)
        else:
            _emit("".join(f"{k}: {v}\n" for k, v in sorted(doc.items())), args.out)
        return 0 if all(v for v in doc.values() if isinstance(v, bool)) else 1
    else:
        values = _n_values(args, CENSUS_RANGE, "6")
        if len(values) != 1:
            raise UsageError("svg draws a single n")
        model = _model(values[0])
        _emit(FIGURES[args.figure](model, census(model)), args.out)
        return 0

    if args.format == "json":
        _emit(_dump(docs[0] if len(docs) == 1 else docs), args.out)
    else:
        _emit("".join(render(d) + "\n" for d in docs), args.out)
    if failed:
        print(f"{args.command}: check failed at n={', '.join(map(str, failed))}", file=sys.stderr)
        return 1
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2

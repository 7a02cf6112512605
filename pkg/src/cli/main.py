"""
Command-line front end for S-braid arrangements and their Pak-Stanley labels.

Usage:
  python -m src.cli.main report shi3.json [--json]
  python -m src.cli.main verify --battery [--sample 500 | --full] [--jobs 4] [--out data/battery.parquet]
  python -m src.cli.main verify shi-3
  python -m src.cli.main psi shi-3 1,0,1 [--region]
  python -m src.cli.main svg fig-m-eps --out data/fig_m_eps.svg
  python -m src.cli.main interpolate --n 3 --m 1

SOURCE is a JSON arrangement file or a catalog name (shi-3, catalan-3, 2-shi-3, A1, A2,
fig-labeling, fig-m-eps). Exit codes: 0 success, 1 verification failure, 2 usage/parse error.
"""

import argparse
import json
import logging
import os
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[2]))

from src.arrangements.catalog import CATALOG
from src.arrangements.m_eps import recognize_m_eps
from src.arrangements.properties import holds_x, holds_y, is_transitive
from src.cli.interpolate import interpolate, steps_to_frame
from src.cli.render_svg import render_arrangement_svg
from src.cli.spec_file import read_arrangement
from src.cli.verify_battery import (
    BATTERY_OFFSETS,
    BATTERY_SAMPLE,
    BATTERY_SEED,
    N4_SAMPLES,
    build_battery,
    minimal_counterexample,
    run_battery,
)
from src.parking.d_graph import build_d_graph
from src.parking.parking_functions import count_parking_determinant
from src.psi.psi_inverse import format_trace, inverse_region, psi_trace
from src.regions.compute_labeling import enumerate_regions, gps_label, labeling_report
from src.utils.log_utils import configure_logging, get_logger

OUTPUT_DIR = "data"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

logger = get_logger("cli")


def mark(flag):
    return "✅" if flag else "❌"


def load_source(source):
    if os.path.exists(source):
        return read_arrangement(source)
    if source in CATALOG:
        return CATALOG[source]()
    raise ValueError(f"{source!r} is neither a file nor a catalog name ({', '.join(CATALOG)})")


def parse_tuple(text):
    try:
        return tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise ValueError(f"cannot read {text!r} as a tuple of integers (e.g. 1,0,1)")


# -----------------------------
# report
# -----------------------------

def build_report(A, table, D):
    report = labeling_report(A, table)
    witness = recognize_m_eps(A)
    regions = table.to_frame()
    regions["label"] = regions["label"].map(list)
    return {
        "name": A.name,
        "n": A.n,
        "hyperplanes": [list(h) for h in A.hyperplanes],
        "m": A.m,
        "transitive": is_transitive(A),
        "X": holds_x(A),
        "Y": holds_y(A),
        "m_eps": None if witness is None else {"m": list(witness.m), "eps": witness.nonzero_eps()},
        "determinant": count_parking_determinant(D),
        "d_graph": D.mult.tolist(),
        **report.to_dict(),
        "region_table": json.loads(regions.to_json(orient="records")),
    }


def cmd_report(args):
    A = load_source(args.source)
    table = enumerate_regions(A)
    D = build_d_graph(A)
    rep = build_report(A, table, D)
    if args.json:
        print(json.dumps(rep, indent=2, sort_keys=True))
        return EXIT_OK

    print(f"Arrangement {rep['name'] or ''} (n = {rep['n']}, m = {rep['m']})")
    print(f"  hyperplanes: {A.describe()}")
    print(f"  transitive {mark(rep['transitive'])}  (X) {mark(rep['X'])}  (Y) {mark(rep['Y'])}"
          f"  (m,eps) {mark(rep['m_eps'] is not None)}")
    if rep["m_eps"] is not None:
        print(f"  witness: m = {tuple(rep['m_eps']['m'])}, eps = {rep['m_eps']['eps']}")
    print(f"  regions: {rep['regions']}  distinct labels: {rep['distinct_labels']}"
          f"  parking functions: {rep['parking_functions']}  determinant: {rep['determinant']}")
    print(f"  injective {mark(rep['injective'])}  surjective {mark(rep['surjective'])}"
          f"  bijective {mark(rep['bijective'])}")
    if rep["duplicated_labels"]:
        print(f"  duplicated labels: {rep['duplicated_labels']}")
    print("\nD_S arcs (rows = tails):")
    print(D.to_frame().to_string())
    print("\nregions:")
    print(table.to_frame().to_string(index=False))
    return EXIT_OK


# -----------------------------
# verify
# -----------------------------

def cmd_verify(args):
    if args.battery:
        lo, hi = args.offsets
        sample = None if args.full else args.sample
        arrangements = build_battery(range(lo, hi + 1), sample, args.seed, args.n4_samples)
    elif args.source:
        arrangements = [load_source(args.source)]
    else:
        raise ValueError("give an arrangement SOURCE or --battery")

    print(f"Checking {len(arrangements)} arrangement(s)...")
    df = run_battery(arrangements, jobs=args.jobs, perturb=args.perturb, oracle=args.oracle,
                     progress=len(arrangements) > 1)

    if args.out:
        out = Path(args.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        df.to_parquet(out, index=False)
        print(f"💾 results saved to {out} ({len(df)} rows)")

    failing = df[~df["ok"]]
    if failing.empty:
        print(f"✅ all invariants hold on {len(df)} arrangement(s)")
        return EXIT_OK

    counts = failing["failures"].explode().value_counts()
    print(f"❌ {len(failing)} arrangement(s) failing")
    for check, count in counts.items():
        print(f"   {check}: {count}")
    worst = minimal_counterexample(df)
    print(f"   smallest counterexample: {worst['hyperplanes']} -> {list(worst['failures'])}")
    logger.error("counterexample %s", json.dumps({k: str(v) for k, v in worst.items()}))
    return EXIT_FAILED


# -----------------------------
# psi
# -----------------------------

def cmd_psi(args):
    A = load_source(args.source)
    p = parse_tuple(args.p)
    trace = psi_trace(A, p)
    print(format_trace(trace), end="")
    if args.region:
        R = inverse_region(A, p)
        print(f"region: {R.render()}  label: {gps_label(A, R)}")
    return EXIT_OK


# -----------------------------
# svg
# -----------------------------

def cmd_svg(args):
    A = load_source(args.source)
    out = args.out or os.path.join(OUTPUT_DIR, f"{A.name or 'arrangement'}.svg")
    cells = render_arrangement_svg(A, out)
    print(f"✅ {out} ({len(cells)} labeled cells)")
    return EXIT_OK


# -----------------------------
# interpolate
# -----------------------------

def cmd_interpolate(args):
    steps = interpolate(args.n, args.m)
    df = steps_to_frame(steps)
    if args.json:
        print(df.to_json(orient="records", indent=2))
    else:
        print(df.to_string(index=False))
    ok = all(s.ok for s in steps)
    print(f"{mark(ok)} {len(steps)} arrangements, every step (m,eps)-recognizable and bijective: {ok}")
    return EXIT_OK if ok else EXIT_FAILED


def build_parser():
    parser = argparse.ArgumentParser(description="Generalized Pak-Stanley labeling tools")
    parser.add_argument("--log-json", action="store_true", help="Emit diagnostics as JSON records")
    parser.add_argument("--verbose", action="store_true", help="Debug-level diagnostics")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", help="Properties, regions and labels of one arrangement")
    p.add_argument("source")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("verify", help="Run the invariant suite")
    p.add_argument("source", nargs="?")
    p.add_argument("--battery", action="store_true", help="n=3 offset battery + n=4 (m,eps) samples + catalog")
    p.add_argument("--sample", type=int, default=BATTERY_SAMPLE, help="Subsample size of the n=3 battery")
    p.add_argument("--full", action="store_true", help="Run the whole n=3 battery")
    p.add_argument("--seed", type=int, default=BATTERY_SEED)
    p.add_argument("--offsets", type=int, nargs=2, metavar=("LO", "HI"),
                   default=(BATTERY_OFFSETS[0], BATTERY_OFFSETS[-1]))
    p.add_argument("--n4-samples", type=int, default=N4_SAMPLES)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="Parquet file for per-arrangement results")
    p.add_argument("--perturb", action="store_true", help="Fault injection: leftmost zero in psi")
    p.add_argument("--oracle", action="store_true", help="Also run the brute-force (m,eps) oracle")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("psi", help="Trace psi on one parking function")
    p.add_argument("source")
    p.add_argument("p", help="Parking function, e.g. 1,0,1")
    p.add_argument("--region", action="store_true", help="Also print beta(psi(p)) and its label")
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("svg", help="Draw an n=3 arrangement with its labels")
    p.add_argument("source")
    p.add_argument("--out")
    p.set_defaults(func=cmd_svg)

    p = sub.add_parser("interpolate", help="(m-1)-Catalan to m-Catalan through (m,eps)-arrangements")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_interpolate)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    configure_logging(json_format=args.log_json, level=logging.DEBUG if args.verbose else logging.INFO)
    try:
        return args.func(args)
    except ValueError as e:
        print(f"❌ {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

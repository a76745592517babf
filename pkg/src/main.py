import argparse
import os
import sys
import traceback
from pathlib import Path

import pandas as pd

# --- IMPORTS ---
from cone_analysis import run_cone_search
from excel_writer import write_tables_xlsx
from gold_tables import compare_table1, compare_table2, table1_frame as gold_table1, table2_frame as gold_table2
from graph_io import candidate_to_record, read_candidates_json, read_graph_file, write_json
from graph_verify import (AlgebraicEigenvalue, certify_three_ev, closed_walk3_check, distinct_spectrum,
                          valency_partition)
from multiplicity_enum import enumerate_multiplicity_arrays
from pdf_writer import write_elimination_pdf
from refinement import refute_all
from spectral_enum import TAIL_BOUND_CHOICES, SearchConfig, enumerate_spectral
from sweep import cone_records, run_sweep, table1_frame, table2_frame, write_outputs
from valency_enum import enumerate_valency_arrays

__version__ = "1.0.0"

EXIT_OK = 0
EXIT_GOLD_MISMATCH = 1
EXIT_INVALID = 2


#  ==========================================
#   SWITCHBOARD: change these settings to control the search
#  ==========================================

# --- 1. SEARCH RANGE ---
T_MIN = 3
T_MAX = 29                           # hard ceiling: no graph of the family has t > 29

# --- 2. CALIBRATION TOGGLES ---
BRACKET_CONDITION = True             # valency bracket k_1 < s < k_r
APPLY_N_LOWER_BOUND = False          # n > (t - 1/2)^2 / 2 inside S(t)
APPLY_BR_UNIQUENESS = True           # refute Bell-Rowlinson equality via the cited uniqueness result
VALENCY_TAIL_BOUND = "lemma"         # "lemma" | "printed" reading of valency condition (h)
PAIR_CONDITION_ALLOWS_EQUAL = True   # valency condition (g) ranges over i == j too

# --- 3. EXECUTION ---
JOBS = 1                             # worker processes across t

# --- 4. OUTPUTS ---
OUTPUT_DIR_ENV = "THREE_EV_OUTPUT_DIR"
WRITE_XLSX = False                   # tables.xlsx
WRITE_PDF = False                    # elimination_report.pdf


#  ==========================================
#   HELPERS
#  ==========================================

def _on_off(text: str) -> bool:
    value = text.strip().lower()
    if value not in ("on", "off"):
        raise argparse.ArgumentTypeError(f"expected 'on' or 'off', got {text!r}")
    return value == "on"


def resolve_output_dir(cli_value: str | None) -> Path:
    """--out wins over the environment variable, which wins over <project>/output."""
    if cli_value:
        return Path(cli_value)
    env_value = os.environ.get(OUTPUT_DIR_ENV)
    if env_value:
        return Path(env_value)
    project_root = Path(__file__).resolve().parent.parent
    return project_root / "output"


def config_from_args(args) -> SearchConfig:
    return SearchConfig(
        bracket_condition=args.bracket_condition,
        apply_n_lower_bound=args.apply_n_lower_bound,
        apply_br_uniqueness=args.apply_br_uniqueness,
        valency_tail_bound=args.valency_tail_bound,
        pair_condition_allows_equal=args.pair_condition_allows_equal,
    )


def build_parser() -> argparse.ArgumentParser:
    toggles = argparse.ArgumentParser(add_help=False)
    toggles.add_argument("--bracket-condition", type=_on_off, default=BRACKET_CONDITION, metavar="on|off")
    toggles.add_argument("--apply-n-lower-bound", type=_on_off, default=APPLY_N_LOWER_BOUND, metavar="on|off")
    toggles.add_argument("--apply-br-uniqueness", type=_on_off, default=APPLY_BR_UNIQUENESS, metavar="on|off")
    toggles.add_argument("--valency-tail-bound", choices=TAIL_BOUND_CHOICES, default=VALENCY_TAIL_BOUND)
    toggles.add_argument("--pair-condition-allows-equal", type=_on_off, default=PAIR_CONDITION_ALLOWS_EQUAL,
                         metavar="on|off")
    toggles.add_argument("--out", default=None, help=f"output directory (overrides ${OUTPUT_DIR_ENV})")
    toggles.add_argument("--quiet", action="store_true")

    parser = argparse.ArgumentParser(prog="three-ev", description="Exact search for three-eigenvalue graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    search = sub.add_parser("search", parents=[toggles], help="full sweep over a t range")
    search.add_argument("--t-min", type=int, default=T_MIN)
    search.add_argument("--t-max", type=int, default=T_MAX)
    search.add_argument("--jobs", type=int, default=JOBS)
    search.add_argument("--expect-tables", action="store_true", help="exit 1 unless the published tables match")
    search.add_argument("--xlsx", action="store_true", default=WRITE_XLSX)
    search.add_argument("--pdf", action="store_true", default=WRITE_PDF)

    for name, text in (("spectral", "list S(t)"), ("valencies", "list feasible valency arrays"),
                       ("mults", "list feasible multiplicity arrays")):
        stage = sub.add_parser(name, parents=[toggles], help=text)
        stage.add_argument("--t", type=int, required=True)

    refute = sub.add_parser("refute", parents=[toggles], help="run the elimination checks on candidate JSON")
    refute.add_argument("path")

    cone = sub.add_parser("cone", parents=[toggles], help="cone case analysis for t in 3..6")
    cone.add_argument("--t", type=int, required=True)

    verify = sub.add_parser("verify", parents=[toggles], help="certify a graph file")
    verify.add_argument("path")
    verify.add_argument("--theta", nargs=3, metavar=("TH0", "TH1", "TH2"), default=None)

    tables = sub.add_parser("tables", parents=[toggles], help="print or check the published tables")
    tables.add_argument("--t-min", type=int, default=T_MIN)
    tables.add_argument("--t-max", type=int, default=T_MAX)
    return parser


def _detail(args, text: str):
    if not args.quiet:
        print(text)


#  ==========================================
#   SUBCOMMANDS
#  ==========================================

def cmd_search(args) -> int:
    config = config_from_args(args)
    out_dir = resolve_output_dir(args.out)
    print("\n === 0. Configuration ===")
    _detail(args, f"   > t = {args.t_min}..{args.t_max}, jobs = {args.jobs}, output = {out_dir}")
    for key, value in config.as_dict().items():
        _detail(args, f"   > {key}: {value}")

    result = run_sweep(args.t_min, args.t_max, config, jobs=max(1, args.jobs), quiet=args.quiet)
    paths, gold = write_outputs(result, out_dir, __version__, expect_tables=args.expect_tables)

    if args.xlsx or args.pdf:
        print("\n === 5. Optional deliverables ===")
        cases = cone_records(result)["cases"]
        try:
            if args.xlsx:
                write_tables_xlsx(table1_frame(result), table2_frame(result), cases, str(out_dir / "tables.xlsx"))
            if args.pdf:
                write_elimination_pdf(table1_frame(result), result.refutation.candidates, cases,
                                      str(out_dir / "elimination_report.pdf"), result.t_min, result.t_max)
        except Exception as e:
            print(f"WARNING: optional deliverable failed: {e}")
            traceback.print_exc()

    report = result.refutation
    print(f"\n{'=' * 70}")
    print(f"  SEARCH COMPLETE (t = {result.t_min}..{result.t_max})")
    print(f"  Spectral arrays:   {sum(s.spectral for s in result.stages)}")
    print(f"  With valencies:    {sum(s.with_valencies for s in result.stages)}")
    print(f"  Survivors:         {len(report.candidates)}")
    print(f"  Refuted / flagged / open: {report.refuted_count} / {report.flagged_count} / {report.open_count}")
    if result.failed:
        print(f"  Failed t values:   {result.failed}")
    if gold is not None:
        print(f"  Published tables:  {'match' if not gold else f'{len(gold)} mismatch(es)'}")
        for line in gold:
            print(f"    - {line}")
    print(f"{'=' * 70}\n")

    if result.failed:
        return EXIT_INVALID
    if gold:
        return EXIT_GOLD_MISMATCH
    return EXIT_OK


def cmd_spectral(args) -> int:
    config = config_from_args(args)
    params = enumerate_spectral(args.t, config)
    print(f"\n === Spectral parameter arrays for t={args.t} ===")
    for p in params:
        _detail(args, f"   > {p.label}  T={p.edge_double}  W3={p.walk_sum}")
    frame = pd.DataFrame([(p.t, p.n, p.s, p.m) for p in params], columns=["t", "n", "s", "m"])
    out_dir = resolve_output_dir(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    frame.to_csv(out_dir / f"spectral_t{args.t}.csv", index=False, lineterminator="\n")
    print(f"   > |S({args.t})| = {len(params)}")
    return EXIT_OK


def cmd_valencies(args) -> int:
    config = config_from_args(args)
    rows = []
    print(f"\n === Feasible valency arrays for t={args.t} ===")
    for p in enumerate_spectral(args.t, config):
        for a in enumerate_valency_arrays(p, config):
            rows.append((p.t, p.n, p.s, p.m, a.omega, ";".join(map(str, a.valencies))))
            _detail(args, f"   > {p.label}: {a.valencies} (omega={a.omega})")
    out_dir = resolve_output_dir(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    pd.DataFrame(rows, columns=["t", "n", "s", "m", "omega", "valencies"]).to_csv(
        out_dir / f"valencies_t{args.t}.csv", index=False, lineterminator="\n")
    print(f"   > |K({args.t})| = {len({row[:4] for row in rows})}, arrays = {len(rows)}")
    return EXIT_OK


def cmd_mults(args) -> int:
    config = config_from_args(args)
    rows = []
    print(f"\n === Feasible multiplicity arrays for t={args.t} ===")
    for p in enumerate_spectral(args.t, config):
        for a in enumerate_valency_arrays(p, config):
            for arr in enumerate_multiplicity_arrays(a):
                rows.append((p.t, p.n, p.s, p.m, ";".join(map(str, a.valencies)), ";".join(map(str, arr.counts))))
                _detail(args, f"   > {p.label}: {a.valencies} with {arr.counts}")
    out_dir = resolve_output_dir(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    pd.DataFrame(rows, columns=["t", "n", "s", "m", "valencies", "multiplicities"]).to_csv(
        out_dir / f"mults_t{args.t}.csv", index=False, lineterminator="\n")
    print(f"   > |M({args.t})| = {len({row[:4] for row in rows})}")
    return EXIT_OK


def cmd_refute(args) -> int:
    config = config_from_args(args)
    candidates = read_candidates_json(args.path)
    print(f"\n === Elimination checks for {len(candidates)} candidate(s) ===")
    report = refute_all(candidates, config)
    for c in report.candidates:
        print(f"   > t={c.params.t} {c.params.label}: {c.status}" + (f" - {c.reason}" if c.reason else ""))
        for f in c.findings:
            _detail(args, f"       {f.check:<13} {f.verdict:<15} {f.detail}")
    out_dir = resolve_output_dir(args.out)
    write_json([candidate_to_record(c) for c in report.candidates], out_dir / "refutation.json")
    if report.open_count:
        print(f"WARNING: {report.open_count} candidate(s) remain open.")
    return EXIT_OK


def cmd_cone(args) -> int:
    result = run_cone_search(args.t)
    b = result.bounds
    print(f"\n === Cone case analysis for t={args.t} ===")
    print(f"   > window: {b.lowest} <= n <= {b.highest} ({'feasible' if b.feasible else 'empty'})")
    for case in result.ledger:
        rec = case.to_record()
        _detail(args, f"   > ({rec['alpha_x']}, {rec['alpha_y']}) n={rec['n']} D={rec['discriminant']} "
                      f"s={rec['s']}: {rec['reason']}")
    print(f"   > survivors: {len(result.survivors)}")
    out_dir = resolve_output_dir(args.out)
    write_json({"t": args.t, "cases": [c.to_record() for c in result.ledger],
                "survivors": [c.to_record() for c in result.ledger if c.reason is None]},
               out_dir / f"cone_t{args.t}.json")
    return EXIT_OK


def cmd_verify(args) -> int:
    g = read_graph_file(args.path)
    print(f"\n === Certifying {Path(args.path).name} (n={g.vertex_count}, e={len(g.edges)}) ===")
    if not g.is_connected():
        raise ValueError(f"{args.path}: graph is not connected")
    spectrum = distinct_spectrum(g)
    if args.theta:
        theta = tuple(AlgebraicEigenvalue.parse(text) for text in args.theta)
    elif spectrum.is_three_eigenvalue:
        theta = spectrum.values()
    else:
        print("   > not a three-eigenvalue graph")
        write_json({"n": g.vertex_count, "edges_hash": g.edges_hash, "ok": False,
                    "failures": ["not a three-eigenvalue graph"]},
                   resolve_output_dir(args.out) / "certificate.json")
        return EXIT_OK
    certificate = certify_three_ev(g, *theta)
    record = certificate.to_record(g, spectrum if spectrum.is_three_eigenvalue else None)
    record["closed_walks_ok"] = closed_walk3_check(g, certificate)
    record["valency_classes"] = [len(cell) for cell in valency_partition(g)]

    for value, mult in spectrum.eigenvalues:
        _detail(args, f"   > eigenvalue {value} with multiplicity {mult}")
    print(f"   > certificate {'ok' if certificate.ok else 'FAILED'} for theta = {[str(th) for th in theta]}")
    for failure in certificate.failures[:10]:
        _detail(args, f"     - {failure}")
    write_json(record, resolve_output_dir(args.out) / "certificate.json")
    return EXIT_OK


def cmd_tables(args) -> int:
    out_dir = Path(args.out) if args.out else None
    t1_path = out_dir / "table1.csv" if out_dir else None
    if t1_path is None or not t1_path.exists():
        print("\n === Published stage counts ===")
        print(gold_table1(args.t_min, args.t_max).to_string(index=False))
        print("\n === Published survivors ===")
        print(gold_table2(args.t_min, args.t_max).to_string(index=False))
        return EXIT_OK

    table1 = pd.read_csv(t1_path)
    t2_path = out_dir / "table2.csv"
    if not t2_path.exists():
        raise FileNotFoundError(f"table2.csv not found at {t2_path}")
    table2 = pd.read_csv(t2_path, dtype=str, keep_default_na=False)
    t_min, t_max = int(table1["t"].min()), int(table1["t"].max())
    mismatches = compare_table1(table1) + compare_table2(table2, t_min, t_max)
    print(f"\n === Comparing {out_dir} with the published tables ===")
    for line in mismatches:
        print(f"   > {line}")
    print(f"   > {'match' if not mismatches else f'{len(mismatches)} mismatch(es)'}")
    return EXIT_GOLD_MISMATCH if mismatches else EXIT_OK


COMMANDS = {
    "search": cmd_search,
    "spectral": cmd_spectral,
    "valencies": cmd_valencies,
    "mults": cmd_mults,
    "refute": cmd_refute,
    "cone": cmd_cone,
    "verify": cmd_verify,
    "tables": cmd_tables,
}


#  ==========================================
#   MAIN PIPELINE
#  ==========================================
def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ValueError, FileNotFoundError, OSError) as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())

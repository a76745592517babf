import hashlib
import time
import traceback
from dataclasses import dataclass, field
from multiprocessing import Pool
from pathlib import Path

import pandas as pd

from cone_analysis import CONE_T_RANGE, ConeSearchResult, cone_bounds, run_cone_search
from gold_tables import TABLE1_COLUMNS, compare_table1, compare_table2, format_tuple
from graph_io import candidate_to_record, write_json
from multiplicity_enum import Candidate, enumerate_multiplicity_arrays
from refinement import RefutationReport, refute_all
from spectral_enum import T_BOUND, T_LOW, SearchConfig, enumerate_spectral
from valency_enum import enumerate_valency_arrays

TABLE2_COLUMNS = ["t", "n", "s", "m", "valencies", "multiplicities", "status", "reason"]


@dataclass(frozen=True)
class StageCounts:
    """Per-t stage sizes: |S(t)|, |K(t)|, number of valency arrays, |M(t)|, survivors."""
    t: int
    spectral: int = 0
    with_valencies: int = 0
    valency_arrays: int = 0
    with_multiplicities: int = 0
    survivors: tuple[Candidate, ...] = ()
    seconds: float = 0.0
    error: str | None = None


@dataclass(frozen=True)
class SweepResult:
    t_min: int
    t_max: int
    config: SearchConfig
    stages: tuple[StageCounts, ...]
    refutation: RefutationReport
    cones: tuple[ConeSearchResult, ...] = field(default=())

    @property
    def failed(self) -> list[int]:
        return [s.t for s in self.stages if s.error is not None]


def check_range(t_min: int, t_max: int):
    if not T_LOW <= t_min <= t_max <= T_BOUND:
        raise ValueError(f"t range must satisfy {T_LOW} <= t_min <= t_max <= {T_BOUND}, got {t_min}..{t_max}")


#  ==========================================
#    PER-t WORKER
#  ==========================================

def sweep_single_t(t: int, config: SearchConfig) -> StageCounts:
    """Spectral arrays, then valency arrays, then multiplicity arrays, for one t."""
    start = time.perf_counter()
    spectral = enumerate_spectral(t, config)
    with_valencies = 0
    array_total = 0
    with_multiplicities = 0
    survivors = []
    for params in spectral:
        arrays = enumerate_valency_arrays(params, config)
        if not arrays:
            continue
        with_valencies += 1
        array_total += len(arrays)
        found = [Candidate.from_array(arr) for a in arrays for arr in enumerate_multiplicity_arrays(a)]
        if found:
            with_multiplicities += 1
            survivors += found
    return StageCounts(
        t=t,
        spectral=len(spectral),
        with_valencies=with_valencies,
        valency_arrays=array_total,
        with_multiplicities=with_multiplicities,
        survivors=tuple(survivors),
        seconds=time.perf_counter() - start,
    )


def _worker(job: tuple[int, SearchConfig]) -> StageCounts:
    t, config = job
    try:
        return sweep_single_t(t, config)
    except Exception as e:
        print(f"ERROR in sweep for t={t}: {e}")
        traceback.print_exc()
        return StageCounts(t=t, error=str(e))


def _report_stage(s: StageCounts, done: int, total: int, quiet: bool):
    if quiet or s.error is not None:
        return
    print(f"   > [{done}/{total}] t={s.t:>2}: |S|={s.spectral:>4}  |K|={s.with_valencies:>4}  "
          f"arrays={s.valency_arrays:>5}  |M|={s.with_multiplicities}  ({s.seconds:.1f}s)")


def run_sweep(t_min: int, t_max: int, config: SearchConfig, jobs: int = 1, quiet: bool = False) -> SweepResult:
    check_range(t_min, t_max)
    jobs_list = [(t, config) for t in range(t_min, t_max + 1)]

    print(f"\n === 1. Enumerating t = {t_min}..{t_max} ({jobs} worker(s)) ===")
    stages = []
    if jobs > 1:
        with Pool(processes=jobs) as pool:
            for s in pool.imap_unordered(_worker, jobs_list):
                stages.append(s)
                _report_stage(s, len(stages), len(jobs_list), quiet)
    else:
        for job in jobs_list:
            stages.append(_worker(job))
            _report_stage(stages[-1], len(stages), len(jobs_list), quiet)
    stages.sort(key=lambda s: s.t)

    print("\n === 2. Eliminating surviving candidates ===")
    survivors = [c for s in stages for c in s.survivors]
    report = refute_all(survivors, config)
    if not quiet:
        for c in report.candidates:
            print(f"   > t={c.params.t} {c.params.label}: {c.status} ({c.reason or 'no decisive check'})")
    if report.flagged_count:
        print(f"WARNING: {report.flagged_count} candidate(s) flagged but not refuted.")
    if report.open_count:
        print(f"WARNING: {report.open_count} candidate(s) remain open.")

    print("\n === 3. Cone case analysis ===")
    cones = tuple(run_cone_search(t) for t in range(t_min, t_max + 1) if t in CONE_T_RANGE)
    if not quiet:
        for result in cones:
            print(f"   > t={result.t}: {len(result.ledger)} case(s), {len(result.survivors)} survivor(s)")

    return SweepResult(t_min=t_min, t_max=t_max, config=config, stages=tuple(stages),
                       refutation=report, cones=cones)


#  ==========================================
#    TABLES & REPORTS
#  ==========================================

def table1_frame(result: SweepResult) -> pd.DataFrame:
    rows = [(s.t, s.spectral, s.with_valencies, s.with_multiplicities) for s in result.stages]
    return pd.DataFrame(rows, columns=TABLE1_COLUMNS)


def table2_frame(result: SweepResult) -> pd.DataFrame:
    rows = [
        (c.params.t, c.params.n, c.params.s, c.params.m,
         format_tuple(c.valencies.valencies), format_tuple(c.counts.counts),
         c.status, c.reason or "")
        for c in result.refutation.candidates
    ]
    return pd.DataFrame(rows, columns=TABLE2_COLUMNS)


def cone_records(result: SweepResult) -> dict:
    return {
        "bounds": [
            {
                "t": b.t,
                "lower_strict": b.lower_strict,
                "upper_square": b.upper_square,
                "upper_ratio": f"{b.upper_ratio.numerator}/{b.upper_ratio.denominator}",
                "lower_root": b.lower_root,
                "feasible": b.feasible,
            }
            for b in (cone_bounds(t) for t in range(result.t_min, result.t_max + 1))
        ],
        "cases": [case.to_record() for cone in result.cones for case in cone.ledger],
        "survivors": [case.to_record() for cone in result.cones for case in cone.ledger if case.reason is None],
    }


def render_markdown_report(result: SweepResult) -> str:
    lines = [
        "# Elimination report",
        "",
        f"Range t = {result.t_min}..{result.t_max}.",
        "",
        "## Survivors of the search",
        "",
    ]
    if not result.refutation.candidates:
        lines.append("No candidate survived the multiplicity stage.")
    for c in result.refutation.candidates:
        p = c.params
        lines += [
            f"### t={p.t}, (n,s,m) = {p.label}",
            "",
            f"- valencies: {c.valencies.valencies}",
            f"- multiplicities: {c.counts.counts}",
            f"- status: **{c.status}**" + (f", {c.reason}" if c.reason else ""),
            "",
            "| check | class | verdict | detail |",
            "|---|---|---|---|",
        ]
        for f in c.findings:
            cls = "" if f.class_index is None else str(f.class_index + 1)
            lines.append(f"| {f.check} | {cls} | {f.verdict} | {f.detail} |")
        lines.append("")
    lines += ["## Cones with three valencies", ""]
    for cone in result.cones:
        for case in cone.ledger:
            rec = case.to_record()
            lines.append(f"- t={rec['t']}, ({rec['alpha_x']}, {rec['alpha_y']}), n={rec['n']}, "
                         f"s={rec['s']}: {rec['reason']}")
    if not result.cones:
        lines.append("No t in range admits the cone case search.")
    return "\n".join(lines) + "\n"


def manifest_header(result: SweepResult, version: str) -> dict:
    """Toggles and range of a run, written before any other output."""
    return {
        "version": version,
        "status": "writing",
        "t_min": result.t_min,
        "t_max": result.t_max,
        "config": result.config.as_dict(),
    }


def build_manifest(result: SweepResult, version: str, gold: list[str] | None,
                   hashes: dict[str, str] | None = None) -> dict:
    return {
        **manifest_header(result, version),
        "status": "complete",
        "counts": [
            {
                "t": s.t,
                "S": s.spectral,
                "K": s.with_valencies,
                "valency_arrays": s.valency_arrays,
                "M": s.with_multiplicities,
                "survivors": len(s.survivors),
            }
            for s in result.stages
        ],
        "seconds_per_t": {str(s.t): round(s.seconds, 3) for s in result.stages},
        "failed": result.failed,
        "refutation": {
            "open": result.refutation.open_count,
            "flagged": result.refutation.flagged_count,
            "refuted": result.refutation.refuted_count,
        },
        "gold": None if gold is None else {"ok": not gold, "mismatches": gold},
        "sha256": hashes or {},
    }


def gold_mismatches(result: SweepResult) -> list[str]:
    return compare_table1(table1_frame(result)) + compare_table2(table2_frame(result), result.t_min, result.t_max)


def write_outputs(result: SweepResult, out_dir: str | Path, version: str,
                  expect_tables: bool = False) -> tuple[dict[str, Path], list[str] | None]:
    """Writes CSV, JSON and markdown records.

    The manifest is written first with the toggles and range, then rewritten with
    counts and file hashes once every record has been written and table1.csv re-read.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    print(f"\n === 4. Writing outputs to {out_dir} ===")

    t1 = table1_frame(result)
    t2 = table2_frame(result)
    paths = {
        "table1": out_dir / "table1.csv",
        "table2": out_dir / "table2.csv",
        "candidates": out_dir / "candidates.json",
        "cones": out_dir / "cones.json",
        "report": out_dir / "elimination_report.md",
        "manifest": out_dir / "manifest.json",
    }
    write_json(manifest_header(result, version), paths["manifest"])

    t1.to_csv(paths["table1"], index=False, lineterminator="\n")
    t2.to_csv(paths["table2"], index=False, lineterminator="\n")
    write_json([candidate_to_record(c) for c in result.refutation.candidates], paths["candidates"])
    write_json(cone_records(result), paths["cones"])
    paths["report"].write_text(render_markdown_report(result), encoding="utf-8")

    reread = pd.read_csv(paths["table1"])
    if not reread.equals(t1) or len(pd.read_csv(paths["table2"])) != len(result.refutation.candidates):
        raise RuntimeError("written tables disagree with the computed counts")

    gold = gold_mismatches(result) if expect_tables else None
    hashes = {name: hashlib.sha256(path.read_bytes()).hexdigest()
              for name, path in paths.items() if name != "manifest"}
    write_json(build_manifest(result, version, gold, hashes), paths["manifest"])
    for name, path in paths.items():
        print(f"   > {name}: {path.name}")
    return paths, gold

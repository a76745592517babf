import json
from pathlib import Path

from graph_verify import Graph
from multiplicity_enum import Candidate, MultiplicityArray
from spectral_enum import SpectralParams
from valency_enum import ValencyArray


class GraphFormatError(ValueError):
    """Raised for a graph file that breaks the 'n e' header plus edge-list format."""


#  ==========================================
#    GRAPH FILES
#  ==========================================

# === EDGE LIST PARSING ===
def read_graph_file(path: str | Path) -> Graph:
    """Parses a plain edge list: first line 'n e', then e lines 'u v' with 0-based vertices."""
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Graph file not found at {path}")

    lines = [line.split("#", 1)[0].strip() for line in path.read_text(encoding="utf-8").splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise GraphFormatError(f"{path}: empty graph file")

    header = lines[0].split()
    if len(header) != 2 or not all(part.isdigit() for part in header):
        raise GraphFormatError(f"{path}: header must be 'n e', got {lines[0]!r}")
    n, e = int(header[0]), int(header[1])
    if len(lines) - 1 != e:
        raise GraphFormatError(f"{path}: header promises {e} edges, found {len(lines) - 1}")

    seen = set()
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 2 or not all(part.lstrip("-").isdigit() for part in parts):
            raise GraphFormatError(f"{path}:{lineno}: expected 'u v', got {line!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise GraphFormatError(f"{path}:{lineno}: loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"{path}:{lineno}: vertex out of range 0..{n - 1}")
        pair = (min(u, v), max(u, v))
        if pair in seen:
            raise GraphFormatError(f"{path}:{lineno}: repeated edge {pair}")
        seen.add(pair)
    return Graph(vertex_count=n, edges=frozenset(seen))


def write_graph_file(g: Graph, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    body = [f"{g.vertex_count} {len(g.edges)}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    path.write_text("\n".join(body) + "\n", encoding="ascii")
    return path


#  ==========================================
#    CANDIDATE RECORDS
#  ==========================================

def dump_json(payload) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_json(payload, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_json(payload), encoding="utf-8")
    return path


def candidate_to_record(c: Candidate) -> dict:
    p = c.params
    return {
        "t": p.t,
        "n": p.n,
        "s": p.s,
        "m": p.m,
        "omega": c.valencies.omega,
        "valencies": list(c.valencies.valencies),
        "multiplicities": list(c.counts.counts),
        "status": c.status,
        "reason": c.reason,
        "findings": [f.to_record() for f in c.findings],
    }


def candidate_from_record(record: dict) -> Candidate:
    """Rebuilds an open candidate; stored status and findings are dropped so checks rerun."""
    missing = [key for key in ("t", "n", "s", "m", "valencies", "multiplicities") if key not in record]
    if missing:
        raise ValueError(f"candidate record lacks {missing}")
    params = SpectralParams(t=int(record["t"]), n=int(record["n"]), s=int(record["s"]), m=int(record["m"]))
    valencies = ValencyArray.from_valencies(params, [int(k) for k in record["valencies"]])
    counts = MultiplicityArray(valencies=valencies, counts=tuple(int(c) for c in record["multiplicities"]))
    return Candidate.from_array(counts)


def read_candidates_json(path: str | Path) -> list[Candidate]:
    """Accepts a single candidate object or a list of them, as written by the search."""
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Candidate file not found at {path}")
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    records = payload if isinstance(payload, list) else [payload]
    return [candidate_from_record(record) for record in records]

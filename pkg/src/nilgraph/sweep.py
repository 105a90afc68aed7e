"""Grid sweeps comparing family predicates with the exact solver."""

from __future__ import annotations

import csv
import io
import itertools
from concurrent.futures import ProcessPoolExecutor

from .families import fidelity_problems, get_family, realize
from .linalg import format_rational
from .positivity import Verdict, check_positive

CSV_VERSION = "# nilgraph sweep csv v1"


def parse_range(text: str) -> list[int]:
    """``"1..8"``, ``"3"`` or ``"1,2,5"``."""
    values: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError(f"empty range {part!r}")
            values.extend(range(lo, hi + 1))
        else:
            values.append(int(part))
    return values


def grid(name: str, ranges: dict[str, list[int]]) -> list[dict]:
    fam = get_family(name)
    missing = [p for p in fam.params if p not in ranges]
    extra = [p for p in ranges if p not in fam.params]
    if missing or extra:
        raise ValueError(f"{name} needs ranges for {', '.join(fam.params)}")
    return [dict(zip(fam.params, combo)) for combo in itertools.product(*(ranges[p] for p in fam.params))]


def sweep_row(name: str, params: dict) -> dict:
    fam = get_family(name)
    spec = fam.spec(**params)
    g = realize(spec)
    report = check_positive(g)
    solver_positive = report.verdict is Verdict.POSITIVE
    pred = fam.predicate(**params)
    if fam.biconditional:
        prediction = "POSITIVE" if pred else "NON-POSITIVE"
        agree = pred == solver_positive
    else:
        prediction = "NON-POSITIVE" if pred else "none"
        agree = (not pred) or not solver_positive
    return {
        **params,
        "prediction": prediction,
        "verdict": report.verdict.value,
        "agree": agree,
        "min_weight": report.min_weight,
        "faithful": not fidelity_problems(spec, g),
    }


def _row_args(args):
    return sweep_row(*args)


def run_sweep(name: str, ranges: dict[str, list[int]], jobs: int = 1) -> list[dict]:
    points = [(name, p) for p in grid(name, ranges)]
    if jobs <= 1:
        return [_row_args(a) for a in points]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_row_args, points, chunksize=8))


def sweep_csv(name: str, rows: list[dict]) -> str:
    fam = get_family(name)
    buf = io.StringIO()
    buf.write(CSV_VERSION + "\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["family", *fam.params, "prediction", "verdict", "agree", "min_weight", "faithful"])
    for r in rows:
        w.writerow([name, *(r[p] for p in fam.params), r["prediction"], r["verdict"],
                    str(r["agree"]).lower(), format_rational(r["min_weight"]), str(r["faithful"]).lower()])
    return buf.getvalue()

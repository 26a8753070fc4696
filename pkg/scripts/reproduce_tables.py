"""Recompute the facet and CRY Ehrhart tables and optionally compare them.

    python scripts/reproduce_tables.py --family cry --max-n 6
    python scripts/reproduce_tables.py --family facet --max-n 5 --out facet.json
"""

import argparse
import importlib.util
import json
import sys
import time
from pathlib import Path

from birkhoff.ehrhart import face_ehrhart
from birkhoff.mgf import ZeroPattern

HERE = Path(__file__).resolve().parent


def published():
    path = HERE.parent / "tests" / "paper_values.py"
    if not path.exists():
        return None
    spec = importlib.util.spec_from_file_location("paper_values", path)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return {"facet": mod.FACET, "cry": mod.CRY}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--family", choices=("facet", "cry"), default="cry")
    ap.add_argument("--min-n", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--out", help="write results as JSON")
    args = ap.parse_args()

    reference = published()
    rows = {}
    mismatches = 0
    for n in range(args.min_n, args.max_n + 1):
        pattern = ZeroPattern.cry(n) if args.family == "cry" else ZeroPattern(n, [(1, 1)])
        start = time.monotonic()
        res = face_ehrhart(n, pattern, threads=args.threads, progress=True)
        secs = time.monotonic() - start
        coeffs = res.polynomial.to_strings()
        rows[n] = {
            "coefficients": coeffs,
            "dimension": res.dimension,
            "normalized_volume": str(res.normalized_volume),
            "term_count": res.term_count,
            "seconds": round(secs, 2),
        }
        status = ""
        if reference and n in reference[args.family]:
            same = reference[args.family][n] == coeffs
            mismatches += not same
            status = "matches table" if same else "DIFFERS from table"
        print(f"n={n} dim={res.dimension} vol={res.normalized_volume} "
              f"terms={res.term_count} {secs:.1f}s {status}")
        print(f"  e(t) = {res.polynomial}")
    if args.out:
        Path(args.out).write_text(json.dumps(rows, indent=2))
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())

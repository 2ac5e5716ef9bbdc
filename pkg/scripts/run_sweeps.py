#!/usr/bin/env python3
"""Run verification sweeps at chosen bounds and write a JSON summary.

    python3 scripts/run_sweeps.py --suites garnir,wiring --max-size 7 --out sweeps.json

SPECHT_THREADS sets the number of worker processes.
"""
import argparse
import json
import sys

from skewspecht.sweeps import SUITES, SweepConfig


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--suites", default=",".join(sorted(SUITES)))
    ap.add_argument("--max-size", type=int, default=6)
    ap.add_argument("--max-height", type=int, default=8)
    ap.add_argument("--es", default="2,3")
    ap.add_argument("--out", default=None, help="write the JSON summary here")
    args = ap.parse_args(argv)

    names = [s for s in args.suites.split(",") if s]
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        ap.error(f"unknown suites {unknown}; choose from {sorted(SUITES)}")
    cfg = SweepConfig.from_env(max_size=args.max_size, max_height=args.max_height,
                               es=tuple(int(x) for x in args.es.split(",")))
    rows = []
    for name in names:
        r = SUITES[name](cfg)
        print(f"{name:12s} {r.summary():40s} {r.seconds:8.1f}s", flush=True)
        rows.append(dict(r.to_json(), seconds=round(r.seconds, 2)))
    if args.out:
        with open(args.out, "w") as fh:
            json.dump({"config": vars(cfg), "results": rows}, fh, indent=2, sort_keys=True)
    return 0 if all(r["passed"] for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())

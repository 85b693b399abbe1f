#!/usr/bin/env python3
"""Enumerate valid family instances (and near misses) up to a bound on b.

    python scripts/sweep_families.py --bmax 5
    python scripts/sweep_families.py --bmax 5 --certify --out sweep.json
"""

import argparse
import json
import sys
import time

from singlib import make_family, negative_answer_pipeline, sweep_families


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bmax", type=int, default=5)
    ap.add_argument("--certify", action="store_true",
                    help="run the full pipeline on every instance")
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    sweep = sweep_families(args.bmax)
    print(f"{len(sweep['instances'])} instances with b <= {args.bmax}, "
          f"{len(sweep['near_misses'])} near misses")
    for inst in sweep["instances"]:
        line = f"  a={inst['a']:>3} b={inst['b']} c={inst['c']}"
        if args.certify:
            t0 = time.monotonic()
            cert = negative_answer_pipeline(make_family(inst["a"], inst["b"], inst["c"]))
            inst["status"] = cert["status"]
            if cert["status"] == "CERTIFIED":
                inst["verdicts"] = cert["verdicts"]
            line += f"  -> {cert['status']} ({time.monotonic() - t0:.1f}s)"
        print(line)

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(sweep, fh, indent=2)
        print(f"sweep written to {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

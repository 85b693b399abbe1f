#!/usr/bin/env python3
"""Run the full negative-answer certificate for one family instance.

Defaults to the reference instance (a, b, c) = (7, 3, 5).  Prints the step
table and writes the JSON certificate next to it.

    python scripts/reproduce_counterexample.py
    python scripts/reproduce_counterexample.py 9 4 7 --out cert_947.json
"""

import argparse
import sys
import time

from singlib import make_family, negative_answer_pipeline
from singlib.family import certificate_json


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("a", type=int, nargs="?", default=7)
    ap.add_argument("b", type=int, nargs="?", default=3)
    ap.add_argument("c", type=int, nargs="?", default=5)
    ap.add_argument("--out", default="certificate.json")
    args = ap.parse_args()

    params = make_family(args.a, args.b, args.c)
    print(f"family: (a, b, c) = ({params.a}, {params.b}, {params.c})")
    print(f"beta0 = {params.beta0}, deformation monomial {params.deformation_monomial}")

    t0 = time.monotonic()
    cert = negative_answer_pipeline(params)
    dt = time.monotonic() - t0

    for step in cert["steps"]:
        print(f"  [ok] step {step['id']:>4}  {step['name']}")
    if cert["status"] != "CERTIFIED":
        print(f"  [!!] step {cert['failed_step']}: {cert['failure']}")
        print(f"status: {cert['status']} ({dt:.1f}s)")
        return 1

    v = cert["verdicts"]
    s = cert["summary"]
    print(f"status: CERTIFIED ({dt:.1f}s)")
    print(f"  mu_h = {s['mu_h']}, mu_g = {s['mu_g']}")
    print(f"  verdict: {v['question1']} at alpha = {v['b_root']['alpha']} "
          f"(simple root), strictness = {v['strictness']}, "
          f"jordan mismatch = {v['jordan_mismatch']}")

    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(certificate_json(cert))
    print(f"certificate written to {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Evaluate the bound functions and the comparison chain for a range of n.

Prints one row per n with log2-scale approximations of x, m and N, the
polarity of each quantity, and which comparison links are certified.
Use --json for the full reports (exact interval endpoints included).
"""

import argparse
import json
import time

from primegraphs.bounds import LINKS, bound_report, compare_bounds


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lo", type=int, default=2)
    ap.add_argument("--hi", type=int, default=20)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    if not args.json:
        print(f"{'n':>3}  {'g(n)':>12}  {'x':>28}  {'m':>28}  {'N':>28}  links  secs")
    for n in range(args.lo, args.hi + 1):
        t0 = time.perf_counter()
        rep = bound_report(n)
        cmp = compare_bounds(n, rep)
        dt = time.perf_counter() - t0
        if args.json:
            print(json.dumps({"report": rep.to_json(), "comparison": cmp.to_json(), "seconds": round(dt, 3)}))
            continue
        links = "".join("T" if cmp.links[k] else "F" for k in LINKS)
        print(f"{n:>3}  {str(rep.g_n):>12}  {str(rep.x):>28}  {str(rep.m):>28}  {str(rep.N_new):>28}  {links}  {dt:.2f}")


if __name__ == "__main__":
    main()

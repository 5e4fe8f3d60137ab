#!/usr/bin/env python3
"""Verify that every pair of reconstructions over one category is twist
equivalent.

For each catalog entry this builds one algebra per functor tag at the
minimal dimension vector, computes the twist for every ordered pair, and
checks quasi-invertibility plus the coproduct, braiding, and associator
transport identities. Worst deviation should print as 0 throughout.
"""

import argparse
import time
from itertools import product

from wqhopf.catalog import builtin, catalog_keys
from wqhopf.functor import build_functor
from wqhopf.fusion import minimize_dimension_function
from wqhopf.hopf import reconstruct
from wqhopf.twist import twist_between, verify_twist


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seeds", default="canonical,3,7,11",
                    help="comma separated functor tags")
    ap.add_argument("--bound", type=int, default=4,
                    help="cap for the dimension minimizer")
    args = ap.parse_args()
    tags = [s.strip() for s in args.seeds.split(",")]

    failures = 0
    for name, n, q in catalog_keys():
        cat = builtin(name, n=n, q=q).category
        D = minimize_dimension_function(cat.ring, args.bound)
        t0 = time.perf_counter()
        algebras = {}
        for tag in tags:
            F = (build_functor(cat, D) if tag == "canonical"
                 else build_functor(cat, D, strategy="random", seed=int(tag)))
            algebras[tag] = reconstruct(F)
        worst, bad = 0.0, []
        for x, y in product(tags, repeat=2):
            T = twist_between(algebras[x], algebras[y])
            rep = verify_twist(algebras[x], algebras[y], T)
            worst = max(worst, max((c.worst_deviation for c in rep.checks),
                                   default=0.0))
            if not rep.passed:
                bad.append((x, y, [c.id for c in rep.failures()]))
        dt = time.perf_counter() - t0
        status = "ok" if not bad else f"FAIL {bad}"
        print(f"{cat.name:<12} {len(tags) ** 2:3d} pairs  "
              f"worst={worst:g}  {dt:5.1f}s  {status}")
        failures += len(bad)
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())

#!/usr/bin/env python3
"""Build one reconstruction end to end and print its report card.

Defaults to the golden-ratio category at the minimal weak dimension
vector (1, 2): a 5 dimensional algebra M_1 + M_2 whose coproduct unit
is a proper projector. Every verifier runs at tolerance 0.
"""

import argparse

from wqhopf.catalog import builtin
from wqhopf.files import algebra_to_json, save_json
from wqhopf.functor import build_functor
from wqhopf.fusion import minimize_dimension_function
from wqhopf.hopf import (reconstruct, verify_structure_transport,
                         verify_weak_axioms)
from wqhopf.linalg import rank


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--builtin", default="fibonacci")
    ap.add_argument("--n", type=int, default=None, help="vec_zn order")
    ap.add_argument("--q", type=int, default=None, help="vec_zn cocycle")
    ap.add_argument("--bound", type=int, default=4,
                    help="cap for the dimension minimizer")
    ap.add_argument("--seed", type=int, default=None,
                    help="randomized functor instead of the canonical one")
    ap.add_argument("-o", "--output", default=None,
                    help="dump the algebra as JSON")
    args = ap.parse_args()

    cat = builtin(args.builtin, n=args.n, q=args.q).category
    D = minimize_dimension_function(cat.ring, args.bound)
    print(f"category: {cat.name}")
    print("D =", dict(zip(cat.ring.labels, D.values)),
          "(exact)" if D.exact else "(weak)")
    if args.seed is None:
        F = build_functor(cat, D)
    else:
        F = build_functor(cat, D, strategy="random", seed=args.seed)
    H = reconstruct(F)
    print(f"dim H = {H.dim}; blocks:",
          " + ".join(f"M_{d}({lab})" for lab, d in H.blocks))
    lab = cat.ring.labels
    for (a, b), M in sorted(H.delta_unit.items()):
        print(f"  rank Delta(1)[{lab[a]},{lab[b]}] = {rank(M)} of {len(M)}")
    rep = verify_weak_axioms(H)
    rep.extend(verify_structure_transport(H))
    print(rep.human_table())
    if args.output:
        save_json(args.output, algebra_to_json(H))
        print("wrote", args.output)
    return 0 if rep.passed else 1


if __name__ == "__main__":
    raise SystemExit(main())

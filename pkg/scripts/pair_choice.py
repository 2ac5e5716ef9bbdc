#!/usr/bin/env python3
"""Compare the cuspidal answer across every real minimal pair of each root.

The recursion picks one pair; this script glues along all of them and reports
any root where two joinable pairs disagree on shape or shift.
"""
import argparse

from skewspecht.cuspidal import cuspidal_shape, join_pair
from skewspecht.preorders import PreorderSpec, minimal_pairs
from skewspecht.root_system import positive_roots_up_to_height


def disagreements(e: int, h: int):
    p = PreorderSpec.erow(e)
    for rho in positive_roots_up_to_height(h, e):
        if not rho.is_real or rho.height(e) == 1:
            continue
        chosen = cuspidal_shape(rho, p)
        for mp in minimal_pairs(p, rho):
            if not mp.real:
                continue
            alt = join_pair(rho, p, mp)
            if alt is not None and (alt.shape, alt.shift) != (chosen.shape, chosen.shift):
                yield rho, mp, chosen, alt


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--es", default="2,3,4")
    ap.add_argument("--max-height", type=int, default=8)
    args = ap.parse_args(argv)
    total = 0
    for e in (int(x) for x in args.es.split(",")):
        bad = list(disagreements(e, args.max_height))
        total += len(bad)
        print(f"e={e}: {len(bad)} disagreements up to height {args.max_height}")
        for rho, mp, a, b in bad:
            print(f"  {rho.spelling()} via ({mp.beta.spelling()}, {mp.gamma.spelling()}): "
                  f"{a.shape}<{a.shift}> vs {b.shape}<{b.shift}>")
    return 1 if total else 0


if __name__ == "__main__":
    raise SystemExit(main())

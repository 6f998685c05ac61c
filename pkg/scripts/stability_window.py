#!/usr/bin/env python3
"""Probe homological stability for the unordered configuration presets.

For every preset with ambient dimension at least 3, checks in which degrees
the map H_i(B_{k+1}) -> H_i(B_k) induced by forgetting a point is an
isomorphism.  The claimed stable range is i <= k; the script prints the
observed boundary so near-misses outside the range are visible too.
"""

import argparse
import sys

from confspace import ce, presets


def probe(name, k_max):
    a = presets.load_preset(name)
    if a.n <= 2:
        return
    g = ce.build_gm(a)
    print("## %s (ambient dimension %d)" % (name, a.n))
    misses = 0
    for k, i, ok in ce.stability_report(g, k_max):
        claimed = "stable" if i <= k else "outside"
        mark = "iso" if ok else "NOT ISO"
        if not ok and i <= k:
            misses += 1
        print("  k=%d -> k=%d  i=%d  %-7s (%s)" % (k + 1, k, i, mark, claimed))
    print("  violations inside the claimed range: %d" % misses)
    print()
    return misses


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--preset", action="append",
                    help="preset name (repeatable; default: all with n >= 3)")
    ap.add_argument("--kmax", type=int, default=6)
    args = ap.parse_args()
    names = args.preset or presets.list_presets()
    bad = 0
    for name in names:
        bad += probe(name, args.kmax) or 0
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())

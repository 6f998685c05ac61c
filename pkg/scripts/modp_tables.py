#!/usr/bin/env python3
"""Tabulate mod-p invariants of the point-configuration modules.

For each prime p and ambient dimension n requested, prints the cyclic-group
cohomology dimensions of the weight-p configuration module in a window of
internal degrees, the Tate periodicity check, and the closed-form answers
(symmetric invariants, stable series) next to them.  All ranks are exact
mod-p ranks.
"""

import argparse
import sys

from confspace import modp


def table(p, n, s_max):
    print("## p = %d, n = %d" % (p, n))
    top = (p - 1) * (n - 1)
    for j in range(p):
        m = modp.conf_module(p, n, j * (n - 1))
        coh = modp.cyclic_cohomology(m, s_max)
        dims = [coh.get(s) for s in range(s_max + 1)]
        print("  internal degree %2d (dim %d): H^0..H^%d = %s"
              % (j * (n - 1), m.dim, s_max, dims))
    inv = modp.invariants_sigma_p(p, n)
    print("  symmetric invariants: %s"
          % " ".join("h^%d=%d" % (d, v) for d, v in sorted(inv.items())))
    ok = modp.verify_vanishing(p, n)
    print("  transfer vanishing in degrees 1..%d: %s" % (top, ok))
    print("  Swan period of Z/%d: %d" % (p, modp.swan_period(p)))
    print()


def tate_window(p, n, window):
    lo, hi = -window, window
    print("## Tate window p = %d, n = %d, degrees %d..%d" % (p, n, lo, hi))
    for j in range(p):
        m = modp.conf_module(p, n, j * (n - 1))
        td = modp.tate(m, (lo, hi))
        row = [td.get(s) for s in range(lo, hi + 1)]
        print("  j=%d: %s  two-periodic=%s" % (j, row, td.is_two_periodic()))
    print()


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, action="append",
                    help="odd prime (repeatable; default 3 5)")
    ap.add_argument("--n", type=int, action="append",
                    help="ambient dimension (repeatable; default 2 3)")
    ap.add_argument("--smax", type=int, default=6)
    ap.add_argument("--window", type=int, default=5)
    args = ap.parse_args()
    ps = args.p or [3, 5]
    ns = args.n or [2, 3]
    for p in ps:
        for n in ns:
            table(p, n, args.smax)
            tate_window(p, n, args.window)
    return 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Scan Betti tables of unordered configuration spaces across the presets.

For each selected preset, prints dim H_i(B_k(M)) as a (k, i) table and the
per-weight Euler characteristics.  Everything is exact; expect the closed
even-dimensional presets to grow quickly with k.
"""

import argparse
import sys

from confspace import ce, presets


def scan(name, k_max):
    a = presets.load_preset(name)
    g = ce.build_gm(a)
    tables = {}
    top = 0
    for k in range(k_max + 1):
        dims = dict(ce.betti(g, k).items())
        tables[k] = dims
        if dims:
            top = max(top, max(dims))
    print("## %s (ambient dimension %d)" % (name, a.n))
    header = ["k\\i"] + [str(i) for i in range(top + 1)] + ["chi"]
    rows = []
    for k in range(k_max + 1):
        dims = tables[k]
        chi = sum(((-1) ** i) * d for i, d in dims.items())
        rows.append([str(k)] + [str(dims.get(i, 0)) for i in range(top + 1)]
                    + [str(chi)])
    widths = [max(len(r[i]) for r in [header] + rows)
              for i in range(len(header))]
    for row in [header] + rows:
        print("  ".join(x.rjust(w) for x, w in zip(row, widths)))
    print()


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--preset", action="append",
                    help="preset name (repeatable; default: all)")
    ap.add_argument("--kmax", type=int, default=6)
    args = ap.parse_args()
    names = args.preset or presets.list_presets()
    for name in names:
        scan(name, args.kmax)
    return 0


if __name__ == "__main__":
    sys.exit(main())

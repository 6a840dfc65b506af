#!/usr/bin/env python3
"""Print an economy comparison table for the G, H, and M families.

For each multiplicity m up to --m-max, reports design size and the economy
ratio Gamma = m*d / size at the chosen dimension. Equivalent to the
`eqdesign economy` subcommand; kept as a script for quick experiment runs.
"""
import argparse

from eqdesign.families import economy_limits, gen_G, gen_H, gen_M, q_min


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dim", type=int, default=30)
    ap.add_argument("--m-max", type=int, default=16)
    args = ap.parse_args()

    d, m_max = args.dim, args.m_max
    print(f"{'m':>4} {'|G|':>6} {'|H|':>6} {'|M|':>6} "
          f"{'G(G)':>8} {'G(H)':>8} {'G(M)':>8} {'lim H':>8} {'lim M':>16}")
    for m in range(1, min(m_max, 1 << (d - 1)) + 1):
        g = gen_G(d, m)
        h = gen_H(d, m) if m >= 2 else None
        big = gen_M(d, m) if d >= 2 * q_min(m) else None
        lim_g, lim_h, lim_m = economy_limits(m)
        row = [f"{m:>4}", f"{len(g):>6}",
               f"{len(h) if h else '-':>6}", f"{len(big) if big else '-':>6}",
               f"{float(g.economy(m)):>8.4f}",
               f"{float(h.economy(m)) if h else float('nan'):>8.4f}",
               f"{float(big.economy(m)) if big else float('nan'):>8.4f}"]
        if lim_h is not None:
            row.append(f"{float(lim_h[0]):>8.4f}")
            row.append(f"[{float(lim_m[0]):.3f}, {float(lim_m[1]):.3f}]".rjust(16))
        else:
            row.append(f"{'-':>8}")
            row.append(f"{'-':>16}")
        print(" ".join(row))


if __name__ == "__main__":
    main()

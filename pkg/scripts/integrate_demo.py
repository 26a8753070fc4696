"""Moments of a coordinate over B_n: integral of x_11**p, normalized measure.

    python scripts/integrate_demo.py --n 3 --max-p 4
"""

import argparse
from math import factorial

from birkhoff.ehrhart import generic_vector, volume
from birkhoff.integration import LinearForm, integrate_power
from birkhoff.mgf import birkhoff_terms


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--max-p", type=int, default=4)
    args = ap.parse_args()
    n, d = args.n, (args.n - 1) ** 2
    terms = list(birkhoff_terms(n, 1))
    vol = volume(terms, d, generic_vector(n))
    print(f"B_{n}: dimension {d}, normalized volume {vol}, relative volume {vol / factorial(d)}")
    x11 = LinearForm.unit(n, 1, 1)
    for p in range(args.max_p + 1):
        val = integrate_power(terms, d, x11, p)
        print(f"  int x11^{p} = {val}   (mean {val / vol})")


if __name__ == "__main__":
    main()

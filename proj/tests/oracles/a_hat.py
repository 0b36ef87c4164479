"""Exponential sums A_k(n) for the distinct-parts and p_k eta quotients, by mpmath.

Dedekind sums use the sawtooth definition directly. Writes "label k n re im" lines.
"""

import sys
from fractions import Fraction
from math import gcd, floor

import mpmath as mp

mp.mp.dps = 40


def sawtooth(x):
    if x.denominator == 1:
        return Fraction(0)
    return x - floor(x) - Fraction(1, 2)


def dedekind(h, k):
    return sum(sawtooth(Fraction(r, k)) * sawtooth(Fraction(h * r, k)) for r in range(1, k))


def a_hat(m, delta, k, n):
    total = mp.mpc(0)
    for h in range(k):
        if gcd(h, k) != 1:
            continue
        e = Fraction(-2 * h * n, k)
        for mr, dr in zip(m, delta):
            g = gcd(mr, k)
            e -= dr * dedekind(mr * h // g, k // g)
        total += mp.expjpi(mp.mpf(e.numerator) / e.denominator)
    return total


QUOTIENTS = {"distinct": ([1, 2], [-1, 1]), "p3": ([1, 3], [-1, 1]), "p5": ([1, 5], [-1, 1])}
GRID = [(1, 0), (1, 7), (2, 5), (3, 0), (3, 4), (5, 1), (7, 135), (9, 10), (12, 100), (25, 1000), (49, 2021)]


def main(path):
    with open(path, "w") as fh:
        fh.write("# label k n re im\n")
        for label, (m, delta) in QUOTIENTS.items():
            for k, n in GRID:
                v = a_hat(m, delta, k, n)
                fh.write(f"{label} {k} {n} {mp.nstr(v.real, 30)} {mp.nstr(v.imag, 30)}\n")
        fh.write(f"dedekind 1 3 {dedekind(1, 3)}\n")
        fh.write(f"dedekind 5 12 {dedekind(5, 12)}\n")
        fh.write(f"dedekind 7 100 {dedekind(7, 100)}\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "a_hat.txt")

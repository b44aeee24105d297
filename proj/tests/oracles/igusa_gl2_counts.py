"""Brute-force det-valuation strata counts on gl2(Z/p^{j+1}).

Prints, for each j, the number N_j of 2x2 matrices mod p^{j+1} whose
determinant has p-adic valuation exactly j, and the induced volume
N_j / p^{4(j+1)}.  These numbers are frozen into tests/test_acceptance.cpp.
"""
from fractions import Fraction
from itertools import product
import sys


def val(x, p, cap):
    if x % p**cap == 0:
        return cap
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def counts(p, jmax):
    out = []
    for j in range(jmax + 1):
        mod = p ** (j + 1)
        n = 0
        for a, b, c, d in product(range(mod), repeat=4):
            if val((a * d - b * c) % mod, p, j + 1) == j:
                n += 1
        out.append((j, n, Fraction(n, mod**4)))
    return out


if __name__ == "__main__":
    p = int(sys.argv[1]) if len(sys.argv) > 1 else 2
    jmax = int(sys.argv[2]) if len(sys.argv) > 2 else 3
    for j, n, vol in counts(p, jmax):
        print(j, n, vol)

"""Brute-force reference for the weighted projective space criterion.

Enumerates the delta/gamma tuples directly from their definition over a generous
box and compares the resulting sets with the simplex-array shape. Independent of
the C++ implementation.

Usage: python3 tests/oracles/wps_oracle.py a,b,c1,c2[,c3] ...
"""
import sys
from fractions import Fraction as F
from itertools import product
from math import comb, gcd, lcm, prod


def relations(w):
    a, b, cs = w[0], w[1], w[2:]
    out = []
    # Any degree with all g_i pairwise coprime; scan multiples of lcm too.
    base = lcm(*cs)
    for d in range(base, 4 * base + 1, base):
        g = [d // c for c in cs]
        if any(gcd(g[i], g[j]) != 1 for i in range(len(g)) for j in range(i + 1, len(g))):
            continue
        for e in range(1, d // a + 1):
            if (d - e * a) % b == 0 and (d - e * a) // b >= 1:
                f = (d - e * a) // b
                if all(gcd(gcd(e, f), gi) == 1 for gi in g):
                    out.append((e, f, tuple(g), d))
    return out


def tuples(w, rel, k, sign):
    a, b = w[0], w[1]
    e, f, g, d = rel
    G = prod(g)
    box = range(0, 4 * max(a, b) * max(k, 1) + 2)
    found = set()
    for x in product(box, repeat=len(g)):
        s = sum(F(sign * xi, gi) for xi, gi in zip(x, g))
        u = F(k * b, G) + s * e
        v = F(k * a, G) - s * f
        if u >= 0 and v >= 0 and u.denominator == 1 and v.denominator == 1:
            found.add(tuple(sign * xi for xi in x))
    return found


def simplex_size(points, g, sign):
    if not points:
        return 0
    k = len(g)
    corner = tuple((min if sign > 0 else max)(p[i] for p in points) for i in range(k))
    n = 1
    while comb(n + k - 1, k) < len(points):
        n += 1
    want = set()
    for idx in product(range(n), repeat=k):
        if sum(idx) < n:
            want.add(tuple(c + sign * gi * i for c, gi, i in zip(corner, g, idx)))
    return n if want == points else None


def check(w):
    r = len(w) - 1
    for rel in relations(w):
        e, f, g, d = rel
        if F(d**r, prod(w)) > 1:
            continue
        n = simplex_size(tuples(w, rel, 1, -1), g, -1)
        if not n:
            continue
        if simplex_size(tuples(w, rel, n - 1, +1), g, +1) != n:
            continue
        G = prod(g)
        if (n * w[1]) % G == 0 and (n * w[0]) % G == 0:
            continue
        return rel, n
    return None


if __name__ == "__main__":
    for arg in sys.argv[1:]:
        w = [int(x) for x in arg.split(",")]
        print(arg, check(w))

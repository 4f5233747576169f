#!/usr/bin/env python3
"""Independent oracle for the frozen expected values in the C++ tests.

Uses plain Python integers/Fractions and sympy; shares no code with the
C++ library. Run it to re-derive every hard-coded value.
"""
from fractions import Fraction
from itertools import combinations, product
from math import comb

import sympy as sp


def C(n, k):
    return comb(n, k) if 0 <= k <= n else 0


def m_g(d):
    n = d // 2
    return [[C(d - k + 1, d - i + 1) - C(k, d - i + 1) for k in range(n + 1)] for i in range(d + 1)]


def m_gamma(d):
    n = d // 2
    return [[sum(C(k, i - k - j) * C(d - 2 * k, j) * 2**j for j in range(d + 1)) for k in range(n + 1)]
            for i in range(d + 1)]


def a_win(minus, rows, cols):
    s = 1 if minus else -1
    return [[C(j + 1, i - j) + s * C(j, i - j - 1) for j in range(cols)] for i in range(rows)]


def g_factor(minus, n):
    def gp(j, k):
        v = Fraction(2 * k + 1, 2 * j + 1) * C(k + j, 2 * j)
        assert v.denominator == 1
        return int(v)

    def gm(j, k):
        return C(k + j + 1, 2 * j + 1)

    f = gm if minus else gp
    return [[f(n - j, n - k) for k in range(n + 1)] for j in range(n + 1)]


def cap_gamma(n):
    return [[(4 ** ((n - k) - (n - j)) * C(n - k, n - j)) if n - k >= n - j else 0 for k in range(n + 1)]
            for j in range(n + 1)]


def g_from_gamma_mat(d):
    n = d // 2
    return [[C(d - 2 * j, i - j) - C(d - 2 * j, i - 1 - j) if j <= i else 0 for j in range(n + 1)]
            for i in range(n + 1)]


def mul(a, b):
    return [[sum(a[i][t] * b[t][j] for t in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def det(m):
    return sp.Matrix(m).det()


def minors(m):
    r, c = len(m), len(m[0])
    out = []
    for o in range(1, min(r, c) + 1):
        for rs in combinations(range(r), o):
            for cs in combinations(range(c), o):
                out.append(det([[m[i][j] for j in cs] for i in rs]))
    return out


def main():
    print("m_g(0..3):", m_g(0), m_g(2), m_g(3))
    print("m_gamma(0,2,3):", m_gamma(0), m_gamma(2), m_gamma(3))
    print("a(minus,4,2):", a_win(True, 4, 2), "a(plus,3,2):", a_win(False, 3, 2))
    print("g_factor(minus,1):", g_factor(True, 1), "g_factor(plus,1):", g_factor(False, 1))
    print("cap_gamma(1):", cap_gamma(1), "cap_gamma(2):", cap_gamma(2))
    print("g_from_gamma(2,3,4):", g_from_gamma_mat(2), g_from_gamma_mat(3), g_from_gamma_mat(4))
    for d in range(25):
        n = d // 2
        minus = d % 2 == 1
        A = a_win(minus, d + 1, n + 1)
        assert mul(A, g_factor(minus, n)) == m_g(d), d
        assert mul(A, cap_gamma(n)) == m_gamma(d), d
        assert mul(m_g(d), g_from_gamma_mat(d)) == m_gamma(d), d
    print("factorizations hold for d <= 24")
    m3 = m_g(3)
    ms = minors(m3)
    print("M_g(3) minors count", len(ms), "min", min(ms))
    print("minor M_g(3) {1,2}x{0,1}:", det([[m3[1][0], m3[1][1]], [m3[2][0], m3[2][1]]]))
    for d in range(0, 9):
        assert min(minors(m_g(d))) >= 0 and min(minors(m_gamma(d))) >= 0
    print("M_g, M_gamma TNN for d <= 8 (sympy)")
    print("M_g(12) minor count", len(minors(m_g(12))) if False else
          sum(C(13, o) * C(7, o) for o in range(1, 8)))
    print("M_g(10) minor count", sum(C(11, o) * C(6, o) for o in range(1, 7)))

    # g from gamma = (1,0,0) at d=4 and f consistency
    for d, gam in [(4, [1, 0, 0]), (3, [1, 0]), (2, [1, 1])]:
        g = [sum(r[j] * gam[j] for j in range(len(gam))) for r in g_from_gamma_mat(d)]
        f1 = [sum(r[j] * g[j] for j in range(len(g))) for r in m_g(d)]
        f2 = [sum(r[j] * gam[j] for j in range(len(gam))) for r in m_gamma(d)]
        print("g_from_gamma", d, gam, "->", g, "f", f1, f2)

    # printed n-2j reading fails the cube
    n = 1
    gi = [sum((C(n - 2 * j, i - j) - C(n - 2 * j, i - 1 - j)) * [1, 0][j] for j in range(i + 1)) for i in range(2)]
    print("printed n-2j reading gives cube g =", gi)

    # generating functions
    z, s = sp.symbols("z s")

    def F(a):
        return sp.expand(sum(z**j * sp.Rational(2 * a + 1, 2 * a - 2 * j + 1) * C(2 * a - j, 2 * a - 2 * j)
                             for j in range(a + 1)))

    for a in range(3):
        print("F", a, F(a), " G", sp.expand(F(a).subs(z, s * (s + 1))))
    for a in range(6):
        f = F(a)
        printed = sp.expand(z * (4 * z + 1) * sp.diff(f, z, 2) + a * (z - a * (4 * z + 1)) * sp.diff(f, z)
                            + 2 * a * (2 * a + 1) * f)
        corrected = sp.expand(z * (4 * z + 1) * sp.diff(f, z, 2) + 2 * (z - a * (4 * z + 1)) * sp.diff(f, z)
                              + 2 * a * (2 * a + 1) * f)
        print("F-ODE a=%d printed=%s corrected=%s" % (a, printed, corrected))
    # face counts of (t+2)^d (cube) and tetrahedron
    print("u_poly(3,0)", sp.expand(sum((1 + s) ** q for q in range(0, 4))))
    print("lhs(0,0)", [C(1, 1 - i) - C(0, 1 - i) for i in range(2)])

    # brute-force face enumeration of 3-cube: argmax sets of functionals
    verts = list(product([0, 1], repeat=3))
    faces = set()
    for c in product([-1, 0, 1], repeat=3):
        vals = [sum(ci * vi for ci, vi in zip(c, v)) for v in verts]
        m = max(vals)
        faces.add(frozenset(v for v, x in zip(verts, vals) if x == m))
    cnt = {}
    for F_ in faces:
        pts = list(F_)
        dim = sp.Matrix([[p[t] - pts[0][t] for t in range(3)] for p in pts]).rank()
        cnt[3 - dim] = cnt.get(3 - dim, 0) + 1
    print("cube brute force f:", [cnt[i] for i in range(4)])


if __name__ == "__main__":
    main()

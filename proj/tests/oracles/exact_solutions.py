"""High-precision reference values for the unit and acceptance tests.

Solves EI w'''' - Gp w'' + k w = q(x) + sum P_i delta(x - x_i) on [0, a]
piecewise between point loads with exponential homogeneous solutions and a
polynomial particular solution, in 50-digit arithmetic. Writes
tests/unit/oracle_values.hpp.

    python3 tests/oracles/exact_solutions.py
"""

import pathlib

import mpmath as mp
import sympy as sp

mp.mp.dps = 50

FIELDS = ("w", "theta", "moment", "shear")


def char_roots(EI, k, Gp):
    """Roots r of EI r^4 - Gp r^2 + k = 0, with multiplicity handling."""
    disc = Gp * Gp - 4 * EI * k
    if disc == 0:
        s = mp.sqrt(Gp / (2 * EI))
        return [(s, 0), (s, 1), (-s, 0), (-s, 1)]
    sq = mp.sqrt(mp.mpc(disc))
    r2a = (Gp + sq) / (2 * EI)
    r2b = (Gp - sq) / (2 * EI)
    ra, rb = mp.sqrt(r2a), mp.sqrt(r2b)
    return [(ra, 0), (-ra, 0), (rb, 0), (-rb, 0)]


def hom_deriv(root, power, order, x, x_ref):
    """d^order/dx^order of (x - x_ref)^power exp(r (x - x_ref)), power in {0, 1}."""
    r, t = root, x - x_ref
    e = mp.exp(r * t)
    if power == 0:
        return r ** order * e
    return (t * r ** order + order * r ** (order - 1)) * e if order > 0 else t * e


def particular(EI, k, Gp, a, poly):
    """Polynomial w_p in powers of x/a with L w_p = q."""
    n = len(poly) - 1
    c = [mp.mpf(0)] * (n + 1)
    for i in range(n, -1, -1):
        rhs = mp.mpf(poly[i])
        if i + 2 <= n:
            rhs += Gp * (i + 2) * (i + 1) * c[i + 2] / a ** 2
        if i + 4 <= n:
            rhs -= EI * (i + 4) * (i + 3) * (i + 2) * (i + 1) * c[i + 4] / a ** 4
        c[i] = rhs / k
    return c


def poly_deriv(c, a, order, x):
    s = mp.mpf(0)
    for j, cj in enumerate(c):
        if j >= order:
            f = mp.mpf(1)
            for t in range(order):
                f *= j - t
            s += cj * f * (x / a) ** (j - order) / a ** order
    return s


class Exact:
    def __init__(self, EI, a, k, Gp, bc, poly, points=(), shear="literal"):
        self.EI, self.a, self.k, self.Gp = map(mp.mpf, (EI, a, k, Gp))
        self.roots = char_roots(self.EI, self.k, self.Gp)
        self.wp = particular(self.EI, self.k, self.Gp, self.a, poly)
        pts = sorted(points, key=lambda p: p[1])
        self.cuts = [mp.mpf(0)] + [mp.mpf(x0) for _, x0 in pts] + [self.a]
        nseg = len(self.cuts) - 1
        n = 4 * nseg
        A = mp.matrix(n, n)
        b = mp.matrix(n, 1)
        row = 0

        def hom_row(seg, order, x):
            out = [mp.mpc(0)] * n
            x_ref = self.cuts[seg]
            for j, (r, pw) in enumerate(self.roots):
                # decaying-friendly reference point
                ref = x_ref if mp.re(r) <= 0 else self.cuts[seg + 1]
                out[4 * seg + j] = hom_deriv(r, pw, order, x, ref)
            return out

        def quantity(seg, kind, x):
            """(coefficients, particular value) of a physical quantity."""
            EI, Gp = self.EI, self.Gp
            if kind == "w":
                return hom_row(seg, 0, x), poly_deriv(self.wp, self.a, 0, x)
            if kind == "theta":
                return hom_row(seg, 1, x), poly_deriv(self.wp, self.a, 1, x)
            if kind == "moment":
                return [EI * v for v in hom_row(seg, 2, x)], EI * poly_deriv(self.wp, self.a, 2, x)
            if kind == "shear":
                return [EI * v for v in hom_row(seg, 3, x)], EI * poly_deriv(self.wp, self.a, 3, x)
            if kind == "natural_shear":
                h3, h1 = hom_row(seg, 3, x), hom_row(seg, 1, x)
                p = EI * poly_deriv(self.wp, self.a, 3, x) - Gp * poly_deriv(self.wp, self.a, 1, x)
                return [EI * u - Gp * v for u, v in zip(h3, h1)], p
            raise ValueError(kind)

        kinds = {"C": ("w", "theta"), "S": ("w", "moment"), "F": ("moment", "shear")}
        for (kind, v1, v2), seg, x in ((bc[0], 0, self.cuts[0]), (bc[1], nseg - 1, self.a)):
            for q, v in zip(kinds[kind], (v1, v2)):
                target = mp.mpf(v)
                if q == "shear" and shear == "variational":
                    q, target = "natural_shear", -target
                coeffs, p = quantity(seg, q, x)
                for j in range(n):
                    A[row, j] = coeffs[j]
                b[row] = target - p
                row += 1
        for s, (P, x0) in enumerate(pts):
            x = mp.mpf(x0)
            for order in range(3):
                left, right = hom_row(s, order, x), hom_row(s + 1, order, x)
                for j in range(n):
                    A[row, j] = left[j] - right[j]
                b[row] = 0
                row += 1
            left, right = hom_row(s, 3, x), hom_row(s + 1, 3, x)
            for j in range(n):
                A[row, j] = self.EI * (right[j] - left[j])
            b[row] = mp.mpf(P)
            row += 1
        self.c = mp.lu_solve(A, b)
        self.hom_row = hom_row

    def segment(self, x):
        for s in range(len(self.cuts) - 1):
            if x <= self.cuts[s + 1]:
                return s
        return len(self.cuts) - 2

    def deriv(self, order, x):
        x = mp.mpf(x)
        s = self.segment(x)
        row = self.hom_row(s, order, x)
        val = sum(row[j] * self.c[j] for j in range(len(row)))
        return mp.re(val) + poly_deriv(self.wp, self.a, order, x)

    def fields(self, x):
        return (self.deriv(0, x), self.deriv(1, x), self.EI * self.deriv(2, x), self.EI * self.deriv(3, x))


def boundary_function(EI, a, k, Gp, j, x):
    """Homogeneous solution with [w(a), w''(a), w(0), w''(0)] = e_j."""
    EI, a, k, Gp = map(mp.mpf, (EI, a, k, Gp))
    roots = char_roots(EI, k, Gp)
    A = mp.matrix(4, 4)
    pts = ((0, a), (2, a), (0, mp.mpf(0)), (2, mp.mpf(0)))
    for i, (order, xx) in enumerate(pts):
        for c, (r, pw) in enumerate(roots):
            ref = mp.mpf(0) if mp.re(r) <= 0 else a
            A[i, c] = hom_deriv(r, pw, order, xx, ref)
    e = mp.matrix(4, 1)
    e[j] = 1
    coef = mp.lu_solve(A, e)
    out = []
    for order in range(5):
        v = 0
        for c, (r, pw) in enumerate(roots):
            ref = mp.mpf(0) if mp.re(r) <= 0 else a
            v += coef[c] * hom_deriv(r, pw, order, mp.mpf(x), ref)
        out.append(mp.re(v))
    return out


def sine_moments(poly, ms):
    xi = sp.symbols("xi")
    p = sum(sp.Rational(c) * xi ** i for i, c in enumerate(poly))
    return [sp.N(2 * sp.integrate(p * sp.sin(m * sp.pi * xi), (xi, 0, 1)), 40) for m in ms]


EQ97 = (1000, 2000, 5000, 10000)
SAMPLE_X = ("0", "0.05", "0.25", "0.5", "0.9", "1")


def fmt(v):
    return mp.nstr(v, 20, min_fixed=-1, max_fixed=-1)


def main():
    cases = [
        # name, EI, a, k, Gp, bc, poly, points, shear convention
        ("cc_eq97_g0", 1, 1, 1e6, 0, (("C", 0, 0), ("C", 0, 0)), EQ97, (), "literal"),
        ("cc_eq97_g1000", 1, 1, 1e6, 1000, (("C", 0, 0), ("C", 0, 0)), EQ97, (), "literal"),
        ("cc_eq97_g2000", 1, 1, 1e6, 2000, (("C", 0, 0), ("C", 0, 0)), EQ97, (), "literal"),
        ("cc_eq97_g3000", 1, 1, 1e6, 3000, (("C", 0, 0), ("C", 0, 0)), EQ97, (), "literal"),
        ("sc_dimensional", 2e6, 4, 5e5, 3e5, (("S", "1e-3", 50), ("C", 0, "2e-4")), (100, -40, 30), (), "literal"),
        ("cf_loaded_end", 1, 1, 100, 10, (("C", 0, 0), ("F", 3, -2)), (10, 5), (), "literal"),
        ("ff_green_1e4", 1, 1, 1e4, 0, (("F", 0, 0), ("F", 0, 0)), (1000,), ((1000, "0.5"),), "literal"),
        ("ff_green_1e4_g1000_var", 1, 1, 1e4, 1000, (("F", 0, 0), ("F", 0, 0)), (1000,), ((1000, "0.5"),),
         "variational"),
        ("ff_green_1e4_g1000_lit", 1, 1, 1e4, 1000, (("F", 0, 0), ("F", 0, 0)), (1000,), ((1000, "0.5"),),
         "literal"),
    ]
    lines = [
        "#pragma once",
        "",
        "// Generated by tests/oracles/exact_solutions.py (mpmath, 50 digits). Do not edit.",
        "",
        "#include <array>",
        "",
        "namespace oracle {",
        "",
        "struct FieldPoint {",
        "    double x, w, theta, moment, shear;",
        "};",
        "",
    ]
    for name, EI, a, k, Gp, bc, poly, points, shear in cases:
        ex = Exact(EI, a, k, Gp, bc, poly, points, shear)
        rows = []
        for xs in SAMPLE_X:
            x = mp.mpf(xs) * mp.mpf(a)
            f = ex.fields(x)
            rows.append("    {" + ", ".join([fmt(x)] + [fmt(v) for v in f]) + "},")
        lines.append(f"inline constexpr std::array<FieldPoint, {len(rows)}> {name} = {{{{")
        lines += rows
        lines.append("}};")
        lines.append("")

    bf_cases = [
        ("phi1_k1e6_g0", 1e6, 0),
        ("phi1_k1e6_g1000", 1e6, 1000),
        ("phi1_k1e6_g2000", 1e6, 2000),
        ("phi1_k1e6_g3000", 1e6, 3000),
        ("phi1_k10_g1", 10, 1),
        ("phi1_k10_g100", 10, 100),
    ]
    lines.append("// Boundary functions at x = 0.3 (a = EI = 1): [member][derivative order 0..4].")
    for name, k, Gp in bf_cases:
        lines.append(f"inline constexpr std::array<std::array<double, 5>, 4> {name} = {{{{")
        for j in range(4):
            vals = boundary_function(1, 1, k, Gp, j, "0.3")
            lines.append("    {{" + ", ".join(fmt(v) for v in vals) + "}},")
        lines.append("}};")
    lines.append("")

    al = mp.sqrt(500)
    x = mp.mpf("0.5")
    complex_member = mp.sinh(al * x) * mp.sin(al * x) / (mp.sinh(al) * mp.sin(al))
    lines.append("// sinh(a5 x) sin(a6 x) / (sinh(a5) sin(a6)), a5 = a6 = sqrt(500), x = 0.5.")
    lines.append(f"inline constexpr double complex_member_half = {fmt(complex_member)};")
    lines.append("// sinh(100 * 0.5) / sinh(100).")
    lines.append(f"inline constexpr double sinh_ratio_100_half = {fmt(mp.sinh(50) / mp.sinh(100))};")
    dist = boundary_function(1, 1, 3, 4, 2, "0.5")
    lines.append("// Boundary function w(0) = 1 (third member), k_r = 3, G_pr = 4, x = 0.5, orders 0..4.")
    lines.append("inline constexpr std::array<double, 5> phi1_k3_g4_member3_half = {"
                 + ", ".join(fmt(v) for v in dist) + "};")
    lines.append("")

    ms = (1, 2, 3, 10, 41)
    moments = sine_moments(EQ97, ms)
    lines.append("// 2 * int_0^1 (1000 + 2000 x + 5000 x^2 + 10000 x^3) sin(m pi x) dx, m = 1, 2, 3, 10, 41.")
    lines.append("inline constexpr std::array<int, 5> sine_moment_orders = {1, 2, 3, 10, 41};")
    lines.append("inline constexpr std::array<double, 5> sine_moments_eq97 = {"
                 + ", ".join(str(sp.Float(v, 20)) for v in moments) + "};")
    lines.append("")
    lines.append("}  // namespace oracle")
    out = pathlib.Path(__file__).resolve().parents[1] / "unit" / "oracle_values.hpp"
    out.write_text("\n".join(lines) + "\n")
    print("wrote", out)


if __name__ == "__main__":
    main()

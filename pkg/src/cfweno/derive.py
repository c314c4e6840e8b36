"""Exact-rational derivation of the nu-parameterized reconstruction stencils.

Everything here runs offline (build step or audit): interpolation polynomials
on mixed cell-average/point-value windows, the interval-average and foot-value
coefficient families, optimal linear weights, weight poles, and smoothness
indicator quadratic forms. The results are frozen into ``_tables.py`` by
``write_tables`` and evaluated in floating point at runtime; this module is
the authority the frozen tables are tested against.

Conventions (h = 1): the window is centered on node j at x = 0, the target
interface sits at x = 1/2. Window entries at integer offsets carry
cell-average semantics, half-integer offsets carry point-value semantics.
Sub-stencil k uses window entries [k, k + r); the big stencil uses all 2r - 1.
The interval-average family is (1/v) * integral of p over [1/2 - v, 1/2]
(the division by v is exact, performed symbolically), and the foot-value
family is p(1/2 - v).
"""

from __future__ import annotations

import argparse
from fractions import Fraction

import sympy as sp

x, v, w = sp.symbols("x v w")

SCHEMES = ("cfweno", "fweno")
ORDERS = (2, 3, 4)


def window_offsets(r: int, scheme: str):
    """Offsets of the 2r-1 window entries relative to node j.

    "cfweno" interleaves half steps (mixed averages/points); "fweno" uses
    node-only cell averages with unit spacing.
    """
    if scheme == "cfweno":
        return [sp.Rational(k - (r - 1), 2) for k in range(2 * r - 1)]
    if scheme == "fweno":
        return [sp.Integer(k - (r - 1)) for k in range(2 * r - 1)]
    raise ValueError(f"unknown scheme {scheme!r}")


def stencil_members(r: int):
    """Index lists into the window: r sub-stencils then the big stencil."""
    return [list(range(k, k + r)) for k in range(r)] + [list(range(2 * r - 1))]


def interpolation_polynomial(offsets, kinds):
    """Unique polynomial matching the given avg/point conditions.

    Returns (poly, data_symbols); poly is linear in the data symbols.
    """
    data = [sp.Symbol(f"d{m}") for m in range(len(offsets))]
    deg = len(offsets) - 1
    coeffs = sp.symbols(f"c0:{deg + 1}")
    p = sum(c * x**m for m, c in enumerate(coeffs))
    eqs = []
    for o, kind, d in zip(offsets, kinds, data):
        if kind == "avg":
            cond = sp.integrate(p, (x, o - sp.Rational(1, 2), o + sp.Rational(1, 2)))
        else:
            cond = p.subs(x, o)
        eqs.append(cond - d)
    sol = sp.linsolve(eqs, coeffs)
    if len(sol) != 1:
        raise RuntimeError("singular interpolation system")
    (vals,) = sol
    return p.subs(dict(zip(coeffs, vals))), data


def coefficient_families(p, data):
    """Per-datum coefficient polynomials in v for both reconstruction targets.

    avg: (1/v) * int_{1/2-v}^{1/2} p dx, exact polynomial after cancellation.
    foot: p(1/2 - v).
    """
    half = sp.Rational(1, 2)
    prim = sp.integrate(p, x)
    avg = sp.cancel(sp.expand(prim.subs(x, half) - prim.subs(x, half - v)) / v)
    foot = sp.expand(p.subs(x, half - v))
    avg_c = [sp.expand(avg.coeff(d)) for d in data]
    foot_c = [sp.expand(foot.coeff(d)) for d in data]
    return avg_c, foot_c


def derive_stencil_coefficients(r: int, scheme: str = "cfweno"):
    """Coefficient tables for all stencils of one order.

    Returns (avg_tab, foot_tab): each a list over the r sub-stencils plus the
    big stencil of rows of 2r-1 sympy polynomials in v (zero where the window
    entry is outside the stencil).
    """
    offs = window_offsets(r, scheme)
    n = 2 * r - 1
    avg_tab, foot_tab = [], []
    for idx in stencil_members(r):
        sel = [offs[m] for m in idx]
        kinds = ["avg" if o.is_integer else "pt" for o in sel]
        p, data = interpolation_polynomial(sel, kinds)
        ac, fc = coefficient_families(p, data)
        arow = [sp.Integer(0)] * n
        frow = [sp.Integer(0)] * n
        for m, a, f in zip(idx, ac, fc):
            arow[m] = a
            frow[m] = f
        avg_tab.append(arow)
        foot_tab.append(frow)
    return avg_tab, foot_tab


def linear_weights(tab, r: int):
    """Solve sum_k g_k(v) * sub_k == big identically in the window data."""
    n = 2 * r - 1
    g = sp.symbols(f"g0:{r}")
    eqs = [sum(g[k] * tab[k][m] for k in range(r)) - tab[r][m] for m in range(n)]
    # entries are polynomials in v; require them to vanish identically
    poly_eqs = []
    for e in eqs:
        poly_eqs.append(sp.expand(e))
    sol = sp.solve(poly_eqs, g, dict=True)
    if len(sol) != 1:
        raise RuntimeError("linear weight system not uniquely solvable")
    return [sp.cancel(sp.together(sol[0][gk])) for gk in g]


def weight_poles(gammas):
    """Real denominator roots in [0, 1] across a weight set, sorted."""
    poles = set()
    for g in gammas:
        den = sp.denom(sp.cancel(g))
        for root in sp.solve(den, v):
            if root.is_real and 0 <= root <= 1:
                poles.add(sp.nsimplify(root))
    return sorted(poles, key=lambda t: float(t))


def smoothness_quadratic_form(r: int, k: int, scheme: str = "cfweno"):
    """Jiang-Shu indicator of sub-stencil k as a (2r-1)x(2r-1) matrix Q.

    beta_k = d^T Q d over the full window vector d, from
    sum_{l=1}^{r-1} int_{-1/2}^{1/2} (p_k^(l))^2 dx with h = 1 (the
    v = 0 simplification of the moving-average indicator).
    """
    offs = window_offsets(r, scheme)
    idx = stencil_members(r)[k]
    sel = [offs[m] for m in idx]
    kinds = ["avg" if o.is_integer else "pt" for o in sel]
    p, data = interpolation_polynomial(sel, kinds)
    half = sp.Rational(1, 2)
    beta = sp.Integer(0)
    for l in range(1, r):
        dp = sp.diff(p, x, l)
        beta += sp.integrate(sp.expand(dp * dp), (x, -half, half))
    beta = sp.expand(beta)
    n = 2 * r - 1
    full = [sp.Integer(0)] * n
    Q = sp.zeros(n, n)
    for a, da in zip(idx, data):
        for b, db in zip(idx, data):
            c = beta.coeff(da * db) if a != b else beta.coeff(da**2)
            Q[a, b] = c if a == b else c / 2
    # symmetrize cross terms: coeff(da*db) counts the full bilinear weight
    for a in range(n):
        for b in range(n):
            if a != b and Q[a, b] != 0:
                Q[b, a] = Q[a, b]
    return Q


def _poly_coeffs_in_w(expr, max_deg=None):
    """Coefficients of expr, rewritten in w = 1 - v, ascending in w."""
    e = sp.expand(expr.subs(v, 1 - w))
    p = sp.Poly(e, w)
    coeffs = list(reversed(p.all_coeffs()))
    if max_deg is not None:
        coeffs += [sp.Integer(0)] * (max_deg + 1 - len(coeffs))
    return coeffs


def _frac(q):
    f = Fraction(sp.Rational(q).p, sp.Rational(q).q)
    return (f.numerator, f.denominator)


def _poly_tuple(expr):
    return [_frac(c) for c in _poly_coeffs_in_w(expr)]


def _rational_pair(expr):
    """(num_coeffs, den_coeffs) in w = 1 - v for a rational weight."""
    num, den = sp.fraction(sp.cancel(sp.together(expr)))
    return [_frac(c) for c in _poly_coeffs_in_w(num)], [
        _frac(c) for c in _poly_coeffs_in_w(den)
    ]


def derive_order(r: int, scheme: str):
    """All frozen-table ingredients for one (scheme, order)."""
    avg_tab, foot_tab = derive_stencil_coefficients(r, scheme)
    g_avg = linear_weights(avg_tab, r)
    g_foot = linear_weights(foot_tab, r)
    poles = weight_poles(list(g_foot) + list(g_avg))
    betas = [smoothness_quadratic_form(r, k, scheme) for k in range(r)]
    return {
        "avg": [[_poly_tuple(c) for c in row] for row in avg_tab],
        "foot": [[_poly_tuple(c) for c in row] for row in foot_tab],
        "gamma_avg": [_poly_tuple(g) for g in g_avg],
        "gamma_foot": [_rational_pair(g) for g in g_foot],
        "poles": [str(p) for p in poles],
        "beta": [
            [[_frac(Q[a, b]) for b in range(2 * r - 1)] for a in range(2 * r - 1)]
            for Q in betas
        ],
    }


def derive_all():
    return {
        scheme: {r: derive_order(r, scheme) for r in ORDERS} for scheme in SCHEMES
    }


def format_tables(tables=None) -> str:
    """Plain-text dump of the exact coefficients for audit."""
    if tables is None:
        tables = derive_all()
    lines = []
    for scheme in SCHEMES:
        for r in ORDERS:
            t = tables[scheme][r]
            lines.append(f"== {scheme} r={r} (order {2 * r - 1}) ==")
            lines.append("window offsets: " + ", ".join(
                str(o) for o in window_offsets(r, scheme)))
            for fam in ("avg", "foot"):
                for s, row in enumerate(t[fam]):
                    tag = f"sub{s}" if s < r else "big"
                    terms = []
                    for m, cs in enumerate(row):
                        poly = " + ".join(
                            f"({a}/{b})*w^{d}" for d, (a, b) in enumerate(cs)
                            if a != 0)
                        if poly:
                            terms.append(f"entry{m}: {poly}")
                    lines.append(f"  {fam} {tag}: " + ("; ".join(terms) or "0"))
            for k, cs in enumerate(t["gamma_avg"]):
                poly = " + ".join(
                    f"({a}/{b})*w^{d}" for d, (a, b) in enumerate(cs) if a != 0)
                lines.append(f"  gamma_avg[{k}] = {poly or '0'}")
            for k, (num, den) in enumerate(t["gamma_foot"]):
                np_ = " + ".join(
                    f"({a}/{b})*w^{d}" for d, (a, b) in enumerate(num) if a != 0)
                dp = " + ".join(
                    f"({a}/{b})*w^{d}" for d, (a, b) in enumerate(den) if a != 0)
                lines.append(f"  gamma_foot[{k}] = ({np_ or '0'}) / ({dp or '1'})")
            lines.append("  foot weight poles in [0,1]: " + ", ".join(t["poles"]))
            lines.append("")
    return "\n".join(lines)


def write_tables(path: str, tables=None) -> None:
    if tables is None:
        tables = derive_all()
    header = (
        '"""Frozen exact-rational reconstruction tables.\n\n'
        "Generated by cfweno.derive; do not edit by hand. Coefficient\n"
        "polynomials are stored ascending in w = 1 - v as (num, den) integer\n"
        "pairs, so evaluation at v = 1 reduces to reading the constant term\n"
        "exactly. Regenerate with: python -m cfweno.derive --write\n"
        '"""\n\n'
    )
    with open(path, "w") as fh:
        fh.write(header)
        fh.write("TABLES = ")
        fh.write(repr(tables))
        fh.write("\n")


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        description="Derive reconstruction coefficient tables in exact "
        "rational arithmetic and dump or freeze them.")
    ap.add_argument("--write", metavar="PATH", nargs="?", const="",
                    help="write frozen tables module (default: the installed "
                    "_tables.py)")
    args = ap.parse_args(argv)
    tables = derive_all()
    if args.write is not None:
        path = args.write
        if not path:
            import os

            path = os.path.join(os.path.dirname(__file__), "_tables.py")
        write_tables(path, tables)
        print(f"wrote {path}")
    else:
        print(format_tables(tables))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

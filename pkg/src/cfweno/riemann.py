"""Exact Riemann solver for the 1D Euler equations (gamma-law gas).

Newton iteration on the pressure function to machine-level residual, plus a
self-similar sampler. Used as the reference for shock-tube runs and as the
ground truth for wave-pattern classification tests.
"""

from __future__ import annotations

import numpy as np


class VacuumError(ValueError):
    pass


def _fk(p, pk, rk, ck, g):
    """Pressure function f_K(p) and its derivative for one side."""
    if p > pk:  # shock
        ak = 2.0 / ((g + 1.0) * rk)
        bk = (g - 1.0) / (g + 1.0) * pk
        root = np.sqrt(ak / (p + bk))
        f = (p - pk) * root
        df = root * (1.0 - 0.5 * (p - pk) / (p + bk))
    else:       # rarefaction
        z = (g - 1.0) / (2.0 * g)
        f = 2.0 * ck / (g - 1.0) * ((p / pk) ** z - 1.0)
        df = (p / pk) ** (-(g + 1.0) / (2.0 * g)) / (rk * ck)
    return f, df


def exact_riemann(rho_l, u_l, p_l, rho_r, u_r, p_r, gamma: float = 1.4):
    """Star-region pressure and velocity, plus a sampler state(xi = x/t).

    Returns (p_star, u_star, sample) where sample maps an array of xi to
    (rho, u, p) arrays. Raises VacuumError when the states generate vacuum.
    """
    g = gamma
    cl = np.sqrt(g * p_l / rho_l)
    cr = np.sqrt(g * p_r / rho_r)
    if 2.0 * (cl + cr) / (g - 1.0) <= u_r - u_l:
        raise VacuumError("initial states generate vacuum")
    du = u_r - u_l
    # start from the primitive-variable linearized guess, floored
    p = max(0.5 * (p_l + p_r) - 0.125 * du * (rho_l + rho_r) * (cl + cr),
            1e-8 * min(p_l, p_r))
    for _ in range(200):
        fl, dfl = _fk(p, p_l, rho_l, cl, g)
        fr, dfr = _fk(p, p_r, rho_r, cr, g)
        res = fl + fr + du
        step = res / (dfl + dfr)
        p_new = p - step
        if p_new <= 0:
            p_new = 0.5 * p
        p = p_new
        if abs(res) <= 1e-12 * max(1.0, p):
            fl, dfl = _fk(p, p_l, rho_l, cl, g)
            fr, dfr = _fk(p, p_r, rho_r, cr, g)
            if abs(fl + fr + du) <= 1e-12 * max(1.0, p):
                break
    p_star = p
    fl, _ = _fk(p_star, p_l, rho_l, cl, g)
    fr, _ = _fk(p_star, p_r, rho_r, cr, g)
    u_star = 0.5 * (u_l + u_r) + 0.5 * (fr - fl)

    gm = (g - 1.0) / (g + 1.0)

    def sample(xi):
        xi = np.asarray(xi, dtype=float)
        rho = np.empty_like(xi)
        u = np.empty_like(xi)
        pr = np.empty_like(xi)
        left = xi <= u_star
        # left side
        if p_star > p_l:   # left shock
            rsl = rho_l * ((p_star / p_l + gm) / (gm * p_star / p_l + 1.0))
            sl = u_l - cl * np.sqrt((g + 1.0) / (2 * g) * p_star / p_l
                                    + (g - 1.0) / (2 * g))
            pre = xi < sl
            m = left & pre
            rho[m], u[m], pr[m] = rho_l, u_l, p_l
            m = left & ~pre
            rho[m], u[m], pr[m] = rsl, u_star, p_star
        else:              # left rarefaction
            rsl = rho_l * (p_star / p_l) ** (1.0 / g)
            csl = cl * (p_star / p_l) ** ((g - 1.0) / (2 * g))
            head, tail = u_l - cl, u_star - csl
            m = left & (xi < head)
            rho[m], u[m], pr[m] = rho_l, u_l, p_l
            m = left & (xi >= tail)
            rho[m], u[m], pr[m] = rsl, u_star, p_star
            m = left & (xi >= head) & (xi < tail)
            ufan = 2.0 / (g + 1.0) * (cl + 0.5 * (g - 1.0) * u_l + xi[m])
            cfan = cl - 0.5 * (g - 1.0) * (ufan - u_l)
            rho[m] = rho_l * (cfan / cl) ** (2.0 / (g - 1.0))
            u[m] = ufan
            pr[m] = p_l * (cfan / cl) ** (2.0 * g / (g - 1.0))
        right = ~left
        if p_star > p_r:   # right shock
            rsr = rho_r * ((p_star / p_r + gm) / (gm * p_star / p_r + 1.0))
            sr = u_r + cr * np.sqrt((g + 1.0) / (2 * g) * p_star / p_r
                                    + (g - 1.0) / (2 * g))
            post = xi > sr
            m = right & post
            rho[m], u[m], pr[m] = rho_r, u_r, p_r
            m = right & ~post
            rho[m], u[m], pr[m] = rsr, u_star, p_star
        else:              # right rarefaction
            rsr = rho_r * (p_star / p_r) ** (1.0 / g)
            csr = cr * (p_star / p_r) ** ((g - 1.0) / (2 * g))
            head, tail = u_r + cr, u_star + csr
            m = right & (xi > head)
            rho[m], u[m], pr[m] = rho_r, u_r, p_r
            m = right & (xi <= tail)
            rho[m], u[m], pr[m] = rsr, u_star, p_star
            m = right & (xi <= head) & (xi > tail)
            ufan = 2.0 / (g + 1.0) * (-cr + 0.5 * (g - 1.0) * u_r + xi[m])
            cfan = cr + 0.5 * (g - 1.0) * (ufan - u_r)
            rho[m] = rho_r * (cfan / cr) ** (2.0 / (g - 1.0))
            u[m] = ufan
            pr[m] = p_r * (cfan / cr) ** (2.0 * g / (g - 1.0))
        return rho, u, pr

    return p_star, u_star, sample


def wave_pattern(rho_l, u_l, p_l, rho_r, u_r, p_r, gamma: float = 1.4):
    """('shock'|'rarefaction') per side from the exact star pressure."""
    p_star, _, _ = exact_riemann(rho_l, u_l, p_l, rho_r, u_r, p_r, gamma)
    return ("shock" if p_star > p_l else "rarefaction",
            "shock" if p_star > p_r else "rarefaction")

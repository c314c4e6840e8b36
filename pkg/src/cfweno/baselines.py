"""Semi-discrete WENO-JS baseline: method-of-lines with three-stage TVD-RK
and a Roe flux with entropy fix, in 1D (scalar and Euler) and 2D (Euler,
unsplit). Operates on node values only; half-point slots of the interleaved
storage are ignored.
"""

from __future__ import annotations

import numpy as np

from .euler import GAMMA, PositivityError, flux_vector, primitives
from .fluxes import FluxFunction
from .grid import Grid1D
from .grid2d import FineGrid2D
from .scalar import SchemeConfig
from .tables import EPS, SchemeTables, get_tables

ENTROPY_FIX = 0.1    # acoustic-field threshold as a fraction of c


def weno_js_reconstruct(tab: SchemeTables, W):
    """Classical WENO-JS interface value from a left-biased cell-average
    window (..., 2r-1); optimal weights and smoothness quadratics come from
    the derivation oracle's frozen tables."""
    r = tab.nsub
    vals = np.einsum("kn,...n->...k", tab.js_coef[:r], W)
    betas = np.einsum("...m,kmn,...n->...k", W, tab.beta_q, W)
    alpha = tab.js_gamma / (EPS + betas) ** 2
    omega = alpha / alpha.sum(axis=-1, keepdims=True)
    pivot = vals[..., 0]
    return pivot + np.einsum("...k,...k->...", omega, vals - pivot[..., None])


def interface_values(tab: SchemeTables, q, aidx):
    """(u_minus, u_plus) at fine-array interface indices from node data."""
    r = tab.nsub
    offL = np.arange(-(2 * r - 1), 2 * r - 2, 2)
    offR = np.arange(-(2 * r - 3), 2 * r, 2)
    um = weno_js_reconstruct(tab, q[..., aidx[:, None] + offL])
    up = weno_js_reconstruct(tab, q[..., aidx[:, None] + offR][..., ::-1])
    return um, up


# -- scalar ------------------------------------------------------------------


def roe_flux_scalar(um, up, flux: FluxFunction):
    """Roe flux with the Harten-Hyman entropy fix for a scalar law."""
    fm, fp = flux.f(um), flux.f(up)
    du = up - um
    tiny = np.abs(du) < 1e-14 * np.maximum(1.0, np.maximum(np.abs(um),
                                                           np.abs(up)))
    mid = 0.5 * (um + up)
    with np.errstate(divide="ignore", invalid="ignore"):
        a = np.where(tiny, flux.f_u(mid), (fp - fm) / np.where(tiny, 1.0, du))
    delta = np.maximum(0.0, np.maximum(a - flux.f_u(um), flux.f_u(up) - a))
    aa = np.abs(a)
    afix = np.where(aa < delta, (a * a + delta * delta)
                    / (2.0 * np.where(delta > 0, delta, 1.0)), aa)
    return 0.5 * (fm + fp) - 0.5 * afix * du


def _rhs_scalar(grid: Grid1D, q, flux: FluxFunction, tab: SchemeTables, t):
    grid.fill_ghosts(q, t)
    aidx = grid.pad + 2 * np.arange(grid.N + 1)
    um, up = interface_values(tab, q[0], aidx)
    fhat = roe_flux_scalar(um, up, flux)
    out = np.zeros_like(q)
    out[0, grid.node_slice] = -(fhat[1:] - fhat[:-1]) / grid.h
    return out


# -- Euler -------------------------------------------------------------------


def roe_average_eigensystem(UL, UR, gamma: float = GAMMA):
    """Standard sqrt(rho)-weighted Roe average eigensystem (batched)."""
    from .euler import eigensystem

    m = UL.shape[0]
    pl, pr = primitives(UL, gamma), primitives(UR, gamma)
    rl, rr = pl[0], pr[0]
    sl, sr = np.sqrt(rl), np.sqrt(rr)
    HL = (UL[m - 1] + pl[-1]) / rl
    HR = (UR[m - 1] + pr[-1]) / rr
    u = (sl * pl[1] + sr * pr[1]) / (sl + sr)
    H = (sl * HL + sr * HR) / (sl + sr)
    if m == 4:
        v = (sl * pl[2] + sr * pr[2]) / (sl + sr)
        q2h = 0.5 * (u * u + v * v)
    else:
        v = None
        q2h = 0.5 * u * u
    c2 = (gamma - 1.0) * (H - q2h)
    if np.any(c2 <= 0):
        raise PositivityError("imaginary sound speed in Roe average")
    return eigensystem(u, np.sqrt(c2), H, v, gamma)


def _entropy_fixed_speeds(lam, m: int):
    """|lambda| with the quadratic smoothing applied to the acoustic fields;
    threshold = ENTROPY_FIX * sound speed of the average."""
    c = 0.5 * (lam[:, -1] - lam[:, 0])
    alam = np.abs(lam)
    delta = ENTROPY_FIX * c
    for k in (0, m - 1):
        ak = alam[:, k]
        alam[:, k] = np.where(ak < delta,
                              (ak * ak + delta * delta) / (2.0 * delta), ak)
    return alam


def roe_flux_euler_lines(tab: SchemeTables, qs, acol, gamma: float = GAMMA):
    """Characteristic-wise WENO-JS states + Roe flux with entropy fix.

    qs: (m, R, L) node lines along the last axis; acol: interface indices.
    Returns (m, R, n_interfaces).
    """
    m, R = qs.shape[0], qs.shape[1]
    r = tab.nsub
    B = R * acol.size
    UL = qs[:, :, acol - 1].reshape(m, B)
    UR = qs[:, :, acol + 1].reshape(m, B)
    eig = roe_average_eigensystem(UL, UR, gamma)
    offs = np.arange(-(2 * r - 1), 2 * r, 2)
    sup = qs[:, :, acol[:, None] + offs].reshape(m, B, offs.size)
    W = np.einsum("bkm,mbw->bkw", eig.L, sup)
    wm = weno_js_reconstruct(tab, W[..., : 2 * r - 1])
    wp = weno_js_reconstruct(tab, W[..., 1:][..., ::-1])
    um = np.einsum("bmk,bk->mb", eig.R, wm)
    up = np.einsum("bmk,bk->mb", eig.R, wp)
    alam = _entropy_fixed_speeds(eig.lam, m)
    diss = np.einsum("bmk,bk->mb", eig.R, alam * (wp - wm))
    fhat = (0.5 * (flux_vector(um, gamma) + flux_vector(up, gamma))
            - 0.5 * diss)
    return fhat.reshape(m, R, acol.size)


def roe_flux_entropy_fix(u_L, u_R, flux: FluxFunction = None,
                         gamma: float = GAMMA):
    """Single-pair numerical flux: scalar law when ``flux`` is given,
    otherwise the two arguments are EulerState instances."""
    if flux is not None:
        return float(roe_flux_scalar(np.asarray(float(u_L)),
                                     np.asarray(float(u_R)), flux))
    UL = u_L.conservative[:, None]
    UR = u_R.conservative[:, None]
    eig = roe_average_eigensystem(UL, UR, gamma)
    dw = np.einsum("bkm,mb->bk", eig.L, UR - UL)
    alam = _entropy_fixed_speeds(eig.lam, 3)
    diss = np.einsum("bmk,bk->mb", eig.R, alam * dw)
    f = 0.5 * (flux_vector(UL, gamma) + flux_vector(UR, gamma)) - 0.5 * diss
    return f[:, 0]


def _rhs_euler(grid: Grid1D, q, tab: SchemeTables, gamma, t):
    grid.fill_ghosts(q, t)
    aidx = grid.pad + 2 * np.arange(grid.N + 1)
    fhat = roe_flux_euler_lines(tab, q[:, None], aidx, gamma)[:, 0]
    out = np.zeros_like(q)
    out[:, grid.node_slice] = -(fhat[:, 1:] - fhat[:, :-1]) / grid.h
    return out


def _rhs_euler_2d(grid: FineGrid2D, q, tab: SchemeTables, gamma, t):
    grid.fill_ghosts(q, t)
    p = grid.pad
    out = np.zeros_like(q)
    nrow = p + 1 + 2 * np.arange(grid.Ny)
    ncol = p + 1 + 2 * np.arange(grid.Nx)
    fx = roe_flux_euler_lines(tab, q[:, nrow],
                              p + 2 * np.arange(grid.Nx + 1), gamma)
    out[:, nrow[:, None], ncol] += -(fx[..., 1:] - fx[..., :-1]) / grid.hx
    qs = q[_SWAP2].transpose(0, 2, 1)
    fy = roe_flux_euler_lines(tab, qs[:, ncol],
                              p + 2 * np.arange(grid.Ny + 1), gamma)
    ddy = -(fy[..., 1:] - fy[..., :-1]) / grid.hy      # (m, Nx, Ny)
    out[_SWAP2[:, None, None], nrow[None, :, None],
        ncol[None, None, :]] += ddy.transpose(0, 2, 1)
    return out


_SWAP2 = np.array([0, 2, 1, 3])


# -- TVD-RK3 driver ----------------------------------------------------------


def tvd_rk3_step(q, tau: float, rhs) -> np.ndarray:
    """u + tau (L1 + L2 + 4 L3)/6 with L1 = L(u), L2 = L(u + tau L1),
    L3 = L(u + tau (L1 + L2)/4)."""
    L1 = rhs(q)
    L2 = rhs(q + tau * L1)
    L3 = rhs(q + tau * (L1 + L2) / 4.0)
    return q + tau * (L1 + L2 + 4.0 * L3) / 6.0


def advance_rk3_scalar(grid: Grid1D, q, cfg: SchemeConfig,
                       flux: FluxFunction, tend: float):
    tab = get_tables("fweno", cfg.r)
    t, nsteps = 0.0, 0
    while tend - t > 1e-13 * max(1.0, abs(tend)):
        nodes = q[0, grid.node_slice]
        amax = float(np.max(np.abs(flux.f_u(nodes))))
        tau = cfg.cfl * grid.h / amax if amax > 0 else cfg.cfl * grid.h
        tau = min(tau, tend - t)
        q[...] = tvd_rk3_step(q, tau, lambda s: _rhs_scalar(grid, s, flux,
                                                            tab, t))
        t += tau
        nsteps += 1
    return q, nsteps


def advance_rk3_euler(grid: Grid1D, q, cfg: SchemeConfig, tend: float,
                      gamma: float = GAMMA):
    tab = get_tables("fweno", cfg.r)
    t, nsteps = 0.0, 0
    while tend - t > 1e-13 * max(1.0, abs(tend)):
        nodes = q[:, grid.node_slice]
        pr = primitives(nodes, gamma)
        c = np.sqrt(gamma * pr[-1] / pr[0])
        tau = cfg.cfl * grid.h / float(np.max(np.abs(pr[1]) + c))
        tau = min(tau, tend - t)
        q[...] = tvd_rk3_step(q, tau, lambda s: _rhs_euler(grid, s, tab,
                                                           gamma, t))
        t += tau
        nsteps += 1
    return q, nsteps


def advance_rk3_euler_2d(grid: FineGrid2D, q, cfg: SchemeConfig, tend: float,
                         gamma: float = GAMMA):
    tab = get_tables("fweno", cfg.r)
    t, nsteps = 0.0, 0
    while tend - t > 1e-13 * max(1.0, abs(tend)):
        nodes = grid.nodes(q)
        pr = primitives(nodes, gamma)
        c = np.sqrt(gamma * pr[-1] / pr[0])
        rate = np.maximum((np.abs(pr[1]) + c) / grid.hx,
                          (np.abs(pr[2]) + c) / grid.hy)
        tau = min(cfg.cfl / float(np.max(rate)), tend - t)
        q[...] = tvd_rk3_step(q, tau, lambda s: _rhs_euler_2d(grid, s, tab,
                                                              gamma, t))
        t += tau
        nsteps += 1
        rho = grid.nodes(q)[0]
        if np.any(rho <= 0) or not np.all(np.isfinite(rho)):
            raise PositivityError(f"baseline positivity failure at step "
                                  f"{nsteps}")
    return q, nsteps

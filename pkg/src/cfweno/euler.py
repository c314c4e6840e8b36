"""Characteristic-wise one-step solver for the compressible Euler equations.

Per interface: a baseline linearization at an averaged state (Roe-weighted
for colliding velocities, arithmetic otherwise), characteristic projection
of the interleaved windows, per-wave reconstruction of moving averages and
foot values, and a pressure-guided per-wave choice between the baseline and
a high-order linearization around the traced half-point state. The same
batched kernel serves 1D (3 components) and the 2D sweeps (4 components,
with the transverse momentum as an extra contact field).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import reconstruct as rc
from .grid import Grid1D
from .scalar import CFL_SLACK, CFLError, SchemeConfig
from .tables import get_tables

GAMMA = 1.4
S1 = 2.0      # strong-shock pressure ratio: baseline everywhere
S2 = 1.05     # near-equal pressures: high order everywhere


class PositivityError(RuntimeError):
    """Negative density or pressure; carries location diagnostics."""


@dataclass(frozen=True)
class EulerState:
    """Single gas state with primitive/conservative/derived views."""

    rho: float
    u: float
    p: float
    gamma: float = GAMMA

    def __post_init__(self):
        if self.rho <= 0 or self.p <= 0:
            raise PositivityError(f"inadmissible state rho={self.rho} p={self.p}")

    @property
    def E(self) -> float:
        return self.p / (self.gamma - 1.0) + 0.5 * self.rho * self.u**2

    @property
    def H(self) -> float:
        return (self.E + self.p) / self.rho

    @property
    def c(self) -> float:
        return float(np.sqrt(self.gamma * self.p / self.rho))

    @property
    def conservative(self) -> np.ndarray:
        return np.array([self.rho, self.rho * self.u, self.E])

    @classmethod
    def from_conservative(cls, w, gamma: float = GAMMA) -> "EulerState":
        rho, mom, E = float(w[0]), float(w[1]), float(w[2])
        u = mom / rho
        p = (gamma - 1.0) * (E - 0.5 * rho * u * u)
        return cls(rho, u, p, gamma)


@dataclass(frozen=True)
class EigenSystem:
    lam: np.ndarray   # (..., m) eigenvalues
    L: np.ndarray     # (..., m, m) left eigenvectors (rows)
    R: np.ndarray     # (..., m, m) right eigenvectors (columns)


@dataclass(frozen=True)
class WaveLinearization:
    lam: np.ndarray        # (..., m) per-wave final eigenvalue
    phi_star: np.ndarray   # (..., m) per-wave characteristic flux offset
    option: np.ndarray     # (...,) decision-tree option 1..6 (0 = fallback)


# -- primitives / fluxes ----------------------------------------------------


def primitives(q, gamma: float = GAMMA):
    """(rho, vel..., p) from conservative (..., first axis = component)."""
    rho = q[0]
    m = q.shape[0]
    vels = [q[i] / rho for i in range(1, m - 1)]
    ke = 0.5 * rho * sum(v * v for v in vels)
    p = (gamma - 1.0) * (q[m - 1] - ke)
    return (rho, *vels, p)


def flux_vector(q, gamma: float = GAMMA):
    """Physical x-flux of conservative states (component axis first)."""
    m = q.shape[0]
    pr = primitives(q, gamma)
    rho, u, p = pr[0], pr[1], pr[-1]
    out = np.empty_like(q)
    out[0] = q[1]
    out[1] = q[1] * u + p
    if m == 4:
        out[2] = q[2] * u
    out[m - 1] = u * (q[m - 1] + p)
    return out


def max_signal_speed(q, gamma: float = GAMMA) -> float:
    pr = primitives(q, gamma)
    rho, p = pr[0], pr[-1]
    if np.any(rho <= 0) or np.any(p <= 0) or not np.all(np.isfinite(p)):
        raise PositivityError("inadmissible state in signal-speed scan")
    c = np.sqrt(gamma * p / rho)
    speed = np.abs(pr[1]) + c
    for v in pr[2:-1]:
        speed = np.maximum(speed, np.abs(v) + c)
    return float(np.max(speed))


def compute_dt_euler(grid: Grid1D, q, cfl: float, gamma: float = GAMMA) -> float:
    interior = q[:, grid.pad : grid.pad + grid.nfine]
    return cfl * grid.h / max_signal_speed(interior, gamma)


# -- eigensystems -----------------------------------------------------------


def eigensystem(u, c, H, v=None, gamma: float = GAMMA) -> EigenSystem:
    """Roe-normalized eigensystem at (u, c, H[, v]); batched over u's shape.

    m = 3 without v; m = 4 adds the transverse momentum as a second contact
    field (x-direction ordering rho, rho u, rho v, E).
    """
    u = np.asarray(u, dtype=float)
    c = np.asarray(c, dtype=float)
    H = np.asarray(H, dtype=float)
    b2 = (gamma - 1.0) / (c * c)
    one = np.ones_like(u)
    zero = np.zeros_like(u)
    if v is None:
        q2h = 0.5 * u * u
        b1 = b2 * q2h
        lam = np.stack([u - c, u, u + c], axis=-1)
        R = np.stack([
            np.stack([one, one, one], axis=-1),
            np.stack([u - c, u, u + c], axis=-1),
            np.stack([H - u * c, q2h, H + u * c], axis=-1),
        ], axis=-2)
        L = np.stack([
            np.stack([(b1 + u / c) / 2, -(b2 * u + 1 / c) / 2, b2 / 2], axis=-1),
            np.stack([one - b1, b2 * u, -b2], axis=-1),
            np.stack([(b1 - u / c) / 2, -(b2 * u - 1 / c) / 2, b2 / 2], axis=-1),
        ], axis=-2)
    else:
        v = np.asarray(v, dtype=float)
        q2h = 0.5 * (u * u + v * v)
        b1 = b2 * q2h
        lam = np.stack([u - c, u, u, u + c], axis=-1)
        R = np.stack([
            np.stack([one, one, zero, one], axis=-1),
            np.stack([u - c, u, zero, u + c], axis=-1),
            np.stack([v, v, one, v], axis=-1),
            np.stack([H - u * c, q2h, v, H + u * c], axis=-1),
        ], axis=-2)
        L = np.stack([
            np.stack([(b1 + u / c) / 2, -(b2 * u + 1 / c) / 2,
                      -b2 * v / 2, b2 / 2], axis=-1),
            np.stack([one - b1, b2 * u, b2 * v, -b2], axis=-1),
            np.stack([-v, zero, one, zero], axis=-1),
            np.stack([(b1 - u / c) / 2, -(b2 * u - 1 / c) / 2,
                      -b2 * v / 2, b2 / 2], axis=-1),
        ], axis=-2)
    return EigenSystem(lam=lam, L=L, R=R)


def average_state_arrays(UL, UR, gamma: float = GAMMA) -> EigenSystem:
    """Baseline interface eigensystem from flanking conservative states.

    Roe-weighted u, H (and v) when the velocities collide (u_L > u_R),
    otherwise the eigensystem of the arithmetic-mean state.
    """
    m = UL.shape[0]
    pl = primitives(UL, gamma)
    pr = primitives(UR, gamma)
    rhoL, uL, pL = pl[0], pl[1], pl[-1]
    rhoR, uR, pR = pr[0], pr[1], pr[-1]
    HL = (UL[m - 1] + pL) / rhoL
    HR = (UR[m - 1] + pR) / rhoR
    roe = uL > uR
    sl, sr = np.sqrt(rhoL), np.sqrt(rhoR)
    mean = 0.5 * (UL + UR)
    pm = primitives(mean, gamma)
    Hm = (mean[m - 1] + pm[-1]) / pm[0]
    u = np.where(roe, (sl * uL + sr * uR) / (sl + sr), pm[1])
    H = np.where(roe, (sl * HL + sr * HR) / (sl + sr), Hm)
    if m == 4:
        vL, vR = pl[2], pr[2]
        v = np.where(roe, (sl * vL + sr * vR) / (sl + sr), pm[2])
        q2h = 0.5 * (u * u + v * v)
    else:
        v = None
        q2h = 0.5 * u * u
    c2 = (gamma - 1.0) * (H - q2h)
    if np.any(c2 <= 0):
        raise PositivityError("imaginary sound speed in averaged state")
    return eigensystem(u, np.sqrt(c2), H, v, gamma)


def average_state(left: EulerState, right: EulerState) -> EigenSystem:
    UL = left.conservative[:, None]
    UR = right.conservative[:, None]
    eig = average_state_arrays(UL, UR, left.gamma)
    return EigenSystem(lam=eig.lam[0], L=eig.L[0], R=eig.R[0])


# -- pressure-guided wave selection ----------------------------------------


def guess_middle_pressure_arrays(rhoL, uL, pL, rhoR, uR, pR,
                                 gamma: float = GAMMA):
    """Interface pressure estimate for shock/rarefaction judgment.

    Verbatim nesting: max(min(power-law term, harmonic sqrt-pressure bound),
    velocity-difference quadratic term), with max(0, .) guards.
    """
    g = gamma
    cL = np.sqrt(g * pL / rhoL)
    cR = np.sqrt(g * pR / rhoR)
    base = np.maximum(0.0, 0.5 * (uL - uR + cL / (g - 1.0) + cR / (g - 1.0)))
    term_a = base ** (2.0 * g / (g - 1.0))
    term_b = (4.0 / (1.0 / np.sqrt(pL) + 1.0 / np.sqrt(pR))) ** 2
    den = (1.0 / (np.sqrt(rhoL) * (g + 1.0) / 2.0)
           + 1.0 / (np.sqrt(rhoR) * (g + 1.0) / 2.0))
    term_c = np.maximum(0.0, (uL - uR) / den) ** 2
    return np.maximum(np.minimum(term_a, term_b), term_c)


def guess_middle_pressure(left: EulerState, right: EulerState) -> float:
    return float(guess_middle_pressure_arrays(
        left.rho, left.u, left.p, right.rho, right.u, right.p, left.gamma))


def two_shock_middle_pressure(rhoL, uL, pL, rhoR, uR, pR,
                              gamma: float = GAMMA):
    """Two-rarefaction / two-shock blended estimate of the star pressure.

    Diagnostic alternative to ``guess_middle_pressure_arrays`` (not used by
    the solver); kept for classification-quality comparison.
    """
    g = gamma
    cL = np.sqrt(g * pL / rhoL)
    cR = np.sqrt(g * pR / rhoR)
    z = (g - 1.0) / (2.0 * g)
    num = np.maximum(0.0, cL + cR - 0.5 * (g - 1.0) * (uR - uL))
    p_tr = (num / (cL / pL**z + cR / pR**z)) ** (1.0 / z)
    # two-shock estimate seeded with the two-rarefaction value
    aL = 2.0 / ((g + 1.0) * rhoL)
    bL = (g - 1.0) / (g + 1.0) * pL
    aR = 2.0 / ((g + 1.0) * rhoR)
    bR = (g - 1.0) / (g + 1.0) * pR
    gl = np.sqrt(aL / (p_tr + bL))
    gr = np.sqrt(aR / (p_tr + bR))
    p_ts = (gl * pL + gr * pR - (uR - uL)) / (gl + gr)
    return np.where(p_tr > np.maximum(pL, pR), p_ts, p_tr)


def classify_sides(p_m, pL, pR):
    """Per-side wave type from a star-pressure estimate."""
    return p_m > pL, p_m > pR


def _option_tree(pL, pR, p_m):
    """Eq-tree option number per interface: 1..6, batched."""
    apL, apR = np.abs(pL), np.abs(pR)
    hi, lo = np.maximum(apL, apR), np.minimum(apL, apR)
    opt = np.zeros(np.shape(pL), dtype=int)
    o1 = (hi >= S1 * lo) | (pL * pR <= 0)
    o2 = ~o1 & (hi < S2 * lo)
    rest = ~o1 & ~o2
    lsh = pL < p_m     # middle pressure above the left pressure: left shock
    rsh = p_m > pR
    opt[o1] = 1
    opt[o2] = 2
    opt[rest & lsh & rsh] = 3
    opt[rest & ~lsh & ~rsh] = 4
    opt[rest & lsh & ~rsh] = 5
    opt[rest & ~lsh & rsh] = 6
    return opt


def _high_mask(opt, m: int):
    """(..., m) True where the wave uses the high-order linearization."""
    shp = opt.shape + (m,)
    high = np.zeros(shp, dtype=bool)
    high[opt == 2] = True
    high[opt == 4] = True
    o5 = opt == 5
    high[o5, 1:] = True       # left wave stays baseline
    o6 = opt == 6
    high[o6, : m - 1] = True  # right wave stays baseline
    return high


def select_flux_linearization(left: EulerState, right: EulerState,
                              u_star, eig: EigenSystem,
                              p_m: float) -> WaveLinearization:
    """Single-interface wrapper around the batched wave selection."""
    UL = left.conservative[:, None]
    UR = right.conservative[:, None]
    us = np.asarray(u_star, dtype=float).reshape(-1, 1)
    eigb = EigenSystem(lam=eig.lam[None], L=eig.L[None], R=eig.R[None])
    lam, phi, opt = _select_waves(UL, UR, us, eigb,
                                  np.atleast_1d(p_m), left.gamma)
    return WaveLinearization(lam=lam[0], phi_star=phi[0], option=opt[0])


def _select_waves(UL, UR, u_star, eig: EigenSystem, p_m, gamma: float):
    """Batched per-wave (lambda, phi*) from the six-option decision tree.

    UL/UR/u_star: (m, B); eig batched (B, ...); returns lam/phi (B, m) and
    the option array (B,). Inadmissible u_star forces the baseline for that
    interface (option 0).
    """
    m, B = UL.shape
    plL = primitives(UL, gamma)
    plR = primitives(UR, gamma)
    pL, pR = plL[-1], plR[-1]
    # baseline: arithmetic half-sum state, flux per the velocity branch
    ub = 0.5 * (UL + UR)
    roe = plL[1] > plR[1]
    fb = np.where(roe, 0.5 * (flux_vector(UL, gamma) + flux_vector(UR, gamma)),
                  flux_vector(ub, gamma))
    Lub = np.einsum("bkm,mb->bk", eig.L, ub)
    Lfb = np.einsum("bkm,mb->bk", eig.L, fb)
    lam_b = eig.lam
    phi_b = lam_b * Lub - Lfb

    opt = _option_tree(pL, pR, p_m)
    # high-order linearization around the traced half state
    ps = primitives(u_star, gamma)
    rho_s, u_s, p_s = ps[0], ps[1], ps[-1]
    ok = (rho_s > 0) & (p_s > 0) & np.isfinite(p_s)
    opt = np.where(ok, opt, 0)
    safe = np.where(ok, p_s, 1.0)
    c_s = np.sqrt(gamma * safe / np.where(ok, rho_s, 1.0))
    if m == 3:
        lam_s = np.stack([u_s - c_s, u_s, u_s + c_s], axis=-1)
    else:
        lam_s = np.stack([u_s - c_s, u_s, u_s, u_s + c_s], axis=-1)
    us_safe = np.where(ok, u_star, ub)
    Lus = np.einsum("bkm,mb->bk", eig.L, us_safe)
    Lfs = np.einsum("bkm,mb->bk", eig.L, flux_vector(us_safe, gamma))
    phi_s = lam_s * Lus - Lfs

    high = _high_mask(opt, m)
    lam = np.where(high, lam_s, lam_b)
    phi = np.where(high, phi_s, phi_b)
    return lam, phi, opt


# -- interface assembly -----------------------------------------------------


def superset_offsets(scheme: str, r: int):
    """Fine-slot offsets of the union of both biased windows, plus the
    index shift between the left- and right-biased views."""
    if scheme == "fweno":
        return np.arange(-(2 * r - 1), 2 * r, 2), 1   # nodes only: 2r slots
    return np.arange(-r, r + 1), 2                    # interleaved: 2r+1


def interface_flux_batch(UL, UR, sup, tau: float, h: float,
                         cfg: SchemeConfig, gamma: float = GAMMA,
                         counters=None):
    """Fluxes and traced half states for a batch of interfaces.

    UL/UR: (m, B) flanking node states; sup: (m, B, W) superset windows per
    ``superset_offsets``. Returns (f_tilde (m, B), foot (m, B)).
    """
    r = cfg.r
    tab = get_tables("cfweno" if cfg.scheme == "cfweno" else "fweno", r)
    eig = average_state_arrays(UL, UR, gamma)

    # one projection, two biased views per wave
    _, shift = superset_offsets(cfg.scheme, r)
    W = np.einsum("bkm,mbw->bkw", eig.L, sup)
    WL = W[..., : 2 * r - 1]
    WR = W[..., shift:][..., ::-1]

    nu_fac = tau / h

    def wave_reconstruct(lam, family, counters=None):
        nu = lam * nu_fac
        if np.max(np.abs(nu)) > 1.0 + CFL_SLACK:
            raise CFLError(f"CFL violation: |nu|={np.max(np.abs(nu)):.4f}")
        Wor = np.where(nu[..., None] >= 0, WL, WR)
        betas = rc.smoothness(tab, Wor)
        if family == "avg":
            return rc.interval_average(tab, np.abs(nu), Wor, betas=betas)
        return rc.foot_value(tab, np.abs(nu), Wor, betas=betas,
                             counters=counters)

    # traced half state from the baseline wave speeds
    w_foot = wave_reconstruct(eig.lam, "foot", counters)   # (B, m)
    u_star = np.einsum("bmk,bk->mb", eig.R, w_foot)

    pm = guess_middle_pressure_arrays(
        *_side_primitives(UL, gamma), *_side_primitives(UR, gamma), gamma)
    lam, phi, opt = _select_waves(UL, UR, u_star, eig, pm, gamma)
    wbar = wave_reconstruct(lam, "avg")
    f_tilde = np.einsum("bmk,bk->mb", eig.R, lam * wbar - phi)

    if counters is not None:
        counters["interfaces"] = counters.get("interfaces", 0) + opt.size
        counters["fallback"] = counters.get("fallback", 0) + int(
            np.count_nonzero(opt == 0))
        hist = counters.setdefault("options", [0] * 7)
        for o, n in zip(*np.unique(opt, return_counts=True)):
            hist[int(o)] += int(n)
    return f_tilde, u_star


def characteristic_interface_flux(q, aidx, tau: float, h: float,
                                  cfg: SchemeConfig, gamma: float = GAMMA,
                                  counters=None):
    """1D gather wrapper: q (m, L) with filled ghosts, aidx (B,) fine-array
    interface indices."""
    offs, _ = superset_offsets(cfg.scheme, cfg.r)
    return interface_flux_batch(q[:, aidx - 1], q[:, aidx + 1],
                                q[:, aidx[:, None] + offs], tau, h, cfg,
                                gamma, counters)


def _side_primitives(U, gamma):
    p = primitives(U, gamma)
    return p[0], p[1], p[-1]


def step_euler(grid: Grid1D, q, tau: float, cfg: SchemeConfig,
               gamma: float = GAMMA, counters=None, step_index=None) -> None:
    """One conservative update of the interleaved Euler state, in place."""
    p, N, h = grid.pad, grid.N, grid.h
    aidx = p + 2 * np.arange(N + 1)
    f_tilde, foot = characteristic_interface_flux(q, aidx, tau, h, cfg,
                                                  gamma, counters)
    nodes = slice(p + 1, p + 2 * N, 2)
    q[:, nodes] -= (tau / h) * (f_tilde[:, 1:] - f_tilde[:, :-1])
    if cfg.scheme == "cfweno":
        q[:, p : p + 2 * N + 1 : 2] = foot
    _assert_positive(q[:, p : p + grid.nfine], grid, gamma, step_index)


def _assert_positive(interior, grid, gamma, step_index):
    pr = primitives(interior, gamma)
    rho, p = pr[0], pr[-1]
    bad = (rho <= 0) | (p <= 0) | ~np.isfinite(p)
    if np.any(bad):
        s = int(np.argmax(bad))
        raise PositivityError(
            f"positivity failure at x={grid.x_fine[grid.pad + s]:.6g} "
            f"(fine slot {s}, step {step_index}): rho={rho[s]:.3e} "
            f"p={p[s]:.3e}")


def advance_euler(grid: Grid1D, q, cfg: SchemeConfig, tend: float,
                  gamma: float = GAMMA, counters=None):
    """Drive step_euler to tend with the shared final-step rule."""
    t = 0.0
    nsteps = 0
    while tend - t > 1e-13 * max(1.0, abs(tend)):
        tau = compute_dt_euler(grid, q, cfg.cfl, gamma)
        rem = tend - t
        last = rem <= tau * (1.0 + 1e-9)
        if last and abs(rem / tau - 1.0) > 1e-9:
            tau = rem
        grid.fill_ghosts(q, t)
        step_euler(grid, q, tau, cfg, gamma, counters, step_index=nsteps)
        nsteps += 1
        t = tend if last else t + tau
    return q, nsteps

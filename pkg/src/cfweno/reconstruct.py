"""Vectorized nu-parameterized WENO reconstructions.

Two reconstruction targets share the same window, candidate stencils and
smoothness indicators:

* interval average: the moving average of the reconstructed profile over
  [x_{i+1/2} - v h, x_{i+1/2}] (polynomial coefficients in v, so the v -> 0
  limit needs no special casing);
* foot value: the traced point value at x_{i+1/2} - v h, whose optimal
  linear weights are rational in v with poles cut off and negative values
  handled by positive/negative splitting.

All kernels accept windows with arbitrary leading batch dimensions; the
window axis is last and must be oriented upwind (mirror beforehand for
negative wave speeds).
"""

from __future__ import annotations

import numpy as np

from .tables import EPS, EPS_D, THETA, SchemeTables, get_tables, horner_w


def mirror_window(window):
    """Reverse entry order so right-biased reconstruction reuses the
    left-biased kernels; involutive."""
    return np.asarray(window)[..., ::-1]


def clamp_nu(nu, poles, eps_d: float = EPS_D):
    """Push |v| out of the open cutoff interval around each weight pole.

    Values in (delta - eps_d, delta + eps_d) move to the nearer edge; the
    tie at v = delta resolves rightward.
    """
    nu = np.asarray(nu, dtype=float)
    out = nu.copy()
    for d in poles:
        inside = (nu > d - eps_d) & (nu < d + eps_d)
        out = np.where(inside, np.where(nu < d, d - eps_d, d + eps_d), out)
    return out


def candidate_values(tab: SchemeTables, nu, windows, family: str):
    """Sub-stencil and big-stencil reconstructions at each point.

    windows: (..., 2r-1); nu: (...). Returns (..., r+1) with the big
    stencil last.
    """
    coef = tab.coef_avg if family == "avg" else tab.coef_foot
    c = horner_w(coef, nu)  # (..., r+1, 2r-1)
    return np.einsum("...sn,...n->...s", c, np.asarray(windows, dtype=float))


def smoothness(tab: SchemeTables, windows):
    """Jiang-Shu indicators of the r sub-stencils: (..., r)."""
    wdw = np.asarray(windows, dtype=float)
    return np.einsum("...m,kmn,...n->...k", wdw, tab.beta_q, wdw)


def js_weights(gammas, betas, eps: float = EPS):
    """Classical nonlinear normalization alpha = gamma / (beta + eps)^2."""
    alpha = gammas / (betas + eps) ** 2
    return alpha / alpha.sum(axis=-1, keepdims=True)


def split_weights(gammas, theta: float = THETA):
    """Positive/negative decomposition for possibly negative linear weights.

    Returns (sigma_plus, gplus, sigma_minus, gminus) with gplus/gminus
    normalized to unit sum; the signed recombination is
    sigma_plus * R(gplus) - sigma_minus * R(gminus). When every gamma is
    non-negative this reproduces the plain reconstruction exactly.
    """
    gp = 0.5 * (gammas + theta * np.abs(gammas))
    gm = gp - gammas
    sp_ = gp.sum(axis=-1)
    sm = gm.sum(axis=-1)
    return sp_, gp / sp_[..., None], sm, gm / sm[..., None]


def interval_average(tab: SchemeTables, nu, windows, betas=None):
    """Nonlinearly weighted moving-average reconstruction: (...,)."""
    nu = np.asarray(nu, dtype=float)
    if betas is None:
        betas = smoothness(tab, windows)
    vals = candidate_values(tab, nu, windows, "avg")[..., : tab.r]
    gbar = horner_w(tab.gamma_avg, nu)
    omega = js_weights(gbar, betas)
    # pivoted combination: bitwise-exact when all candidates coincide
    # (sum of the normalized weights is only 1 up to rounding)
    pivot = vals[..., 0]
    return pivot + np.einsum("...k,...k->...", omega, vals - pivot[..., None])


def foot_value(tab: SchemeTables, nu, windows, betas=None, counters=None):
    """Nonlinearly weighted foot-value reconstruction: (...,).

    Applies the pole cutoff to the weight argument only and the splitting
    technique for negative weights. Updates counters["clamped"] and
    counters["negative_weights"] when a dict is given.
    """
    nu = np.asarray(nu, dtype=float)
    if betas is None:
        betas = smoothness(tab, windows)
    vals = candidate_values(tab, nu, windows, "foot")[..., : tab.r]
    nuc = clamp_nu(nu, tab.poles)
    gam = horner_w(tab.gamma_foot_num, nuc) / horner_w(tab.gamma_foot_den, nuc)
    if counters is not None:
        counters["clamped"] = counters.get("clamped", 0) + int(
            np.count_nonzero(nuc != nu))
        counters["negative_weights"] = counters.get(
            "negative_weights", 0) + int(np.count_nonzero((gam < 0).any(axis=-1)))
    sp_, gp, sm, gm = split_weights(gam)
    wp = js_weights(gp, betas)
    wm = js_weights(gm, betas)
    # pivoted form of sigma+ R(omega+) - sigma- R(omega-); identical since
    # sigma+ - sigma- = 1, and bitwise-exact when all candidates coincide
    pivot = vals[..., 0]
    dv = vals - pivot[..., None]
    rp = np.einsum("...k,...k->...", wp, dv)
    rm = np.einsum("...k,...k->...", wm, dv)
    return pivot + sp_ * rp - sm * rm


def linear_reconstruct(tab: SchemeTables, nu, windows, family: str):
    """Reconstruction with optimal linear weights (no smoothness limiting).

    Equals the big-stencil reconstruction identically; exposed for accuracy
    oracles and the smooth limit of the weighted forms.
    """
    nu = np.asarray(nu, dtype=float)
    vals = candidate_values(tab, nu, windows, family)
    if family == "avg":
        gam = horner_w(tab.gamma_avg, nu)
    else:
        gam = horner_w(tab.gamma_foot_num, nu) / horner_w(tab.gamma_foot_den, nu)
    return np.einsum("...k,...k->...", gam, vals[..., : tab.r])


# -- order-indexed convenience layer ---------------------------------------


def linear_weights_interval_average(r: int, nu, scheme: str = "cfweno"):
    """Optimal linear weights of the interval-average family at v = nu."""
    return horner_w(get_tables(scheme, r).gamma_avg, nu)


def linear_weights_foot_value(r: int, nu, scheme: str = "cfweno"):
    """Optimal linear weights of the foot-value family, pole cutoff applied."""
    tab = get_tables(scheme, r)
    nuc = clamp_nu(nu, tab.poles)
    return horner_w(tab.gamma_foot_num, nuc) / horner_w(tab.gamma_foot_den, nuc)


def smoothness_indicators(r: int, window, scheme: str = "cfweno"):
    return smoothness(get_tables(scheme, r), window)


def nonlinear_weights(gammas, betas, eps: float = EPS):
    """Signed nonlinear weights for possibly negative linear weights.

    Returns (sigma_plus, omega_plus, sigma_minus, omega_minus); combine as
    sigma_plus * sum(omega_plus * cand) - sigma_minus * sum(omega_minus * cand).
    """
    gammas = np.asarray(gammas, dtype=float)
    betas = np.asarray(betas, dtype=float)
    sp_, gp, sm, gm = split_weights(gammas)
    return sp_, js_weights(gp, betas, eps), sm, js_weights(gm, betas, eps)


def reconstruct_interval_average(r: int, nu, window, scheme: str = "cfweno"):
    return interval_average(get_tables(scheme, r), nu, window)


def reconstruct_foot_value(r: int, nu, window, scheme: str = "cfweno"):
    return foot_value(get_tables(scheme, r), nu, window)

"""Reference solutions: exact shifts, Burgers characteristic inversion,
exact Riemann sampling, and cached fine-grid baseline runs."""

from __future__ import annotations

import hashlib
import os

import numpy as np

from .cases import CaseSpec, get_case
from .grid import GAUSS4_W, GAUSS4_X, Grid1D
from .riemann import exact_riemann
from .scalar import SchemeConfig

CACHE_DIR = os.environ.get("CFWENO_CACHE",
                           os.path.join(os.path.expanduser("~"), ".cache",
                                        "cfweno"))


def _cell_averages(fn, centers, h):
    acc = np.zeros_like(np.asarray(fn(centers), dtype=float))
    for g, w in zip(GAUSS4_X, GAUSS4_W):
        acc = acc + w * np.asarray(fn(centers + g * h / 2), dtype=float)
    return acc / 2.0


def burgers_profile(u0, x, t, tol: float = 1e-13, maxit: int = 100):
    """Solve u = u0(x - u t) by Newton iteration (pre-shock times only)."""
    x = np.asarray(x, dtype=float)
    u = np.asarray(u0(x), dtype=float).reshape(x.shape).copy()
    eps = 1e-7
    for _ in range(maxit):
        g = u - np.asarray(u0(x - u * t)).reshape(x.shape)
        du0 = (np.asarray(u0(x - u * t + eps)).reshape(x.shape)
               - np.asarray(u0(x - u * t - eps)).reshape(x.shape)) / (2 * eps)
        dg = 1.0 + t * du0
        step = g / dg
        u -= step
        if np.max(np.abs(g)) < tol:
            break
    return u


def _fine_weno_run(case: CaseSpec, Nref: int):
    from . import baselines

    g = Grid1D(Nref, case.domain[0], case.domain[1], 3, ncomp=3, bc=case.bc)
    q = g.init_state(lambda x: case.init(x))
    cfg = SchemeConfig("weno_rk3", 5, cfl=0.6)
    q, _ = baselines.advance_rk3_euler(g, q, cfg, case.tend)
    return q[:, g.node_slice]


def fine_grid_reference(case: CaseSpec, Nref: int = 10000):
    """Node averages of a fine WENO5+RK3 run, cached on disk by case/N."""
    key = f"{case.name}-N{Nref}-t{case.tend}"
    digest = hashlib.sha256(key.encode()).hexdigest()[:16]
    path = os.path.join(CACHE_DIR, f"ref-{digest}.npz")
    if os.path.exists(path):
        with np.load(path) as z:
            return z["q"]
    q = _fine_weno_run(case, Nref)
    os.makedirs(CACHE_DIR, exist_ok=True)
    np.savez_compressed(path, q=q, key=np.array(key))
    return q


def coarsen(fine, N: int):
    """Average fine node values (..., Nref) onto N cells (Nref % N == 0)."""
    Nref = fine.shape[-1]
    if Nref % N:
        raise ValueError("reference resolution must be a multiple of N")
    f = Nref // N
    return fine.reshape(fine.shape[:-1] + (N, f)).mean(axis=-1)


def reference_solution(case: CaseSpec, N: int, Nref: int = 10000):
    """Cell-average reference on N cells at the case end time, or None for
    cases without a recipe (2D qualitative runs)."""
    h = (case.domain[1] - case.domain[0]) / N
    centers = case.domain[0] + (np.arange(N) + 0.5) * h
    if case.reference == "exact-shift":
        period = case.domain[1] - case.domain[0]

        def shifted(x):
            xs = case.domain[0] + np.mod(x - case.tend - case.domain[0],
                                         period)
            return case.init(xs)[0]

        return _cell_averages(shifted, centers, h)
    if case.reference == "burgers":
        period = case.domain[1] - case.domain[0]

        def u0per(x):
            xs = case.domain[0] + np.mod(x - case.domain[0], period)
            return case.init(xs)[0]

        return _cell_averages(
            lambda x: burgers_profile(u0per, x, case.tend), centers, h)
    if case.reference == "exact-riemann":
        # single interface at the domain midpoint; end states from the case
        from .euler import primitives

        xm = 0.5 * (case.domain[0] + case.domain[1])
        ends = case.init(np.array([case.domain[0] + 1e-9 * h,
                                   case.domain[1] - 1e-9 * h]))
        (rl, rr), (ul, ur), (pl, pr) = primitives(ends)
        _, _, sample = exact_riemann(rl, ul, pl, rr, ur, pr)

        def prims(x):
            rho, u, p = sample((x - xm) / case.tend)
            return np.stack([rho, u, p])

        return _cell_averages(prims, centers, h)
    if case.reference == "fine-weno":
        from .euler import primitives

        return np.stack(primitives(coarsen(fine_grid_reference(case, Nref),
                                           N)))
    return None

"""Benchmark case registry: scalar advection/Burgers profiles, 1D shock
tubes, and 2D Riemann-type problems, each with its domain, boundary
conditions, end time, default grid, and reference-solution recipe.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

GAMMA = 1.4


@dataclass(frozen=True)
class CaseSpec:
    name: str
    kind: str                  # scalar | euler1d | euler2d
    domain: tuple              # (x0, x1) or (x0, x1, y0, y1)
    tend: float
    default_N: tuple           # (N,) or (Nx, Ny)
    bc: object                 # Grid1D / FineGrid2D bc argument
    init: object               # pointwise fn: x -> (ncomp, ...) values
    reference: str = "none"    # exact-shift | burgers | exact-riemann |
                               # fine-weno | none
    flux: str = "advection"    # scalar cases only
    notes: str = ""


def _prim1d(rho, u, p):
    return np.stack([rho, rho * u, p / (GAMMA - 1.0) + 0.5 * rho * u * u])


def _prim2d(rho, u, v, p):
    return np.stack([rho, rho * u, rho * v,
                     p / (GAMMA - 1.0) + 0.5 * rho * (u * u + v * v)])


# -- scalar initial profiles -------------------------------------------------


def sine_wave(x):
    return np.sin(np.pi * x)[None]


def burgers_smooth(x):
    return (0.5 + np.sin(np.pi * x))[None]


def square_wave(x):
    return np.where((x >= -1.0 / 3.0) & (x <= 1.0 / 3.0), 1.0, -1.0)[None]


def multi_wave(x):
    """Gaussian triplet, square, triangle, semi-ellipse triplet profile.

    The printed formula letters G inside the F-slots are inconsistent; the
    standard definitions are used: G(x, beta, z) = exp(-beta (x-z)^2),
    F(x, alpha, a) = sqrt(max(1 - alpha^2 (x-a)^2, 0)).
    """
    z, delta, alpha, a = -0.7, 0.005, 10.0, 0.5
    beta = np.log(2.0) / (36.0 * delta**2)

    def G(xx, b, zz):
        return np.exp(-b * (xx - zz) ** 2)

    def F(xx, al, aa):
        return np.sqrt(np.maximum(1.0 - al**2 * (xx - aa) ** 2, 0.0))

    u = np.zeros_like(x)
    m = (x >= -0.8) & (x <= -0.6)
    u[m] = (G(x[m], beta, z - delta) + G(x[m], beta, z + delta)
            + 4.0 * G(x[m], beta, z)) / 6.0
    m = (x >= -0.4) & (x <= -0.2)
    u[m] = 1.0
    m = (x >= 0.0) & (x <= 0.2)
    u[m] = 1.0 - np.abs(10.0 * (x[m] - 0.1))
    m = (x >= 0.4) & (x <= 0.6)
    u[m] = (F(x[m], alpha, a - delta) + F(x[m], alpha, a + delta)
            + 4.0 * F(x[m], alpha, a)) / 6.0
    return u[None]


# -- 1D Euler ----------------------------------------------------------------


def sod(x):
    left = x <= 0.5
    return _prim1d(np.where(left, 1.0, 0.125), np.zeros_like(x),
                   np.where(left, 1.0, 0.1))


def shu_osher(x):
    left = x < -4.0
    rho = np.where(left, 3.857, 1.0 + 0.2 * np.sin(5.0 * x))
    u = np.where(left, 2.629, 0.0)
    p = np.where(left, 10.333, 1.0)
    return _prim1d(rho, u, p)


def titarev_toro(x):
    left = x <= -4.5
    rho = np.where(left, 1.515695, 1.0 + 0.1 * np.sin(20.0 * np.pi * x))
    u = np.where(left, 0.523346, 0.0)
    p = np.where(left, 1.80500, 1.0)
    return _prim1d(rho, u, p)


def blast_wave(x):
    p = np.where(x < 0.1, 1e3, np.where(x < 0.9, 1e-2, 1e2))
    return _prim1d(np.ones_like(x), np.zeros_like(x), p)


# -- 2D Euler ----------------------------------------------------------------


def _quadrants(X, Y, xc, yc, q_pp, q_mp, q_mm, q_pm):
    """Quadrant states (each (rho, u, v, p)) around center (xc, yc)."""
    out = [np.empty_like(X) for _ in range(4)]
    # axis lines resolve to the "positive" quadrant side
    quads = [(X >= xc) & (Y >= yc), (X < xc) & (Y >= yc),
             (X < xc) & (Y < yc), (X >= xc) & (Y < yc)]
    for comp in range(4):
        for mask, q in zip(quads, (q_pp, q_mp, q_mm, q_pm)):
            out[comp][mask] = q[comp]
    return _prim2d(*out)


def riemann2d_config3(X, Y):
    return _quadrants(X, Y, 0.8, 0.8,
                      (1.5, 0.0, 0.0, 1.5),
                      (0.5323, 1.206, 0.0, 0.3),
                      (0.138, 1.206, 1.206, 0.029),
                      (0.5323, 0.0, 1.206, 0.3))


def riemann2d_config16(X, Y):
    return _quadrants(X, Y, 0.5, 0.5,
                      (0.5313, 0.1, 0.1, 0.4),
                      (1.0222, -0.6179, 0.1, 1.0),
                      (0.8, 0.1, 0.1, 1.0),
                      (1.0, 0.1, 0.8276, 1.0))


def implosion(X, Y):
    low = np.abs(X - 0.3) + np.abs(Y - 0.3) < 0.15
    rho = np.where(low, 0.125, 1.0)
    p = np.where(low, 0.14, 1.0)
    z = np.zeros_like(X)
    return _prim2d(rho, z, z, p)


def triple_point(X, Y):
    """Single-material triple point: driver at x < 1, two stratified layers
    to the right split at y = 1.5 (standard values; the source shows the
    layout only as a sketch)."""
    rho = np.where(X < 1.0, 1.0, np.where(Y >= 1.5, 0.125, 1.0))
    p = np.where(X < 1.0, 1.0, 0.1)
    z = np.zeros_like(X)
    return _prim2d(rho, z, z, p)


CASES = {c.name: c for c in [
    CaseSpec("linear-sine", "scalar", (-1.0, 1.0), 2.0, (100,), "periodic",
             sine_wave, reference="exact-shift"),
    CaseSpec("burgers-sine", "scalar", (0.0, 2.0), 0.15, (80,), "periodic",
             burgers_smooth, reference="burgers", flux="burgers"),
    CaseSpec("square-wave", "scalar", (-1.0, 1.0), 20.0, (100,), "periodic",
             square_wave, reference="exact-shift"),
    CaseSpec("multi-wave", "scalar", (-1.0, 1.0), 8.0, (200,), "periodic",
             multi_wave, reference="exact-shift",
             notes="printed profile letters normalized to standard G/F"),
    CaseSpec("sod", "euler1d", (0.0, 1.0), 0.2, (200,), "outflow", sod,
             reference="exact-riemann"),
    CaseSpec("shu-osher", "euler1d", (-5.0, 5.0), 1.8, (200,), "outflow",
             shu_osher, reference="fine-weno"),
    CaseSpec("titarev-toro", "euler1d", (-5.0, 5.0), 5.0, (400,), "outflow",
             titarev_toro, reference="fine-weno"),
    CaseSpec("blast-wave", "euler1d", (0.0, 1.0), 0.038, (200,),
             "reflective", blast_wave, reference="fine-weno"),
    CaseSpec("riemann2d-3", "euler2d", (0.0, 1.0, 0.0, 1.0), 0.8,
             (400, 400), "outflow", riemann2d_config3),
    CaseSpec("riemann2d-16", "euler2d", (0.0, 1.0, 0.0, 1.0), 0.6,
             (800, 800), "outflow", riemann2d_config16),
    CaseSpec("implosion", "euler2d", (0.0, 0.6, 0.0, 0.6), 0.4,
             (600, 600), "periodic", implosion),
    CaseSpec("triple-point", "euler2d", (0.0, 7.0, 0.0, 3.0), 5.0,
             (560, 240), "outflow", triple_point),
]}


def get_case(name: str) -> CaseSpec:
    if name not in CASES:
        raise KeyError(f"unknown case {name!r}; available: "
                       + ", ".join(sorted(CASES)))
    return CASES[name]

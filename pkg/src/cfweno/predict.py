"""Closed-form leading error coefficients and computing-speed estimates."""

from __future__ import annotations

import math

from .tables import order_to_r

# per-point scheme cost (measured averages), RK stage count, and the grid /
# CFL parameters entering the speed estimate
C_Q = {"cfweno": {3: 1.71, 5: 1.47, 7: 1.31},
       "fweno": {3: 1.29, 5: 1.10, 7: 0.97},
       "weno_rk3": {3: 1.0, 5: 1.0, 7: 1.0}}
P_STAGES = {"cfweno": 1, "fweno": 1, "weno_rk3": 3}
DELTA_E = {"cfweno": 2.0, "fweno": 1.0, "weno_rk3": 1.0}
CFL_REF = {"cfweno": 0.9, "fweno": 0.9, "weno_rk3": 0.6}


def error_coefficient(scheme: str, order: int, nu: float) -> float:
    """Leading-term coefficient of the one-step linear-advection error as a
    function of the Courant fraction nu (closed forms per scheme family)."""
    if not 0.0 <= nu <= 1.0:
        raise ValueError("nu must lie in [0, 1]")
    if order not in (3, 5, 7):
        raise ValueError("order must be 3, 5 or 7")
    v = float(nu)
    if scheme == "cfweno":
        if order == 3:
            return v * (1 - v) ** 2 / 4.0
        if order == 5:
            return v * (1 - v) ** 2 * (1 + v) * (2 - v) / 36.0
        return (v * (1 - v) ** 2 * (1 + v) ** 2 * (2 - v) ** 2
                / math.factorial(4) ** 2)
    if scheme == "fweno":
        if order == 3:
            return (1 - v * v) * (2 - v) / math.factorial(4)
        if order == 5:
            return (1 - v * v) * (4 - v * v) * (3 - v) / math.factorial(6)
        return ((1 - v * v) * (4 - v * v) * (9 - v * v) * (4 - v)
                / math.factorial(8))
    if scheme == "weno_rk3":
        return {3: 2 / math.factorial(4), 5: 12 / math.factorial(6),
                7: 144 / math.factorial(8)}[order]
    raise ValueError(f"unknown scheme {scheme!r}")


def error_constant(scheme: str, order: int, nu: float) -> float:
    """Error coefficient times the interpolation-spacing power: the compact
    scheme interpolates on a half-spaced lattice, so its coefficient
    multiplies (h/2)^(2r-1). Use this for measured-ratio predictions."""
    r = order_to_r(order)
    spacing = 0.5 if scheme == "cfweno" else 1.0
    return error_coefficient(scheme, order, nu) * spacing ** (2 * r - 1)


def step_cost(scheme: str, order: int, dimension: int = 1) -> float:
    """Per-step cost at the same node spacing, relative to a single-stage
    unit-cost scheme on the node lattice: C_Q times the RK stage count,
    times ~2^(d-1) for the compact scheme's half-spaced lattice lines."""
    if dimension not in (1, 2, 3):
        raise ValueError("dimension must be 1, 2 or 3")
    lattice = 2.0 ** (dimension - 1) if scheme == "cfweno" else 1.0
    return C_Q[scheme][order] * P_STAGES[scheme] * lattice


def cost_ratio(scheme_a: str, scheme_b: str, order: int,
               dimension: int = 1) -> float:
    """Predicted wall-time ratio of a vs b at the same spatial step."""
    return (step_cost(scheme_a, order, dimension)
            / step_cost(scheme_b, order, dimension))


def predicted_speed(scheme: str, order: int):
    """(Q_e, normalized Q_e): computing speed when every stored point
    (nodes and half points alike) counts toward the resolution.

    Q_e = Delta_e * Delta_te / (C_Q * P) with Delta_te = Delta_e * CFL
    (unit max eigenvalue); normalized against the RK3 baseline.
    """
    cq = C_Q[scheme][order]
    qe = DELTA_E[scheme] ** 2 * CFL_REF[scheme] / (cq * P_STAGES[scheme])
    qe_base = DELTA_E["weno_rk3"] ** 2 * CFL_REF["weno_rk3"] / (
        C_Q["weno_rk3"][order] * P_STAGES["weno_rk3"])
    return qe, qe / qe_base

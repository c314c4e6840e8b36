"""Runtime view of the frozen reconstruction tables.

Converts the exact-rational data in ``_tables.py`` into float arrays laid
out for vectorized Horner evaluation. All polynomials are stored ascending
in w = 1 - v; ``horner_w`` evaluates them given v directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._tables import TABLES

EPS = 1e-6          # smoothness regularizer in the nonlinear weights
EPS_D = 0.05        # half-width of the pole cutoff for foot-value weights
THETA = 3.0         # negative-weight splitting parameter

_POLE_VALUES = {
    "1/2": 0.5,
    "1/3": 1.0 / 3.0,
    "2/3": 2.0 / 3.0,
    "1 - sqrt(2)/2": 1.0 - np.sqrt(2.0) / 2.0,
    "sqrt(2)/2": np.sqrt(2.0) / 2.0,
    "1 - sqrt(3)/3": 1.0 - np.sqrt(3.0) / 3.0,
    "sqrt(3)/3": np.sqrt(3.0) / 3.0,
    "1 - sqrt(5)/5": 1.0 - np.sqrt(5.0) / 5.0,
    "sqrt(5)/5": np.sqrt(5.0) / 5.0,
    "1/2 - sqrt(5)/10": 0.5 - np.sqrt(5.0) / 10.0,
    "1/2 + sqrt(5)/10": 0.5 + np.sqrt(5.0) / 10.0,
}


def _pole_value(expr: str) -> float:
    if expr in _POLE_VALUES:
        return _POLE_VALUES[expr]
    import sympy as sp

    return float(sp.sympify(expr))


def _poly_array(rows) -> np.ndarray:
    """List of rational coefficient rows -> float array, zero-padded."""
    deg = max(len(row) for row in rows)
    out = np.zeros((len(rows), deg))
    for i, row in enumerate(rows):
        for d, (a, b) in enumerate(row):
            out[i, d] = a / b
    return out


def _coef_array(stencils) -> np.ndarray:
    """(stencils, entries, degree) coefficient cube."""
    deg = max(len(c) for row in stencils for c in row)
    s, n = len(stencils), len(stencils[0])
    out = np.zeros((s, n, deg))
    for i, row in enumerate(stencils):
        for m, c in enumerate(row):
            for d, (a, b) in enumerate(c):
                out[i, m, d] = a / b
    return out


@dataclass(frozen=True)
class SchemeTables:
    """Float tables for one (scheme, order): see ``get_tables``."""

    scheme: str
    r: int
    coef_avg: np.ndarray      # (r+1, 2r-1, D) in w = 1 - v, ascending
    coef_foot: np.ndarray     # (r+1, 2r-1, D)
    gamma_avg: np.ndarray     # (r, Dg)
    gamma_foot_num: np.ndarray  # (r, Dn)
    gamma_foot_den: np.ndarray  # (r, Dd)
    poles: np.ndarray         # sorted pole positions of the foot weights
    beta_q: np.ndarray        # (r, 2r-1, 2r-1) smoothness quadratic forms
    # classical semi-discrete interface reconstruction (v = 0 limit of the
    # foot family), used by the WENO-JS baseline
    js_coef: np.ndarray       # (r+1, 2r-1)
    js_gamma: np.ndarray      # (r,)

    @property
    def nsub(self) -> int:
        return self.r

    @property
    def width(self) -> int:
        return 2 * self.r - 1


def horner_w(coeffs: np.ndarray, nu: np.ndarray) -> np.ndarray:
    """Evaluate polynomials stored ascending in w = 1 - v at v = nu.

    coeffs has shape rows + (D,); nu has any shape. Returns an array of
    shape nu.shape + rows.
    """
    wv = 1.0 - np.asarray(nu, dtype=float)
    rows = coeffs.shape[:-1]
    d = coeffs.shape[-1]
    acc = np.broadcast_to(coeffs[..., -1], wv.shape + rows).copy()
    wexp = wv.reshape(wv.shape + (1,) * len(rows))
    for k in range(d - 2, -1, -1):
        acc *= wexp
        acc += coeffs[..., k]
    return acc


@lru_cache(maxsize=None)
def get_tables(scheme: str, r: int) -> SchemeTables:
    raw = TABLES[scheme][r]
    coef_foot = _coef_array(raw["foot"])
    num = _poly_array([g[0] for g in raw["gamma_foot"]])
    den = _poly_array([g[1] for g in raw["gamma_foot"]])
    # v = 0 limit for the classical semi-discrete reconstruction: w = 1
    js_coef = coef_foot.sum(axis=-1)
    js_gamma = num.sum(axis=-1) / den.sum(axis=-1)
    return SchemeTables(
        scheme=scheme,
        r=r,
        coef_avg=_coef_array(raw["avg"]),
        coef_foot=coef_foot,
        gamma_avg=_poly_array(raw["gamma_avg"]),
        gamma_foot_num=num,
        gamma_foot_den=den,
        poles=np.array(sorted(_pole_value(p) for p in raw["poles"])),
        beta_q=np.array(
            [[[a / b for (a, b) in row] for row in Q] for Q in raw["beta"]]
        ),
        js_coef=js_coef,
        js_gamma=js_gamma,
    )


def order_to_r(order: int) -> int:
    try:
        return {3: 2, 5: 3, 7: 4}[order]
    except KeyError:
        raise ValueError(f"unsupported order {order}; pick 3, 5 or 7") from None

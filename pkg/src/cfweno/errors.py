"""Discrete error norms and log-ratio convergence orders."""

from __future__ import annotations

import math

import numpy as np


def error_norms(numeric, reference, h: float):
    """(L1, L2, Linf) of numeric - reference on cells of width h."""
    numeric = np.asarray(numeric, dtype=float)
    reference = np.asarray(reference, dtype=float)
    if numeric.shape != reference.shape:
        raise ValueError("length mismatch between numeric and reference")
    e = np.abs(numeric - reference)
    return (float(np.sum(e) * h), float(np.sqrt(np.sum(e * e) * h)),
            float(np.max(e)))


def convergence_order(errors, hs):
    """order_k = ln(e_k / e_{k+1}) / ln(h_k / h_{k+1}); None where a zero or
    negative error makes it undefined."""
    orders = []
    for e0, e1, h0, h1 in zip(errors, errors[1:], hs, hs[1:]):
        if e0 <= 0 or e1 <= 0:
            orders.append(None)
        else:
            orders.append(math.log(e0 / e1) / math.log(h0 / h1))
    return orders

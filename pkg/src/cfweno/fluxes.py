"""Scalar flux functions for the 1D conservation-law solvers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np


@dataclass(frozen=True)
class FluxFunction:
    """Flux f(u) with derivative f'(u), both vectorized over arrays."""

    name: str
    f: Callable
    f_u: Callable


def advection(speed: float = 1.0) -> FluxFunction:
    return FluxFunction(
        name=f"advection(a={speed})",
        f=lambda u: speed * u,
        f_u=lambda u: np.full_like(np.asarray(u, dtype=float), speed),
    )


def burgers() -> FluxFunction:
    return FluxFunction(
        name="burgers",
        f=lambda u: 0.5 * u * u,
        f_u=lambda u: np.asarray(u, dtype=float),
    )


def get_flux(name: str, **kw) -> FluxFunction:
    if name == "advection":
        return advection(**kw)
    if name == "burgers":
        return burgers(**kw)
    raise ValueError(f"unknown flux {name!r}")

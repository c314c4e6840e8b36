"""Compact fully-discrete WENO solvers for hyperbolic conservation laws.

One-step schemes of orders 3/5/7 that store and reuse half-point states,
with node-only fully-discrete (FWENO) and semi-discrete WENO-JS + RK3
baselines, 1D scalar/Euler and 2D Euler solvers, and a benchmark harness.
"""

__version__ = "0.1.0"

"""Interleaved 1D grid: node cell averages plus half-point values.

Fine slots s = 0 .. 2N index the stored degrees of freedom: even slots are
the N+1 half points x_j = x0 + j h (point values, both walls included), odd
slots are the N node cells centered at x0 + (i + 1/2) h (cell averages).
Ghost slots extend the lattice by ``pad`` fine slots on each side so that a
full reconstruction window exists at every interface, including the walls.

State arrays have shape (ncomp, L) with L = 2N + 1 + 2 pad; slot s lives at
array index pad + s.
"""

from __future__ import annotations

import numpy as np

GAUSS4_X, GAUSS4_W = np.polynomial.legendre.leggauss(4)


class Grid1D:
    """Geometry, storage layout and ghost fills for the interleaved grid."""

    def __init__(self, N: int, x0: float, x1: float, r: int, ncomp: int = 1,
                 bc: str = "periodic", bc_fn=None, reflect_negate=None):
        if N < 2 * r:
            raise ValueError("grid too coarse for the reconstruction width")
        self.N = N
        self.x0 = float(x0)
        self.x1 = float(x1)
        self.h = (self.x1 - self.x0) / N
        self.r = r
        self.ncomp = ncomp
        self.pad = 2 * r + 2
        self.nfine = 2 * N + 1
        self.L = self.nfine + 2 * self.pad
        self.bc = bc
        self.bc_fn = bc_fn
        if reflect_negate is None:
            reflect_negate = (1,) if ncomp > 1 else ()
        self.reflect_negate = tuple(reflect_negate)
        if bc == "dirichlet" and bc_fn is None:
            raise ValueError("dirichlet boundaries need bc_fn(x, t)")
        s = np.arange(-self.pad, self.nfine + self.pad)
        self.x_fine = self.x0 + s * (self.h / 2)
        self.node_mask = (s % 2) == 1          # cell-average slots
        self.node_slice = slice(self.pad + 1, self.pad + self.nfine - 1, 2)
        self.half_slice = slice(self.pad, self.pad + self.nfine, 2)
        self.node_x = self.x_fine[self.node_slice]
        self.half_x = self.x_fine[self.half_slice]

    def empty(self) -> np.ndarray:
        return np.zeros((self.ncomp, self.L))

    def index(self, s: int) -> int:
        """Array index of fine slot s."""
        return self.pad + s

    def fill_ghosts(self, q: np.ndarray, t: float = 0.0) -> None:
        p, nf = self.pad, self.nfine
        if self.bc == "periodic":
            # wrap with period 2N fine slots; wall halves stay duplicated
            per = nf - 1
            q[:, :p] = q[:, per : per + p]
            q[:, p + nf :] = q[:, p + 1 : p + 1 + p]
        elif self.bc == "outflow":
            # parity-preserving zero gradient: average slots copy the nearest
            # node, point slots copy the wall point
            q[:, p - 1 :: -2] = q[:, p + 1 : p + 2]
            q[:, p - 2 :: -2] = q[:, p : p + 1]
            q[:, p + nf :: 2] = q[:, p + nf - 2 : p + nf - 1]
            q[:, p + nf + 1 :: 2] = q[:, p + nf - 1 : p + nf]
        elif self.bc == "reflective":
            # mirror across the wall slots; parity is preserved
            left = q[:, p + 1 : 2 * p + 1][:, ::-1].copy()
            right = q[:, nf - 1 : p + nf - 1][:, ::-1].copy()
            for c in self.reflect_negate:
                left[c] = -left[c]
                right[c] = -right[c]
            q[:, :p] = left
            q[:, p + nf :] = right
        elif self.bc == "dirichlet":
            for sl in (slice(0, p), slice(p + nf, self.L)):
                q[:, sl] = sample_slots(
                    self.bc_fn, self.x_fine[sl], self.node_mask[sl],
                    self.h, t, self.ncomp)
        else:
            raise ValueError(f"unknown boundary condition {self.bc!r}")

    def init_state(self, fn) -> np.ndarray:
        """Fill the interleaved array from pointwise fn(x) -> (ncomp, npts).

        Node slots get 4-point Gauss-Legendre cell averages, half slots
        exact point values; ghosts via ``fill_ghosts``.
        """
        q = self.empty()
        sl = slice(self.pad, self.pad + self.nfine)
        q[:, sl] = sample_slots(lambda x, t: fn(x), self.x_fine[sl],
                                self.node_mask[sl], self.h, 0.0, self.ncomp)
        self.fill_ghosts(q)
        return q


def sample_slots(fn, xs, node_mask, h: float, t: float, ncomp: int):
    """Point values at half slots, Gauss-4 cell averages at node slots."""
    node_mask = np.asarray(node_mask)
    out = np.empty((ncomp, xs.size))
    pts = xs[~node_mask]
    if pts.size:
        out[:, ~node_mask] = np.asarray(fn(pts, t)).reshape(ncomp, -1)
    ctr = xs[node_mask]
    if ctr.size:
        acc = np.zeros((ncomp, ctr.size))
        for g, wgt in zip(GAUSS4_X, GAUSS4_W):
            acc += wgt * np.asarray(fn(ctr + g * h / 2, t)).reshape(ncomp, -1)
        out[:, node_mask] = acc / 2.0
    return out

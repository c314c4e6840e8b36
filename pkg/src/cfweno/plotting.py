"""Optional matplotlib rendering of run outputs (opt-in via --plot)."""

from __future__ import annotations

import numpy as np


def _mpl():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def render_run(case, grid, q, path: str, gamma: float = 1.4) -> None:
    plt = _mpl()
    fig, ax = plt.subplots(figsize=(6, 4), dpi=150)
    if case.kind == "euler2d":
        from .euler import primitives

        rho = primitives(grid.interior(q), gamma)[0]
        im = ax.imshow(rho, origin="lower",
                       extent=(grid.x0, grid.x1, grid.y0, grid.y1),
                       aspect="equal", cmap="viridis")
        fig.colorbar(im, ax=ax, label="density")
    elif case.kind == "euler1d":
        from .euler import primitives

        rho = primitives(q[:, grid.node_slice], gamma)[0]
        ax.plot(grid.node_x, rho, "k.-", ms=3, lw=0.7)
        ax.set_xlabel("x")
        ax.set_ylabel("density")
    else:
        ax.plot(grid.node_x, q[0, grid.node_slice], "k.-", ms=3, lw=0.7)
        ax.set_xlabel("x")
        ax.set_ylabel("u")
    ax.set_title(case.name)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def render_convergence(hs, errors_by_scheme: dict, path: str) -> None:
    plt = _mpl()
    fig, ax = plt.subplots(figsize=(5, 4), dpi=150)
    for label, errs in errors_by_scheme.items():
        ax.loglog(hs, errs, "o-", label=label)
    ax.set_xlabel("h")
    ax.set_ylabel("L2 error")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)

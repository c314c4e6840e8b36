"""Case runner: executes a (case, scheme) pair, times the solver, computes
error norms against the case's reference when one exists, and writes the
delimited outputs (1D CSV lines, 2D ASCII structured dumps, report text).
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field

import numpy as np

from . import baselines, euler, euler2d
from .cases import CaseSpec
from .errors import error_norms
from .fluxes import get_flux
from .grid import Grid1D
from .grid2d import FineGrid2D
from .reference import reference_solution
from .scalar import SchemeConfig, advance, default_counters


@dataclass
class RunReport:
    case: str
    scheme: str
    order: int
    N: tuple
    cfl: float
    steps: int = 0
    seconds: float = 0.0
    norms: dict = field(default_factory=dict)   # component -> (L1, L2, Linf)
    counters: dict = field(default_factory=dict)

    def to_text(self) -> str:
        lines = [f"case {self.case}", f"scheme {self.scheme}",
                 f"order {self.order}",
                 "grid " + "x".join(str(n) for n in self.N),
                 f"cfl {self.cfl}", f"steps {self.steps}",
                 f"solver_seconds {self.seconds:.6f}"]
        for comp, (l1, l2, li) in self.norms.items():
            lines.append(f"error_{comp} L1={l1:.6e} L2={l2:.6e} "
                         f"Linf={li:.6e}")
        for k, v in sorted(self.counters.items()):
            lines.append(f"counter_{k} {v}")
        return "\n".join(lines) + "\n"


def _build_1d(case: CaseSpec, N: int, r: int, ncomp: int) -> Grid1D:
    return Grid1D(N, case.domain[0], case.domain[1], r, ncomp=ncomp,
                  bc=case.bc)


def run_case(case: CaseSpec, cfg: SchemeConfig, N=None, out=None,
             plot: bool = False, nref: int = 10000, gamma: float = 1.4):
    """Run one case; returns (RunReport, grid, state). Writes output files
    when ``out`` (a path prefix) is given."""
    N = tuple(N) if N else case.default_N
    counters = default_counters()
    rep = RunReport(case=case.name, scheme=cfg.scheme, order=cfg.order,
                    N=N, cfl=cfg.cfl)

    if case.kind == "scalar":
        grid = _build_1d(case, N[0], cfg.r, 1)
        q = grid.init_state(lambda x: case.init(x))
        flux = get_flux(case.flux)
        t0 = time.perf_counter()
        if cfg.scheme == "weno_rk3":
            q, steps = baselines.advance_rk3_scalar(grid, q, cfg, flux,
                                                    case.tend)
        else:
            q, steps = advance(grid, q, cfg, flux, case.tend,
                               counters=counters)
        rep.seconds = time.perf_counter() - t0
        rep.steps = steps
        fields = {"u": q[0, grid.node_slice]}
        ref = reference_solution(case, N[0], nref)
        if ref is not None:
            rep.norms["u"] = error_norms(fields["u"], ref, grid.h)
    elif case.kind == "euler1d":
        grid = _build_1d(case, N[0], cfg.r, 3)
        q = grid.init_state(lambda x: case.init(x))
        t0 = time.perf_counter()
        if cfg.scheme == "weno_rk3":
            q, steps = baselines.advance_rk3_euler(grid, q, cfg, case.tend,
                                                   gamma)
        else:
            q, steps = euler.advance_euler(grid, q, cfg, case.tend, gamma,
                                           counters)
        rep.seconds = time.perf_counter() - t0
        rep.steps = steps
        rho, u, p = euler.primitives(q[:, grid.node_slice], gamma)
        fields = {"rho": rho, "u": u, "p": p}
        ref = reference_solution(case, N[0], nref)
        if ref is not None:
            for i, comp in enumerate(("rho", "u", "p")):
                rep.norms[comp] = error_norms(fields[comp], ref[i], grid.h)
    elif case.kind == "euler2d":
        x0, x1, y0, y1 = case.domain
        grid = FineGrid2D(N[0], N[1], x0, x1, y0, y1, cfg.r, bc=case.bc)
        q = grid.init_state(case.init)
        t0 = time.perf_counter()
        if cfg.scheme == "weno_rk3":
            q, steps = baselines.advance_rk3_euler_2d(grid, q, cfg,
                                                      case.tend, gamma)
        else:
            q, steps = euler2d.advance_2d(grid, q, cfg, case.tend, gamma,
                                          counters)
        rep.seconds = time.perf_counter() - t0
        rep.steps = steps
        fields = None
    else:
        raise ValueError(f"unknown case kind {case.kind!r}")

    rep.counters = {k: v for k, v in counters.items() if np.any(v)}
    if out:
        write_outputs(case, grid, q, rep, out, plot, gamma)
    return rep, grid, q


def write_outputs(case: CaseSpec, grid, q, rep: RunReport, out: str,
                  plot: bool, gamma: float = 1.4) -> None:
    os.makedirs(os.path.dirname(os.path.abspath(out)) or ".", exist_ok=True)
    if case.kind == "euler2d":
        path = out + ".dat"
        write_dump_2d(path, grid, q, gamma)
    else:
        path = out + ".csv"
        write_csv_1d(path, case, grid, q, gamma)
    with open(out + ".report.txt", "w") as f:
        f.write(rep.to_text())
    if plot:
        from .plotting import render_run

        render_run(case, grid, q, out + ".png", gamma)


def write_csv_1d(path: str, case: CaseSpec, grid: Grid1D, q,
                 gamma: float = 1.4) -> None:
    x = grid.node_x
    if case.kind == "euler1d":
        rho, u, p = euler.primitives(q[:, grid.node_slice], gamma)
        cols = np.column_stack([x, rho, u, p])
        header = "x,rho,u,p"
    else:
        cols = np.column_stack([x, q[0, grid.node_slice]])
        header = "x,u"
    np.savetxt(path, cols, delimiter=",", header=header, comments="")


def write_dump_2d(path: str, grid: FineGrid2D, q, gamma: float = 1.4) -> None:
    """ASCII structured dump: header "nx ny x0 x1 y0 y1", then row-major
    rho, u, v, p blocks over the stored fine lattice."""
    from .euler import primitives

    inter = grid.interior(q)
    rho, u, v, p = primitives(inter, gamma)
    with open(path, "w") as f:
        f.write(f"{grid.nfx} {grid.nfy} {grid.x0} {grid.x1} "
                f"{grid.y0} {grid.y1}\n")
        for block in (rho, u, v, p):
            np.savetxt(f, block, fmt="%.12e")

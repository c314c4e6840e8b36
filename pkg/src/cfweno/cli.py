"""Command-line interface: run cases, convergence ladders, benchmarks, and
coefficient derivation. Thread count is honored before numpy loads."""

from __future__ import annotations

import argparse
import os
import sys


def _apply_threads(n) -> None:
    if not n:
        return
    for var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS",
                "MKL_NUM_THREADS", "NUMEXPR_NUM_THREADS"):
        os.environ[var] = str(n)


# honor the environment override before any numpy import below
_apply_threads(os.environ.get("CFWENO_THREADS"))


def _read_config(path: str) -> dict:
    """Plain key=value lines; '#' starts a comment."""
    cfg = {}
    with open(path) as f:
        for line in f:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"bad config line: {line!r}")
            k, v = line.split("=", 1)
            cfg[k.strip().replace("-", "_")] = v.strip()
    return cfg


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--case", default=None)
    p.add_argument("--scheme", default=None,
                   choices=[None, "cfweno", "fweno", "weno_rk3"])
    p.add_argument("--order", type=int, default=None, choices=[None, 3, 5, 7])
    p.add_argument("--grid", default=None,
                   help="N or NxxNy node counts, e.g. 200 or 400x400")
    p.add_argument("--cfl", type=float, default=None)
    p.add_argument("--tend", type=float, default=None)
    p.add_argument("--iterations", type=int, default=None)
    p.add_argument("--sweep-order", default=None,
                   choices=[None, "xy", "yx", "alternate"])
    p.add_argument("--out", default=None)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--plot", action="store_true", default=None)
    p.add_argument("--config", default=None, help="key=value config file")
    p.add_argument("--nref", type=int, default=None,
                   help="fine-grid reference resolution (default 10000)")


def _merge(args: argparse.Namespace) -> dict:
    """Config-file values fill in; explicit flags win."""
    merged = {}
    if args.config:
        merged.update(_read_config(args.config))
    for k, v in vars(args).items():
        if v is not None and k not in ("config", "command"):
            merged[k] = v
    return merged


_DEFAULTS = {"scheme": "cfweno", "order": 5, "cfl": 0.9, "iterations": 0,
             "sweep_order": "xy", "plot": False, "nref": 10000}


def _get(merged, key, cast=None):
    v = merged.get(key, _DEFAULTS.get(key))
    if v is not None and cast is not None and not isinstance(v, cast):
        v = cast(v)
    return v


def _parse_grid(spec):
    if spec is None:
        return None
    s = str(spec).lower().replace("x", " ").split()
    return tuple(int(t) for t in s)


def _scheme_config(merged):
    from .scalar import SchemeConfig

    cfl = _get(merged, "cfl", float)
    scheme = _get(merged, "scheme")
    if cfl is None:
        cfl = 0.6 if scheme == "weno_rk3" else 0.9
    return SchemeConfig(scheme=scheme, order=_get(merged, "order", int),
                        cfl=cfl, iterations=_get(merged, "iterations", int),
                        sweep_order=_get(merged, "sweep_order"))


def cmd_run(args) -> int:
    merged = _merge(args)
    _apply_threads(merged.get("threads"))
    from .cases import get_case
    from .report import run_case

    case = get_case(merged["case"])
    if merged.get("tend") is not None:
        from dataclasses import replace

        case = replace(case, tend=float(merged["tend"]))
    cfg = _scheme_config(merged)
    rep, _, _ = run_case(case, cfg, N=_parse_grid(merged.get("grid")),
                         out=merged.get("out"),
                         plot=bool(_get(merged, "plot")),
                         nref=_get(merged, "nref", int))
    sys.stdout.write(rep.to_text())
    return 0


def cmd_convergence(args) -> int:
    merged = _merge(args)
    _apply_threads(merged.get("threads"))
    from .cases import get_case
    from .errors import convergence_order
    from .report import run_case

    case = get_case(merged.get("case", "linear-sine"))
    if merged.get("tend") is not None:
        from dataclasses import replace

        case = replace(case, tend=float(merged["tend"]))
    cfg = _scheme_config(merged)
    grids = _parse_grid(merged.get("grid")) or (20, 40, 80, 160, 320)
    hs, errs = [], []
    rows = ["N,h,L1,L2,Linf,order"]
    for N in grids:
        rep, grid, _ = run_case(case, cfg, N=(N,),
                                nref=_get(merged, "nref", int))
        comp = next(iter(rep.norms))
        l1, l2, li = rep.norms[comp]
        hs.append(grid.h)
        errs.append(l2)
        orders = convergence_order(errs, hs)
        o = orders[-1] if orders else None
        rows.append(f"{N},{grid.h:.6e},{l1:.6e},{l2:.6e},{li:.6e},"
                    + (f"{o:.3f}" if o is not None else "-"))
    text = "\n".join(rows) + "\n"
    sys.stdout.write(text)
    if merged.get("out"):
        with open(merged["out"] + ".csv", "w") as f:
            f.write(text)
    return 0


def cmd_bench(args) -> int:
    merged = _merge(args)
    _apply_threads(merged.get("threads"))
    from .cases import get_case
    from .predict import cost_ratio, predicted_speed
    from .report import run_case

    case = get_case(merged.get("case", "sod"))
    if merged.get("tend") is not None:
        from dataclasses import replace

        case = replace(case, tend=float(merged["tend"]))
    order = _get(merged, "order", int)
    grid = _parse_grid(merged.get("grid"))
    times = {}
    for scheme in ("cfweno", "fweno", "weno_rk3"):
        sub = dict(merged)
        sub["scheme"] = scheme
        sub.pop("cfl", None)
        cfg = _scheme_config(sub)
        rep, _, _ = run_case(case, cfg, N=grid,
                             nref=_get(merged, "nref", int))
        times[scheme] = rep.seconds
        sys.stdout.write(f"{scheme} order={order} seconds={rep.seconds:.3f} "
                         f"steps={rep.steps}\n")
    dim = 2 if case.kind == "euler2d" else 1
    for a, b in (("cfweno", "fweno"), ("cfweno", "weno_rk3")):
        pred = cost_ratio(a, b, order, dim)
        sys.stdout.write(f"ratio {a}/{b}: measured "
                         f"{times[a] / times[b]:.3f} predicted-per-step "
                         f"{pred:.3f}\n")
    qe, qen = predicted_speed("cfweno", order)
    sys.stdout.write(f"predicted speed Q_e cfweno: {qe:.2f} "
                     f"(normalized {qen:.2f})\n")
    return 0


def cmd_derive(args) -> int:
    from . import derive

    out = derive.format_tables(derive.derive_all())
    if args.out:
        with open(args.out, "w") as f:
            f.write(out)
    else:
        sys.stdout.write(out)
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="cfweno",
                                     description="compact one-step WENO "
                                     "solvers and benchmark harness")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn in (("run", cmd_run), ("convergence", cmd_convergence),
                     ("bench", cmd_bench)):
        p = sub.add_parser(name)
        _common_flags(p)
        p.set_defaults(fn=fn)
    p = sub.add_parser("derive-coefficients")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_derive)
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (KeyError, ValueError, FileNotFoundError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 3
    except Exception as e:
        from .euler import PositivityError
        from .scalar import CFLError

        if isinstance(e, (PositivityError, CFLError, FloatingPointError)):
            sys.stderr.write(f"solver failure: {e}\n")
            return 2
        raise


if __name__ == "__main__":
    sys.exit(main())

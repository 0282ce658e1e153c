"""Command-line front end: ``stripes <command> [options]``.

Exit status is 0 on success, 1 on invalid input and 2 when an enumeration
would exceed its budget.  Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass

from . import acceptance
from .closure import (
    HORIZONTAL,
    Dense,
    Discrete,
    GenericSlope,
    Slope,
    Stripes,
    StructuredSlope,
    classify_slope,
    closure_on_axis,
    slope_from_real,
    trace_axis_intercepts,
)
from .core import DEFAULT_BUDGET, BudgetExceeded, Scheme, model_set_arrays
from .density import kronecker_density_check, rationality_warning
from .render import Figure, SvgStyle, Viewport, figure
from .serialize import dumps, scheme_to_json, slope_to_json, to_csv
from .suspension import orbit

BUDGET_ENV = "STRIPES_BUDGET"

VERTICAL_NOTE = ("vertical lines w = (0, 1) are not of the form (1, s) and are not "
                 "classified; see 'Vertical slopes' in the README")


class UsageError(ValueError):
    pass


def _floats(text: str, count: int, flag: str) -> list[float]:
    parts = text.split(",")
    if len(parts) != count:
        raise UsageError(f"{flag} expects {count} comma-separated numbers, got {text!r}")
    try:
        return [float(p) for p in parts]
    except ValueError:
        raise UsageError(f"{flag}: cannot parse {text!r}") from None


@dataclass
class RunConfig:
    command: str
    scheme: Scheme | None
    slope: Slope | None
    budget: int
    fmt: str
    out: str | None


def _scheme(args) -> Scheme | None:
    eps = args.epsilon
    if args.theta_tan is not None:
        return Scheme.from_tan(args.theta_tan, eps)
    if args.theta_deg is not None:
        return Scheme.from_degrees(args.theta_deg, eps)
    if args.theta_cos_sin is not None:
        c, s = _floats(args.theta_cos_sin, 2, "--theta-cos-sin")
        return Scheme.from_cos_sin(c, s, eps)
    return None


def _slope(args) -> Slope | None:
    if args.slope is not None:
        try:
            a, b, d = (int(p) for p in args.slope.split(","))
        except ValueError:
            raise UsageError(f"--slope expects integers a,b,d, got {args.slope!r}") from None
        if a == 0 and b == 0:
            return HORIZONTAL
        return StructuredSlope(a, b, d)
    if args.slope_real is not None:
        text = args.slope_real.strip().lower()
        if text in ("vertical", "inf", "+inf", "-inf", "infinity"):
            raise UsageError(VERTICAL_NOTE)
        s = _floats(text, 1, "--slope-real")[0]
        if not math.isfinite(s):
            raise UsageError(VERTICAL_NOTE)
        return slope_from_real(s)
    if args.horizontal:
        return HORIZONTAL
    return None


def _budget(args) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get(BUDGET_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{BUDGET_ENV}={env!r} is not an integer") from None
    return DEFAULT_BUDGET


def _common(p: argparse.ArgumentParser, formats=("json", "csv")) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--theta-tan", type=float, metavar="T")
    g.add_argument("--theta-deg", type=float, metavar="DEG")
    g.add_argument("--theta-cos-sin", metavar="C,S")
    p.add_argument("--epsilon", type=float, help="window length (default cos + sin)")
    s = p.add_mutually_exclusive_group()
    s.add_argument("--slope", metavar="A,B,D", help="slope (a cos - b sin) / d")
    s.add_argument("--slope-real", metavar="S", help="generic real slope")
    s.add_argument("--horizontal", action="store_true")
    p.add_argument("--range", metavar="LO,HI")
    p.add_argument("--budget", type=int, help=f"candidate pair budget (env {BUDGET_ENV})")
    p.add_argument("--format", choices=formats, default=formats[0])
    p.add_argument("--out", metavar="PATH")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stripes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    _common(sub.add_parser("enumerate", help="list the 1-D model set over --range"))
    _common(sub.add_parser("classify", help="discrete / dense / stripes"), ("text", "json"))
    _common(sub.add_parser("closure", help="closure of the y-axis trace over --range"))
    p = sub.add_parser("trace", help="brute-force intercepts and containment report")
    _common(p)
    p.add_argument("--x-extent", type=float, default=50.0)
    p = sub.add_parser("iet", help="orbit of the base map as JSON lines")
    _common(p, ("json",))
    p.add_argument("--steps", type=int, default=1000)
    p.add_argument("--alpha", type=float, default=0.0)
    p = sub.add_parser("kronecker", help="distance from a generic line to Lambda")
    _common(p)
    p.add_argument("--target", metavar="X,Y", default="0,0")
    p.add_argument("--delta", type=float, default=0.05)
    p.add_argument("--t-max", type=float, default=1000.0)
    p = sub.add_parser("render", help="SVG of a line family")
    _common(p, ("svg", "json", "csv"))
    p.add_argument("--figure", type=int, choices=(1, 2))
    p.add_argument("--viewport", metavar="X0,X1,Y0,Y1", default="-2.5,2.5,-2.5,2.5")
    p.add_argument("--source", metavar="X0,X1,Y0,Y1", help="box of Lambda points used")
    p.add_argument("--stroke-width", type=float)
    sub.add_parser("check", help="run the acceptance criteria")
    return parser


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _need(value, what: str):
    if value is None:
        raise UsageError(f"missing {what}")
    return value


def _range(args, default=None) -> tuple[float, float]:
    if args.range is None:
        if default is None:
            raise UsageError("missing --range LO,HI")
        return default
    lo, hi = _floats(args.range, 2, "--range")
    if not lo < hi:
        raise UsageError("--range needs LO < HI")
    return lo, hi


def _describe(cls) -> str:
    if isinstance(cls, Discrete):
        return "discrete"
    if isinstance(cls, Dense):
        return f"dense ({cls.reason})"
    return f"stripes width={cls.width:.6g} spacing={cls.spacing:.6g}"


def cmd_enumerate(cfg, args):
    lo, hi = _range(args)
    pts = model_set_arrays(_need(cfg.scheme, "theta"), lo, hi, cfg.budget)
    rows = [(int(m), int(n), float(x), float(xs))
            for m, n, x, xs in zip(pts.m, pts.n, pts.x, pts.x_star)]
    if cfg.fmt == "csv":
        return to_csv(["m", "n", "x", "x_star"], rows)
    return dumps({"scheme": scheme_to_json(cfg.scheme),
                  "points": [dict(zip(("m", "n", "x", "x_star"), r)) for r in rows]}) + "\n"


def cmd_classify(cfg, args):
    scheme, slope = _need(cfg.scheme, "theta"), _need(cfg.slope, "slope")
    cls = classify_slope(scheme, slope)
    if cfg.fmt == "text":
        return _describe(cls) + "\n"
    doc = {"kind": cls.name}
    if isinstance(cls, Dense):
        doc["reason"] = cls.reason
    if isinstance(cls, Stripes):
        doc.update(d=cls.d, lambda_star=cls.lambda_star, epsilon=cls.epsilon,
                   width=cls.width, spacing=cls.spacing)
    return dumps({"scheme": scheme_to_json(scheme), "slope": slope_to_json(slope),
                  "classification": doc}) + "\n"


def _structured(cfg) -> StructuredSlope:
    slope = _need(cfg.slope, "slope")
    if not isinstance(slope, StructuredSlope):
        raise UsageError("this command needs a structured slope --slope A,B,D")
    return slope


def cmd_closure(cfg, args):
    scheme, slope = _need(cfg.scheme, "theta"), _structured(cfg)
    lo, hi = _range(args)
    ivs = list(closure_on_axis(scheme, slope, lo, hi))
    if cfg.fmt == "csv":
        return to_csv(["lo", "hi"], ivs)
    return dumps({"scheme": scheme_to_json(scheme), "slope": slope_to_json(slope),
                  "intervals": ivs}) + "\n"


def cmd_trace(cfg, args):
    scheme, slope = _need(cfg.scheme, "theta"), _need(cfg.slope, "slope")
    if not isinstance(slope, (StructuredSlope, GenericSlope)):
        raise UsageError("trace needs a non-horizontal slope")
    lo, hi = _range(args, (-1.0, 1.0))
    tr = trace_axis_intercepts(scheme, slope, args.x_extent, lo, hi, cfg.budget)
    report = None
    if isinstance(slope, StructuredSlope) and isinstance(classify_slope(scheme, slope), Stripes):
        dist = closure_on_axis(scheme, slope, lo, hi).distance(tr.values)
        worst = float(dist.max()) if len(dist) else 0.0
        report = {"max_distance": worst, "contained": bool(worst <= 1e-9)}
        print(f"trace: {len(tr)} intercepts, max distance to closure {worst:.3g}",
              file=sys.stderr)
    rows = [(v, p.m, p.n, p.k) for v, p in tr.points()]
    if cfg.fmt == "csv":
        return to_csv(["value", "m", "n", "k"], rows)
    return dumps({"scheme": scheme_to_json(scheme), "slope": slope_to_json(slope),
                  "intercepts": [dict(zip(("value", "m", "n", "k"), r)) for r in rows],
                  "containment": report}) + "\n"


def cmd_iet(cfg, args):
    scheme, slope = _need(cfg.scheme, "theta"), _structured(cfg)
    if args.steps < 0:
        raise UsageError("--steps must be non-negative")
    orb = orbit(scheme, slope, [args.alpha], args.steps)
    lines = [dumps({"step": j, "xi": float(orb.xi[0, j]), "eta": float(orb.eta[0, j]),
                    "invariant_residual": float(orb.residual[0, j])})
             for j in range(args.steps + 1)]
    return "\n".join(lines) + "\n"


def cmd_kronecker(cfg, args):
    scheme, slope = _need(cfg.scheme, "theta"), _need(cfg.slope, "slope")
    if not isinstance(slope, GenericSlope):
        raise UsageError("kronecker needs a generic slope --slope-real S")
    target = _floats(args.target, 2, "--target")
    res = kronecker_density_check(scheme, slope, tuple(target), args.delta, args.t_max,
                                  cfg.budget)
    doc = {"hit": res.hit, "min_distance": res.min_distance,
           "nearest": {"m": res.nearest.m, "n": res.nearest.n, "k": res.nearest.k},
           "hit_extent": res.hit_extent}
    if cfg.fmt == "csv":
        return to_csv(["hit", "min_distance", "m", "n", "k"],
                      [(res.hit, res.min_distance, res.nearest.m, res.nearest.n,
                        res.nearest.k)])
    return dumps(doc) + "\n"


def cmd_render(cfg, args):
    if args.figure is not None:
        fig = figure(args.figure)
    else:
        vp = Viewport(*_floats(args.viewport, 4, "--viewport"))
        src = Viewport(*_floats(args.source, 4, "--source")) if args.source else vp
        fig = Figure(_need(cfg.scheme, "theta"), _need(cfg.slope, "slope"), vp, src)
    if args.stroke_width is not None:
        fig = Figure(fig.scheme, fig.slope, fig.viewport, fig.source,
                     SvgStyle(stroke_width=args.stroke_width))
    lines = fig.lines(cfg.budget)
    print(f"lines={len(lines)}")
    if cfg.fmt == "svg":
        text = fig.svg(cfg.budget)
    elif cfg.fmt == "csv":
        text = to_csv(["intercept", "count"], [(ln.intercept, ln.count) for ln in lines])
    else:
        text = dumps({"config": fig.config(),
                      "lines": [{"intercept": ln.intercept, "count": ln.count}
                                for ln in lines]}) + "\n"
    if cfg.out:
        _emit(cfg, text)
    elif cfg.fmt != "svg":
        sys.stdout.write(text)
    return ""


def cmd_check(cfg, args):
    results = []
    for i in range(1, len(acceptance.CRITERIA) + 1):
        r = acceptance.run_criterion(i)
        print(r.line(), flush=True)
        results.append(r)
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} criteria passed")
    return None if not failed else 1


COMMANDS = {
    "enumerate": cmd_enumerate, "classify": cmd_classify, "closure": cmd_closure,
    "trace": cmd_trace, "iet": cmd_iet, "kronecker": cmd_kronecker, "render": cmd_render,
    "check": cmd_check,
}


# comma lists such as "-1,1" would otherwise be taken for option flags
LIST_FLAGS = ("--range", "--viewport", "--source", "--target", "--slope", "--theta-cos-sin",
              "--slope-real")


def _join_list_values(argv: list[str]) -> list[str]:
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in LIST_FLAGS:
            value = next(it, None)
            out.append(tok if value is None else f"{tok}={value}")
        else:
            out.append(tok)
    return out


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_join_list_values(argv))
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        if args.command == "check":
            cfg = RunConfig("check", None, None, DEFAULT_BUDGET, "text", None)
        else:
            cfg = RunConfig(args.command, _scheme(args), _slope(args), _budget(args),
                            args.format, args.out)
        if cfg.scheme is not None:
            warning = rationality_warning(cfg.scheme)
            if warning:
                print(f"warning: {warning}", file=sys.stderr)
        result = COMMANDS[args.command](cfg, args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if isinstance(result, int):
        return result
    if result:
        _emit(cfg, result)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Experiment command line: evaluate curves, verify identities, run experiments.

Commands
    eval      operator curve (x, f, B[, B_original]) over a grid
    moments   operator vs closed-form test monomials over a grid
    verify    identity battery over an (n, p, q) lattice, pass/fail per check
    converge  per-n errors and bound along a parameter sequence rule
    trend     sup errors along one varied parameter direction
    figure    multi-curve file for the plot renderer (one curve per variant)

Exit status: 0 success, 1 a mathematical check failed its tolerance,
2 usage/plumbing problems (bad parameters, unknown names, I/O).

Configuration precedence: command-line flags, then an optional key=value
config file (--config), then built-in defaults.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from .analysis import (
    ConvergenceReport,
    Grid,
    ToleranceError,
    constant_sequence,
    curve_samples,
    korovkin_experiment,
    param_sequence,
    trend_experiment,
    trend_specs,
)
from .operators import (
    OperatorSpec,
    TargetFunction,
    builtin_function,
    moment_closed_form,
    nodes,
    operator_curve,
    second_moment_identity_check,
)
from .pqcalc import PQParams, pq_binomial, pq_binomial_oracle, pq_integer
from .reporting import FORMATS, write_report

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

DEFAULTS = {
    "n": 10,
    "p": 0.95,
    "q": 0.9,
    "function": None,
    "poly": None,
    "grid": 1001,
    "format": "csv",
    "output": None,
    "reproducible": False,
    "use_original": False,
    "expect_defect": False,
    "rule": "half_harmonic",
    "threshold": 0.01,
    "n_list": None,
    "p_list": None,
    "q_list": None,
    "ratio_list": None,
    "pq_list": None,
}

VERIFY_N = (1, 2, 5, 10, 25, 50)
VERIFY_P = (0.6, 0.8, 0.95, 0.999)
VERIFY_RATIOS = (0.5, 0.9, 0.99)

FIGURE_VARIANTS = {
    "vary_q": dict(n=10, p=0.95, q_list=(0.5, 0.7, 0.9, 0.94)),
    "vary_n": dict(p=0.98, q=0.95, n_list=(5, 10, 20, 40)),
    "vary_pq": dict(n=10, pq_list=((0.8, 0.7), (0.9, 0.85), (0.95, 0.93), (0.99, 0.985))),
}


@dataclass
class RunConfig:
    """Fully resolved run parameters for one command invocation."""

    command: str
    values: dict = field(default_factory=dict)
    provided: set = field(default_factory=set)

    def __getattr__(self, key):
        try:
            return self.values[key]
        except KeyError:
            raise AttributeError(key) from None


def _parse_int_list(text: str) -> list[int]:
    return [int(tok) for tok in str(text).split(",") if tok]


def _parse_float_list(text: str) -> list[float]:
    return [float(tok) for tok in str(text).split(",") if tok]


def _parse_pq_list(text: str) -> list[tuple[float, float]]:
    pairs = []
    for tok in str(text).split(","):
        if not tok:
            continue
        p, sep, q = tok.partition(":")
        if not sep:
            raise ValueError(f"expected p:q pair, got {tok!r}")
        pairs.append((float(p), float(q)))
    return pairs


_CONVERTERS = {
    "n": int,
    "grid": int,
    "p": float,
    "q": float,
    "threshold": float,
    "reproducible": lambda v: str(v).lower() in ("1", "true", "yes"),
    "use_original": lambda v: str(v).lower() in ("1", "true", "yes"),
    "expect_defect": lambda v: str(v).lower() in ("1", "true", "yes"),
    "n_list": _parse_int_list,
    "p_list": _parse_float_list,
    "q_list": _parse_float_list,
    "ratio_list": _parse_float_list,
    "poly": _parse_float_list,
    "pq_list": _parse_pq_list,
}


def _read_config_file(path: str) -> dict:
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {line!r}")
            values[key.strip().replace("-", "_")] = value.strip()
    return values


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """Merge flags over config-file entries over defaults into a RunConfig."""
    file_values = _read_config_file(args.config) if getattr(args, "config", None) else {}
    unknown = set(file_values) - set(DEFAULTS)
    if unknown:
        raise ValueError(f"unknown config keys: {', '.join(sorted(unknown))}")
    values = {}
    provided = set()
    for key, default in DEFAULTS.items():
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
            provided.add(key)
        elif key in file_values:
            values[key] = _CONVERTERS.get(key, str)(file_values[key])
            provided.add(key)
        else:
            values[key] = default
    for key in ("kind", "figure_id"):
        if hasattr(args, key):
            values[key] = getattr(args, key)
    return RunConfig(command=args.command, values=values, provided=provided)


def _target_function(cfg: RunConfig) -> TargetFunction:
    if cfg.poly is not None:
        if cfg.function is not None:
            raise ValueError("--function and --poly are mutually exclusive")
        return TargetFunction.polynomial(cfg.poly)
    return builtin_function(cfg.function or "cubic_roots")


def _spec(cfg: RunConfig, n=None, p=None, q=None) -> OperatorSpec:
    return OperatorSpec(
        n if n is not None else cfg.n,
        PQParams(p if p is not None else cfg.p, q if q is not None else cfg.q),
    )


def _base_params(cfg: RunConfig, spec: OperatorSpec, f: TargetFunction) -> dict:
    return {
        "command": cfg.command,
        "n": str(spec.n),
        "p": repr(spec.params.p),
        "q": repr(spec.params.q),
        "function": f.name,
        "grid": str(cfg.grid),
    }


# ---------------------------------------------------------------------------
# Commands


def cmd_eval(cfg: RunConfig) -> int:
    spec = _spec(cfg)
    f = _target_function(cfg)
    grid = Grid.uniform(cfg.grid)
    data = curve_samples(spec, f, grid, include_original=cfg.use_original)
    params = _base_params(cfg, spec, f)
    params["use_original"] = "true" if cfg.use_original else "false"
    columns = ["x", "f", "B"] + (["B_original"] if cfg.use_original else [])
    report = ConvergenceReport(params=params, columns=columns, rows=data.tolist())
    write_report(report, cfg.output, cfg.format, cfg.reproducible)
    return EXIT_OK


def cmd_moments(cfg: RunConfig) -> int:
    spec = _spec(cfg)
    grid = Grid.uniform(cfg.grid)
    xs = grid.points
    ops = [
        operator_curve(spec, builtin_function(f"monomial_{m}"), xs) for m in range(3)
    ]
    closed = [np.array([moment_closed_form(spec, m, x) for x in xs]) for m in range(3)]
    rows = np.column_stack(
        [xs, ops[0], closed[0], ops[1], closed[1], ops[2], closed[2]]
    ).tolist()
    params = _base_params(cfg, spec, builtin_function("monomial_2"))
    del params["function"]
    report = ConvergenceReport(
        params=params,
        columns=["x", "m0", "m0_closed", "m1", "m1_closed", "m2", "m2_closed"],
        rows=rows,
    )
    failed = False
    for m in range(3):
        dev = float(np.max(np.abs(ops[m] - closed[m])))
        passed = dev <= 1e-11
        failed = failed or not passed
        report.verdicts[f"m{m}_max_deviation"] = format(dev, ".3e")
        report.verdicts[f"m{m}_pass"] = "true" if passed else "false"
    write_report(report, cfg.output, cfg.format, cfg.reproducible)
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def _verify_lattice(cfg: RunConfig) -> list[OperatorSpec]:
    ns = cfg.n_list or list(VERIFY_N)
    ps = cfg.p_list or list(VERIFY_P)
    ratios = cfg.ratio_list or list(VERIFY_RATIOS)
    return [
        OperatorSpec(n, PQParams(p, r * p)) for n in ns for p in ps for r in ratios
    ]


def cmd_verify(cfg: RunConfig) -> int:
    """Run the identity battery; one report row per check."""
    lattice = _verify_lattice(cfg)
    f = _target_function(cfg)
    xs = Grid.uniform(cfg.grid).points
    one = builtin_function("monomial_0")

    rows = []

    def check(name: str, deviation: float, tolerance: float) -> None:
        deviation = float(deviation)
        rows.append([name, deviation, tolerance, bool(deviation <= tolerance)])

    if cfg.use_original:
        # Partition of unity fails for the uncorrected operator when p < 1
        # and n >= 2 (at n = 1 the variants coincide); the deviation must
        # clear a floor proportional to 1 - p.
        worst_excess = math.inf
        worst_dev = 0.0
        for spec in lattice:
            dev = float(np.max(np.abs(operator_curve(spec, one, xs, original=True) - 1.0)))
            worst_dev = max(worst_dev, dev)
            p = spec.params.p
            if p < 1.0 and spec.n >= 2:
                worst_excess = min(worst_excess, dev - 0.01 * (1.0 - p))
        if cfg.expect_defect:
            rows.append(["partition_of_unity_defect", worst_excess, 0.0, worst_excess > 0.0])
        else:
            check("partition_of_unity", worst_dev, 1e-12)
    else:
        dev = max(
            float(np.max(np.abs(operator_curve(spec, one, xs) - 1.0)))
            for spec in lattice
        )
        check("partition_of_unity", dev, 1e-12)

    dev = 0.0
    for spec in lattice:
        for m in range(3):
            op = operator_curve(spec, builtin_function(f"monomial_{m}"), xs)
            cl = np.array([moment_closed_form(spec, m, x) for x in xs])
            dev = max(dev, float(np.max(np.abs(op - cl))))
    check("moments_vs_closed_form", dev, 1e-11)

    pairs = sorted({spec.params for spec in lattice}, key=lambda pr: (pr.p, pr.q))
    dev = 0.0
    for params in pairs:
        for n in range(13):
            for k in range(n + 1):
                ora = pq_binomial_oracle(n, k, params)
                dev = max(dev, abs(pq_binomial(n, k, params) - ora) / ora)
    check("binomial_recurrence_vs_oracle", dev, 1e-12)

    dev = max(
        second_moment_identity_check(spec) / pq_integer(spec.n, spec.params)
        for spec in lattice
    )
    check("bracket_identity", dev, 1e-13)

    dev = max(
        max(
            abs(operator_curve(spec, f, np.array([0.0, 1.0]))[i] - f(x))
            for i, x in ((0, 0.0), (1, 1.0))
        )
        for spec in lattice
    )
    check("endpoint_interpolation", dev, 1e-13)

    strict = True
    dev = 0.0
    for spec in lattice:
        vals = nodes(spec).values
        gaps = np.diff(vals)
        strict = strict and bool(np.all(gaps > 0.0))
        n, p, q = spec.n, spec.params.p, spec.params.q
        bn = pq_integer(n, spec.params)
        expected = np.array([p ** (n - k - 1) * q**k / bn for k in range(n)])
        dev = max(dev, float(np.max(np.abs(gaps - expected))))
    check("node_gap_identity", dev, 1e-13)
    rows.append(["nodes_strictly_increasing", 0.0 if strict else 1.0, 0.0, strict])

    report = ConvergenceReport(
        params={
            "command": "verify",
            "lattice_size": str(len(lattice)),
            "grid": str(cfg.grid),
            "use_original": "true" if cfg.use_original else "false",
            "expect_defect": "true" if cfg.expect_defect else "false",
        },
        columns=["check", "max_deviation", "tolerance", "pass"],
        rows=rows,
    )
    all_pass = all(row[3] for row in rows)
    report.verdicts["all_pass"] = "true" if all_pass else "false"
    write_report(report, cfg.output, cfg.format, cfg.reproducible)
    return EXIT_OK if all_pass else EXIT_CHECK_FAILED


def cmd_converge(cfg: RunConfig) -> int:
    if cfg.rule == "constant":
        seq = constant_sequence(cfg.p, cfg.q)
    else:
        seq = param_sequence(cfg.rule)
    n_values = cfg.n_list or [10, 25, 50, 100]
    f = _target_function(cfg) if (cfg.function or cfg.poly) else None
    report = korovkin_experiment(
        seq, n_values, Grid.uniform(cfg.grid), f=f, threshold=cfg.threshold
    )
    report.params = {"command": "converge", **report.params}
    if f is not None:
        report.params["function"] = f.name
    write_report(report, cfg.output, cfg.format, cfg.reproducible)
    return EXIT_OK


def _trend_variants(cfg: RunConfig, kind: str):
    defaults = FIGURE_VARIANTS[kind]
    if kind == "vary_q":
        return cfg.q_list or list(defaults["q_list"])
    if kind == "vary_n":
        return cfg.n_list or list(defaults["n_list"])
    return cfg.pq_list or list(defaults["pq_list"])


def _trend_base(cfg: RunConfig, kind: str) -> OperatorSpec:
    defaults = FIGURE_VARIANTS[kind]

    def pick(key):
        if key in cfg.provided:
            return cfg.values[key]
        return defaults.get(key, DEFAULTS[key])

    return _spec(cfg, n=pick("n"), p=pick("p"), q=pick("q"))


def cmd_trend(cfg: RunConfig) -> int:
    kind = cfg.kind
    base = _trend_base(cfg, kind)
    f = _target_function(cfg)
    variants = _trend_variants(cfg, kind)
    report = trend_experiment(kind, base, f, Grid.uniform(cfg.grid), variants)
    report.params = {"command": "trend", **report.params}
    write_report(report, cfg.output, cfg.format, cfg.reproducible)
    return EXIT_OK


def cmd_figure(cfg: RunConfig) -> int:
    """Emit the target curve plus one operator curve per variant."""
    kind = cfg.figure_id
    if kind not in FIGURE_VARIANTS:
        raise ValueError(
            f"unknown figure id {kind!r}; known ids: {', '.join(FIGURE_VARIANTS)}"
        )
    base = _trend_base(cfg, kind)
    f = _target_function(cfg)
    variants = _trend_variants(cfg, kind)
    grid = Grid.uniform(cfg.grid)
    xs = grid.points
    specs = trend_specs(kind, base, variants)
    columns = ["x", f.name]
    cols = [xs, np.array([f(x) for x in xs.tolist()])]
    for spec in specs:
        columns.append(f"B[n={spec.n};p={spec.params.p!r};q={spec.params.q!r}]")
        cols.append(operator_curve(spec, f, xs))
    params = _base_params(cfg, base, f)
    params["command"] = "figure"
    params["figure"] = kind
    params["variants"] = ";".join(
        f"n={s.n}:p={s.params.p!r}:q={s.params.q!r}" for s in specs
    )
    report = ConvergenceReport(params=params, columns=columns,
                               rows=np.column_stack(cols).tolist())
    write_report(report, cfg.output, cfg.format, cfg.reproducible)
    return EXIT_OK


COMMANDS = {
    "eval": cmd_eval,
    "moments": cmd_moments,
    "verify": cmd_verify,
    "converge": cmd_converge,
    "trend": cmd_trend,
    "figure": cmd_figure,
}


# ---------------------------------------------------------------------------
# Argument parsing


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, default=None, help="operator degree")
    parser.add_argument("--p", type=float, default=None, help="parameter p (0 < q < p <= 1)")
    parser.add_argument("--q", type=float, default=None, help="parameter q")
    parser.add_argument("--function", default=None, help="built-in target function name")
    parser.add_argument("--poly", type=_parse_float_list, default=None,
                        metavar="C0,C1,...", help="polynomial coefficients, low degree first")
    parser.add_argument("--grid", type=int, default=None, help="uniform grid resolution")
    parser.add_argument("--format", choices=FORMATS, default=None, help="output format")
    parser.add_argument("--output", default=None, metavar="PATH",
                        help="output path (default stdout)")
    parser.add_argument("--reproducible", action="store_true", default=None,
                        help="omit the timestamp so identical runs are byte-identical")
    parser.add_argument("--config", default=None, metavar="FILE",
                        help="key=value config file (flags take precedence)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pqbernstein",
        description="Twin-parameter Bernstein operator experiments",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="emit an operator curve over a grid")
    p_eval.add_argument("--use-original", dest="use_original", action="store_true",
                        default=None, help="add the uncorrected operator as a column")
    _add_common(p_eval)

    p_mom = sub.add_parser("moments", help="operator vs closed-form test monomials")
    _add_common(p_mom)

    p_ver = sub.add_parser("verify", help="run the identity battery over a lattice")
    p_ver.add_argument("--n-list", dest="n_list", type=_parse_int_list, default=None)
    p_ver.add_argument("--p-list", dest="p_list", type=_parse_float_list, default=None)
    p_ver.add_argument("--ratio-list", dest="ratio_list", type=_parse_float_list,
                       default=None, help="q/p ratios pairing with each p")
    p_ver.add_argument("--use-original", dest="use_original", action="store_true",
                       default=None, help="check partition of unity on the uncorrected operator")
    p_ver.add_argument("--expect-defect", dest="expect_defect", action="store_true",
                       default=None, help="pass iff the uncorrected operator exhibits its defect")
    _add_common(p_ver)

    p_con = sub.add_parser("converge", help="per-n errors along a parameter sequence")
    p_con.add_argument("--rule", default=None,
                       help="half_harmonic, log_rule, or constant (uses --p/--q)")
    p_con.add_argument("--n-list", dest="n_list", type=_parse_int_list, default=None)
    p_con.add_argument("--threshold", type=float, default=None,
                       help="final second-moment error defining convergence")
    _add_common(p_con)

    p_tr = sub.add_parser("trend", help="sup errors along one parameter direction")
    p_tr.add_argument("kind", choices=("vary_q", "vary_n", "vary_pq"))
    p_tr.add_argument("--q-list", dest="q_list", type=_parse_float_list, default=None)
    p_tr.add_argument("--n-list", dest="n_list", type=_parse_int_list, default=None)
    p_tr.add_argument("--pq-list", dest="pq_list", type=_parse_pq_list, default=None,
                      metavar="P:Q,P:Q,...")
    _add_common(p_tr)

    p_fig = sub.add_parser("figure", help="multi-curve figure data for the renderer")
    p_fig.add_argument("figure_id", choices=tuple(FIGURE_VARIANTS))
    p_fig.add_argument("--q-list", dest="q_list", type=_parse_float_list, default=None)
    p_fig.add_argument("--n-list", dest="n_list", type=_parse_int_list, default=None)
    p_fig.add_argument("--pq-list", dest="pq_list", type=_parse_pq_list, default=None,
                       metavar="P:Q,P:Q,...")
    _add_common(p_fig)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = resolve_config(args)
        return COMMANDS[cfg.command](cfg)
    except ToleranceError as exc:
        print(f"pqbernstein: check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except (ValueError, OSError) as exc:
        print(f"pqbernstein: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

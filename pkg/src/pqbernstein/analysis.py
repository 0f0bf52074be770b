"""Grid sup-norm errors, the convergence bound, and experiment drivers.

The uniform-convergence statement is quantitative only through the second
test monomial: with the bracket identity q[n-1] = [n] - p^{n-1},

    B(t^2; x) - x^2 = p^{n-1}/[n] * (x - x^2),

so the sup error of t^2 is p^{n-1}/[n] * max(x - x^2) and is dominated by
the bound 2 p^{n-1}/[n].  Convergence requires parameter sequences
(p_n, q_n) -> 1; for constant parameters the bound tends to the positive
limit 2(p-q)/p, which the negative-control experiment exhibits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .operators import (
    OperatorSpec,
    TargetFunction,
    builtin_function,
    moment_closed_form,
    operator_curve,
)
from .pqcalc import PQParams, pq_integer

MOMENT_TOL = 1e-12
BOUND_SLACK = 1e-12
TREND_SLACK = 1e-12


class ToleranceError(ArithmeticError):
    """A mathematical identity failed its stated tolerance."""


@dataclass(frozen=True)
class Grid:
    """Strictly increasing evaluation points spanning [0, 1]."""

    points: np.ndarray

    def __post_init__(self) -> None:
        pts = np.asarray(self.points, dtype=float)
        object.__setattr__(self, "points", pts)
        pts.flags.writeable = False
        if len(pts) < 2 or pts[0] != 0.0 or pts[-1] != 1.0:
            raise ValueError("grid must contain 0 and 1")
        if np.any(np.diff(pts) <= 0.0):
            raise ValueError("grid points must be strictly increasing")

    @classmethod
    def uniform(cls, resolution: int = 1001) -> "Grid":
        if resolution < 2:
            raise ValueError(f"grid resolution must be at least 2, got {resolution}")
        return cls(np.linspace(0.0, 1.0, resolution))

    @property
    def resolution(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class ParamSequence:
    """Named rule n -> (p_n, q_n) feeding the convergence experiment."""

    name: str
    rule: Callable[[int], tuple[float, float]]
    description: str

    def params_for(self, n: int) -> PQParams:
        p, q = self.rule(n)
        try:
            return PQParams(p, q)
        except ValueError as exc:
            raise ValueError(f"rule {self.name!r} is invalid at n={n}: {exc}") from exc


def half_harmonic_sequence() -> ParamSequence:
    return ParamSequence(
        "half_harmonic",
        lambda n: (1.0 - 1.0 / (2.0 * n), 1.0 - 1.0 / n),
        "p_n = 1 - 1/(2n), q_n = 1 - 1/n; both tend to 1 (needs n >= 2)",
    )


def log_rule_sequence() -> ParamSequence:
    def rule(n: int) -> tuple[float, float]:
        d = n * math.log(n + 2)
        return 1.0 - 1.0 / d, 1.0 - 2.0 / d

    return ParamSequence(
        "log_rule",
        rule,
        "p_n = 1 - 1/(n log(n+2)), q_n = 1 - 2/(n log(n+2)); both tend to 1",
    )


def constant_sequence(p: float, q: float) -> ParamSequence:
    params = PQParams(p, q)  # validate once
    return ParamSequence(
        f"constant({p},{q})",
        lambda n: (params.p, params.q),
        "fixed (p, q); violates the convergence hypothesis (negative control)",
    )


_NAMED_SEQUENCES: dict[str, Callable[[], ParamSequence]] = {
    "half_harmonic": half_harmonic_sequence,
    "log_rule": log_rule_sequence,
}


def param_sequence(name: str) -> ParamSequence:
    try:
        return _NAMED_SEQUENCES[name]()
    except KeyError:
        known = ", ".join(sorted(_NAMED_SEQUENCES)) + ", constant (with p, q)"
        raise ValueError(f"unknown sequence rule {name!r}; known rules: {known}") from None


@dataclass
class ConvergenceReport:
    """Tabular experiment result: header params, columns, rows, verdicts."""

    params: dict[str, str]
    columns: list[str]
    rows: list[list] = field(default_factory=list)
    verdicts: dict[str, str] = field(default_factory=dict)

    def column(self, name: str) -> list:
        idx = self.columns.index(name)
        return [row[idx] for row in self.rows]


# ---------------------------------------------------------------------------
# Error measurement


def sup_error(spec: OperatorSpec, f: TargetFunction, grid: Grid) -> float:
    """max over the grid of |B(f; x) - f(x)|."""
    curve = operator_curve(spec, f, grid.points)
    fvals = np.array([f(x) for x in grid.points.tolist()])
    return float(np.max(np.abs(curve - fvals)))


def second_moment_bound(spec: OperatorSpec) -> float:
    """The convergence bound 2 p^{n-1} / [n] for the second test monomial."""
    n, params = spec.n, spec.params
    return 2.0 * params.p ** (n - 1) / pq_integer(n, params)


# ---------------------------------------------------------------------------
# Experiments


def _weakly_decreasing(values: Sequence[float], slack: float = TREND_SLACK) -> bool:
    return all(b <= a + slack for a, b in zip(values, values[1:]))


def korovkin_experiment(
    seq: ParamSequence,
    n_values: Iterable[int],
    grid: Grid,
    f: TargetFunction | None = None,
    threshold: float = 0.01,
) -> ConvergenceReport:
    """Per-n sup errors of the three test monomials against the bound.

    Enforces what the theory guarantees at every n: the constant and
    identity rows vanish to 1e-12 and the t^2 row is dominated by
    2 p^{n-1}/[n] (ToleranceError otherwise).  Whether the t^2 error
    actually decays below ``threshold`` is the experiment's verdict: it
    distinguishes rules with (p_n, q_n) -> 1 from constant ones.
    """
    monomials = [builtin_function(f"monomial_{m}") for m in range(3)]
    columns = ["n", "p", "q", "error_m0", "error_m1", "error_m2", "bound"]
    if f is not None:
        columns.append("error_f")
    report = ConvergenceReport(
        params={
            "rule": seq.name,
            "grid": str(grid.resolution),
            "threshold": repr(threshold),
        },
        columns=columns,
    )
    for n in n_values:
        spec = OperatorSpec(n, seq.params_for(n))
        errs = [sup_error(spec, mono, grid) for mono in monomials]
        bound = second_moment_bound(spec)
        for m in (0, 1):
            if errs[m] > MOMENT_TOL:
                raise ToleranceError(
                    f"monomial m={m} error {errs[m]:.3e} exceeds {MOMENT_TOL} at n={n}"
                )
        if errs[2] > bound + BOUND_SLACK:
            raise ToleranceError(
                f"second-moment error {errs[2]:.6e} exceeds its bound {bound:.6e} at n={n}"
            )
        row = [n, spec.params.p, spec.params.q, *errs, bound]
        if f is not None:
            row.append(sup_error(spec, f, grid))
        report.rows.append(row)

    m2 = report.column("error_m2")
    decreasing = _weakly_decreasing(m2)
    below = bool(m2) and m2[-1] <= threshold
    report.verdicts["m2_weakly_decreasing"] = "true" if decreasing else "false"
    report.verdicts["m2_below_threshold"] = "true" if below else "false"
    report.verdicts["convergence"] = "yes" if (decreasing and below) else "no-convergence"
    return report


TREND_KINDS = ("vary_q", "vary_n", "vary_pq")


def trend_specs(kind: str, base: OperatorSpec, variants: Sequence) -> list[OperatorSpec]:
    """Expand one varied-parameter direction into concrete operator specs."""
    if kind == "vary_q":
        return [OperatorSpec(base.n, PQParams(base.params.p, q)) for q in variants]
    if kind == "vary_n":
        return [OperatorSpec(int(n), base.params) for n in variants]
    if kind == "vary_pq":
        return [OperatorSpec(base.n, PQParams(p, q)) for p, q in variants]
    raise ValueError(f"unknown trend kind {kind!r}; known kinds: {', '.join(TREND_KINDS)}")


def trend_experiment(
    kind: str,
    base: OperatorSpec,
    f: TargetFunction,
    grid: Grid,
    variants: Sequence,
) -> ConvergenceReport:
    """Sup errors along one varied parameter direction.

    Directions mirror the qualitative convergence pictures: q rising toward
    p, n rising at fixed near-1 parameters, or (p, q) moving jointly toward
    1.  The verdict records whether the error is weakly decreasing along
    the declared direction; it is reported, never enforced.
    """
    if not len(variants):
        raise ValueError("trend experiment needs at least one variant")
    specs = trend_specs(kind, base, variants)
    report = ConvergenceReport(
        params={
            "kind": kind,
            "function": f.name,
            "grid": str(grid.resolution),
        },
        columns=["n", "p", "q", "sup_error", "bound"],
    )
    for spec in specs:
        report.rows.append(
            [
                spec.n,
                spec.params.p,
                spec.params.q,
                sup_error(spec, f, grid),
                second_moment_bound(spec),
            ]
        )
    decreasing = _weakly_decreasing(report.column("sup_error"))
    report.verdicts["error_weakly_decreasing"] = "true" if decreasing else "false"
    return report


def curve_samples(
    spec: OperatorSpec,
    f: TargetFunction,
    grid: Grid,
    include_original: bool = False,
) -> np.ndarray:
    """Columns (x, f(x), B(f; x)[, uncorrected B]) over the grid."""
    cols = [
        grid.points,
        np.array([f(x) for x in grid.points.tolist()]),
        operator_curve(spec, f, grid.points),
    ]
    if include_original:
        cols.append(operator_curve(spec, f, grid.points, original=True))
    return np.column_stack(cols)

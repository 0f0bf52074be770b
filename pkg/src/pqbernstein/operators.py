"""The twin-parameter Bernstein operator, its basis, nodes and moments.

The corrected operator of degree n with parameters 0 < q < p <= 1 is

    B(f; x) = sum_{k=0}^{n} b_k(x) f(t_k),

    b_k(x) = p^{-n(n-1)/2} C(n,k) p^{k(k-1)/2} x^k prod_{s=0}^{n-k-1} (p^s - q^s x),
    t_k    = [k] / (p^{k-n} [n]) = p^{n-k} [k] / [n],

with C(n,k) the twin-parameter binomial and [k] the bracket from
:mod:`pqcalc`.  The uncorrected variant drops the two power normalizers and
samples at [k]/[n]; it fails to reproduce constants and is kept only as a
diagnostic.

Evaluation detail: collecting every p power in the k-th term of B gives a
net exponent of exactly zero, so

    b_k(x) = G_t(n, k) x^k prod_{s=0}^{n-k-1} (1 - t^s x),      t = q / p,

where G_t is the one-parameter binomial row.  All factors now live in
[0, 1] (the row itself stays below 2^n), so the evaluation neither
overflows nor underflows anywhere on the validated domain, while the
literal formula's stray powers p^{+-n(n-1)/2} leave double range already
for p < 0.97 at n = 200.  The uncorrected term k is the corrected one
times p^{(n-k)(n+k-1)/2}.  Both identities are exact algebra, enforced
against an exact-rational evaluation of the literal formulas in the tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .pqcalc import MAX_DEGREE, PQParams, pq_integer, q_binomial_row

PARTITION_TOL = 1e-12
POSITIVITY_TOL = 1e-15


@dataclass(frozen=True)
class OperatorSpec:
    """Degree n plus parameter pair; identifies one operator."""

    n: int
    params: PQParams

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"degree must be at least 1, got n={self.n}")
        if self.n > MAX_DEGREE:
            raise ValueError(
                f"degree n={self.n} exceeds the supported cap {MAX_DEGREE} "
                "(power products leave double range beyond it)"
            )


@dataclass(frozen=True)
class BasisVector:
    """Basis values (b_0(x), ..., b_n(x)); nonnegative, summing to one."""

    values: np.ndarray
    at_x: float

    def __post_init__(self) -> None:
        self.values.flags.writeable = False
        if np.min(self.values) < -POSITIVITY_TOL:
            raise ValueError("basis values must be nonnegative on [0, 1]")
        dev = abs(math.fsum(self.values.tolist()) - 1.0)
        if dev > PARTITION_TOL:
            raise ValueError(f"basis does not sum to one (deviation {dev:.3e})")

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class NodeVector:
    """Sample points (t_0, ..., t_n) with t_0 = 0, t_n = 1, nondecreasing.

    Mathematically the nodes are strictly increasing (consecutive gap
    p^{n-k-1} q^k / [n] > 0), but for q << p at large n the gap drops below
    one ulp and neighbouring doubles collide; the constructor therefore
    enforces nondecreasing only.
    """

    values: np.ndarray

    def __post_init__(self) -> None:
        self.values.flags.writeable = False
        if self.values[0] != 0.0 or self.values[-1] != 1.0:
            raise ValueError("nodes must start at 0 and end at 1")
        if np.any(np.diff(self.values) < 0.0):
            raise ValueError("nodes must be nondecreasing")

    def __len__(self) -> int:
        return len(self.values)


# ---------------------------------------------------------------------------
# Target functions


@dataclass(frozen=True)
class TargetFunction:
    """A real function on [0, 1]: a named builtin or a coefficient polynomial."""

    name: str
    fn: Callable[[float], float]
    coefficients: tuple[float, ...] | None = None

    def __call__(self, x: float) -> float:
        return self.fn(x)

    @staticmethod
    def polynomial(coefficients: Sequence[float], name: str | None = None) -> "TargetFunction":
        """Polynomial sum(c_i x^i) from monomial coefficients, Horner-evaluated."""
        coeffs = tuple(float(c) for c in coefficients)
        if not coeffs:
            raise ValueError("polynomial needs at least one coefficient")

        def horner(x: float) -> float:
            acc = 0.0
            for c in reversed(coeffs):
                acc = acc * x + c
            return acc

        label = name or "poly(" + ",".join(repr(c) for c in coeffs) + ")"
        return TargetFunction(label, horner, coeffs)


def _cubic_roots(x: float) -> float:
    return (x - 1.0 / 3.0) * (x - 0.5) * (x - 0.75)


BUILTIN_FUNCTIONS: dict[str, TargetFunction] = {
    f.name: f
    for f in (
        TargetFunction("cubic_roots", _cubic_roots),
        TargetFunction("monomial_0", lambda x: 1.0, (1.0,)),
        TargetFunction("monomial_1", lambda x: x, (0.0, 1.0)),
        TargetFunction("monomial_2", lambda x: x * x, (0.0, 0.0, 1.0)),
        TargetFunction("abs_centered", lambda x: abs(x - 0.5)),
        TargetFunction("exp", math.exp),
        TargetFunction("sin_pi", lambda x: math.sin(math.pi * x)),
    )
}


def builtin_function(name: str) -> TargetFunction:
    try:
        return BUILTIN_FUNCTIONS[name]
    except KeyError:
        known = ", ".join(sorted(BUILTIN_FUNCTIONS))
        raise ValueError(f"unknown function {name!r}; known names: {known}") from None


# ---------------------------------------------------------------------------
# Basis and node evaluation


def _check_x(x: float) -> None:
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"evaluation point must lie in [0, 1], got x={x}")


def _weight_matrix(spec: OperatorSpec, xs: np.ndarray, original: bool = False) -> np.ndarray:
    """Weights w[k, j] of the requested operator variant at points xs[j].

    Implements the regrouped form from the module docstring: binomial row in
    t = q/p, independent powers x^k, and cumulative left-to-right products
    of the factors (1 - t^s x).  The uncorrected variant multiplies row k by
    its missing normalizer power p^{(n-k)(n+k-1)/2}.
    """
    n = spec.n
    p = spec.params.p
    t = spec.params.ratio
    row = np.array(q_binomial_row(n, t))
    ks = np.arange(n + 1)
    factors = 1.0 - np.outer(t ** np.arange(n), xs) if n else np.empty((0, len(xs)))
    prods = np.ones((n + 1, len(xs)))
    if n:
        np.cumprod(factors, axis=0, out=prods[1:])
    xpow = xs[np.newaxis, :] ** ks[:, np.newaxis]
    weights = row[:, np.newaxis] * xpow * prods[::-1]
    if original:
        weights *= p ** ((n - ks) * (n + ks - 1) // 2).astype(float)[:, np.newaxis]
    return weights


def basis(spec: OperatorSpec, x: float) -> BasisVector:
    """Corrected basis values at x; validates positivity and partition of unity."""
    _check_x(x)
    values = _weight_matrix(spec, np.array([float(x)]))[:, 0]
    return BasisVector(values, float(x))


def _node_values(spec: OperatorSpec) -> np.ndarray:
    # t_k = p^{n-k}[k]/[n] collapses to the one-parameter ratio [k]_t/[n]_t.
    t = spec.params.ratio
    brackets = np.concatenate(([0.0], np.cumsum(t ** np.arange(spec.n))))
    return brackets / brackets[-1]


def nodes(spec: OperatorSpec) -> NodeVector:
    """Sample points of the corrected operator."""
    return NodeVector(_node_values(spec))


def _original_node_values(spec: OperatorSpec) -> np.ndarray:
    # [k]/[n] without the p^{n-k} factor; interior entries may exceed 1.
    bn = pq_integer(spec.n, spec.params)
    return np.array([pq_integer(k, spec.params) / bn for k in range(spec.n + 1)])


# ---------------------------------------------------------------------------
# Operator application


def _apply(spec: OperatorSpec, f: TargetFunction, xs: np.ndarray, original: bool) -> np.ndarray:
    node_vals = _original_node_values(spec) if original else _node_values(spec)
    fvals = np.array([f(t) for t in node_vals.tolist()])
    terms = _weight_matrix(spec, xs, original) * fvals[:, np.newaxis]
    # Compensated summation: partition-of-unity tolerances at n near the cap
    # leave no room for naive accumulation.
    return np.array([math.fsum(col) for col in terms.T.tolist()])


def apply_operator(spec: OperatorSpec, f: TargetFunction, x: float) -> float:
    """B(f; x) for the corrected operator."""
    _check_x(x)
    return float(_apply(spec, f, np.array([float(x)]), original=False)[0])


def apply_operator_original(spec: OperatorSpec, f: TargetFunction, x: float) -> float:
    """The uncorrected operator; B(1; x) != 1 for p < 1 (the defect)."""
    _check_x(x)
    return float(_apply(spec, f, np.array([float(x)]), original=True)[0])


def operator_curve(
    spec: OperatorSpec, f: TargetFunction, xs: Sequence[float], original: bool = False
) -> np.ndarray:
    """Operator values along xs, reusing one node vector and binomial row."""
    xs = np.asarray(xs, dtype=float)
    if xs.size and (xs.min() < 0.0 or xs.max() > 1.0):
        raise ValueError("evaluation points must lie in [0, 1]")
    return _apply(spec, f, xs, original)


# ---------------------------------------------------------------------------
# Moments


def moment_closed_form(spec: OperatorSpec, m: int, x: float) -> float:
    """Closed form of B(t^m; x) for m in {0, 1, 2}.

    m = 0 gives 1, m = 1 gives x, and

        B(t^2; x) = p^{n-1}/[n] * x + q [n-1]/[n] * x^2.
    """
    _check_x(x)
    if m == 0:
        return 1.0
    if m == 1:
        return x
    if m == 2:
        n, params = spec.n, spec.params
        bn = pq_integer(n, params)
        return (params.p ** (n - 1) / bn) * x + (
            params.q * pq_integer(n - 1, params) / bn
        ) * x * x
    raise ValueError(f"moment order must be 0, 1 or 2, got {m}")


def second_moment_identity_check(spec: OperatorSpec) -> float:
    """Residual |q [n-1] - ([n] - p^{n-1})| of the bracket identity that
    turns the second moment into the convergence bound."""
    n, params = spec.n, spec.params
    lhs = params.q * pq_integer(n - 1, params)
    rhs = pq_integer(n, params) - params.p ** (n - 1)
    return abs(lhs - rhs)

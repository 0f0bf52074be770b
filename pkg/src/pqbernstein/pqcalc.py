"""Twin-parameter bracket arithmetic.

For parameters 0 < q < p <= 1 the bracket of a nonnegative integer k is

    [k] = (p^k - q^k) / (p - q) = p^{k-1} + p^{k-2} q + ... + q^{k-1},

with [0] = 0 and [1] = 1.  Factorials and binomial coefficients are built
from it the usual way.  The summation form on the right is what gets
evaluated (exactly summed, no cancellation near p = q); the split
recurrences [k+1] = p[k] + q^k = q[k] + p^k follow from it directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Beyond this degree the power products that appear inside binomials and
# basis terms leave double range even for p close to 1.
MAX_DEGREE = 200


@dataclass(frozen=True)
class PQParams:
    """Validated parameter pair with 0 < q < p <= 1.

    The strict inequality q < p is the regime all identities are stated in.
    ``allow_equal=True`` opts into the analytic p = q limit ([k] becomes
    k p^{k-1}) for exploratory use; experiment drivers reject such pairs.
    """

    p: float
    q: float
    allow_equal: bool = False

    def __post_init__(self) -> None:
        if not (math.isfinite(self.p) and math.isfinite(self.q)):
            raise ValueError("p and q must be finite numbers")
        if not 0.0 < self.q:
            raise ValueError(f"q must be positive, got q={self.q}")
        if not self.p <= 1.0:
            raise ValueError(f"p must satisfy p <= 1, got p={self.p}")
        if self.q > self.p:
            raise ValueError(f"parameters must satisfy q < p, got p={self.p}, q={self.q}")
        if self.q == self.p and not self.allow_equal:
            raise ValueError(
                f"q must be strictly below p (got p=q={self.p}); "
                "pass allow_equal=True for the equal-parameter limit"
            )

    @property
    def ratio(self) -> float:
        """q/p, the single parameter the basis functions actually depend on."""
        return self.q / self.p


def pq_integer(k: int, params: PQParams) -> float:
    """Bracket [k] = (p^k - q^k)/(p - q), evaluated as an exact sum of powers."""
    if k < 0:
        raise ValueError(f"bracket order must be nonnegative, got {k}")
    p, q = params.p, params.q
    return math.fsum(p ** (k - 1 - i) * q**i for i in range(k))


def pq_factorial(n: int, params: PQParams) -> float:
    """[n]! = [1][2]...[n], with the empty product equal to 1."""
    if n < 0:
        raise ValueError(f"factorial order must be nonnegative, got {n}")
    out = 1.0
    for k in range(2, n + 1):
        out *= pq_integer(k, params)
    return out


def pq_binomial(n: int, k: int, params: PQParams) -> float:
    """Bracket binomial [n]!/([k]![n-k]!) by a division-free Pascal recurrence.

    Row m is filled from row m-1 via

        C(m, j) = p^j C(m-1, j) + q^{m-j} C(m-1, j-1),

    with C(m, 0) = C(m, m) = 1.  All terms are positive, so no cancellation
    occurs; near-zero factorial quotients never arise.  Arguments outside
    0 <= k <= n give 0.
    """
    if n < 0:
        raise ValueError(f"binomial order must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0.0
    p, q = params.p, params.q
    row = [1.0]
    for m in range(1, n + 1):
        new = [1.0] * (m + 1)
        for j in range(1, m):
            new[j] = p**j * row[j] + q ** (m - j) * row[j - 1]
        row = new
    return row[k]


def pq_binomial_oracle(n: int, k: int, params: PQParams) -> float:
    """Same coefficient by direct division of factorials (test cross-route)."""
    if k < 0 or k > n:
        return 0.0
    return pq_factorial(n, params) / (
        pq_factorial(k, params) * pq_factorial(n - k, params)
    )


def q_bracket(k: int, t: float) -> float:
    """One-parameter bracket [k]_t = 1 + t + ... + t^{k-1}, exactly summed."""
    if k < 0:
        raise ValueError(f"bracket order must be nonnegative, got {k}")
    return math.fsum(t**i for i in range(k))


def q_binomial_row(n: int, t: float) -> list[float]:
    """Row n of one-parameter bracket binomials, [C(n,0), ..., C(n,n)].

    Uses the additive recurrence C(n, j) = C(n-1, j) + t^{n-j} C(n-1, j-1).
    The twin-parameter binomial factors through this row:

        pq_binomial(n, k) = p^{k(n-k)} * q_binomial_row(n, q/p)[k],

    which is how the operator evaluation stays inside double range for any
    valid (p, q) up to MAX_DEGREE.
    """
    tp = [t**i for i in range(n + 1)]
    row = [1.0]
    for m in range(1, n + 1):
        new = [1.0] * (m + 1)
        for j in range(1, m):
            new[j] = row[j] + tp[m - j] * row[j - 1]
        row = new
    return row

"""Independent reference implementations used only by the test suite.

Everything here is deliberately written against the defining formulas,
with different algorithms than the library uses:

* exact rational arithmetic (``fractions.Fraction``) for the twin-parameter
  brackets, factorials, binomials and both operator variants, evaluating the
  textbook term-by-term expressions literally (explicit normalizer power,
  division of factorials, left-to-right products);
* a plainly coded one-parameter (q-)Bernstein operator for the p=1
  reduction check, using the direct (1-q^k)/(1-q) bracket formula.

The production code must agree with these to tight tolerances; the point is
that no code is shared between the two routes.
"""

from __future__ import annotations

from fractions import Fraction


# ---------------------------------------------------------------------------
# Exact rational route: brackets, factorials, binomials


def bracket_exact(k: int, p: Fraction, q: Fraction) -> Fraction:
    """[k] as an exact rational: (p^k - q^k)/(p - q), with the p == q limit."""
    if k == 0:
        return Fraction(0)
    if p == q:
        return k * p ** (k - 1)
    return (p**k - q**k) / (p - q)


def factorial_exact(n: int, p: Fraction, q: Fraction) -> Fraction:
    out = Fraction(1)
    for k in range(1, n + 1):
        out *= bracket_exact(k, p, q)
    return out


def binomial_exact(n: int, k: int, p: Fraction, q: Fraction) -> Fraction:
    if k < 0 or k > n:
        return Fraction(0)
    return factorial_exact(n, p, q) / (
        factorial_exact(k, p, q) * factorial_exact(n - k, p, q)
    )


# ---------------------------------------------------------------------------
# Exact rational route: basis terms and operators, straight off the formulas


def basis_terms_revised(
    n: int, p: Fraction, q: Fraction, x: Fraction
) -> list[Fraction]:
    """Term k of the corrected operator: the normalizer p^{-n(n-1)/2} times
    binomial * p^{k(k-1)/2} * x^k * prod_{s=0}^{n-k-1}(p^s - q^s x)."""
    normalizer = p ** Fraction(n * (n - 1), 2)
    terms = []
    for k in range(n + 1):
        t = binomial_exact(n, k, p, q) * p ** Fraction(k * (k - 1), 2) * x**k
        for s in range(n - k):
            t *= p**s - q**s * x
        terms.append(t / normalizer)
    return terms


def basis_terms_original(
    n: int, p: Fraction, q: Fraction, x: Fraction
) -> list[Fraction]:
    """Term k of the uncorrected operator: no power normalizer at all."""
    terms = []
    for k in range(n + 1):
        t = binomial_exact(n, k, p, q) * x**k
        for s in range(n - k):
            t *= p**s - q**s * x
        terms.append(t)
    return terms


def nodes_revised(n: int, p: Fraction, q: Fraction) -> list[Fraction]:
    """Sample points [k] / (p^{k-n} [n]) of the corrected operator."""
    bn = bracket_exact(n, p, q)
    return [bracket_exact(k, p, q) * p ** (n - k) / bn for k in range(n + 1)]


def nodes_original(n: int, p: Fraction, q: Fraction) -> list[Fraction]:
    bn = bracket_exact(n, p, q)
    return [bracket_exact(k, p, q) / bn for k in range(n + 1)]


def apply_revised_exact(n, p, q, x, f) -> Fraction:
    """Corrected operator applied to f (f maps Fraction -> Fraction)."""
    terms = basis_terms_revised(n, p, q, x)
    nds = nodes_revised(n, p, q)
    return sum((b * f(t) for b, t in zip(terms, nds)), Fraction(0))


def apply_original_exact(n, p, q, x, f) -> Fraction:
    terms = basis_terms_original(n, p, q, x)
    nds = nodes_original(n, p, q)
    return sum((b * f(t) for b, t in zip(terms, nds)), Fraction(0))


def poly_exact(coeffs):
    """Exact polynomial sum(c_i x^i) as a Fraction-valued callable."""
    cs = [Fraction(c) for c in coeffs]

    def f(x: Fraction) -> Fraction:
        return sum((c * x**i for i, c in enumerate(cs)), Fraction(0))

    return f


# ---------------------------------------------------------------------------
# Independent floating-point q-Bernstein operator (Phillips), for the p = 1
# reduction check.  Plain sums, direct bracket formula, ratio-of-factorial
# binomials: none of the library's machinery.


def q_integer_direct(k: int, q: float) -> float:
    """One-parameter bracket via the closed formula (1 - q^k)/(1 - q)."""
    if k == 0:
        return 0.0
    if q == 1.0:
        return float(k)
    return (1.0 - q**k) / (1.0 - q)


def _q_factorial(n: int, q: float) -> float:
    out = 1.0
    for k in range(1, n + 1):
        out *= q_integer_direct(k, q)
    return out


def q_bernstein(n: int, q: float, f, x: float) -> float:
    """Classical one-parameter Bernstein-type operator on [0, 1]."""
    total = 0.0
    bn = q_integer_direct(n, q)
    for k in range(n + 1):
        coeff = _q_factorial(n, q) / (_q_factorial(k, q) * _q_factorial(n - k, q))
        prod = 1.0
        for s in range(n - k):
            prod *= 1.0 - q**s * x
        node = q_integer_direct(k, q) / bn
        total += coeff * x**k * prod * f(node)
    return total

"""Moment identities: the three test monomials have closed forms.

The operator reproduces constants and the identity exactly; the second
monomial picks up a degree-dependent correction whose coefficients come
from the bracket identity q[n-1] = [n] - p^{n-1}.

Run:  python demos/02_moment_identities.py
"""

from pqbernstein import (
    OperatorSpec,
    PQParams,
    apply_operator,
    builtin_function,
    moment_closed_form,
    pq_integer,
    second_moment_identity_check,
)

spec = OperatorSpec(n=8, params=PQParams(p=0.95, q=0.85))
x = 0.4

for m in (0, 1, 2):
    f = builtin_function(f"monomial_{m}")
    direct = apply_operator(spec, f, x)
    closed = moment_closed_form(spec, m, x)
    print(f"m={m}:  summed={direct:.17f}  closed={closed:.17f}  diff={direct - closed:+.1e}")

residual = second_moment_identity_check(spec)
print(f"\nbracket identity residual: {residual:.3e}  (scale [n] = {pq_integer(spec.n, spec.params):.6f})")

# The second moment's deviation from x^2 is (p^{n-1}/[n]) (x - x^2): largest
# in the middle of the interval, zero at the ends.
n, params = spec.n, spec.params
coeff = params.p ** (n - 1) / pq_integer(n, params)
print(f"\n x     B(t^2;x) - x^2   coeff*(x - x^2)")
for xx in (0.0, 0.25, 0.5, 0.75, 1.0):
    dev = apply_operator(spec, builtin_function("monomial_2"), xx) - xx * xx
    print(f"{xx:4.2f}  {dev:15.10f}  {coeff * (xx - xx * xx):15.10f}")

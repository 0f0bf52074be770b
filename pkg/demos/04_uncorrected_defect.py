"""Why the correction matters: the uncorrected operator loses constants.

Without the p-power normalizer, applying the operator to f = 1 gives
p^{n(n-1)/2} at x = 0 instead of 1.  At p = 1 both variants coincide with
the classical one-parameter operator, so the defect vanishes there.

Run:  python demos/04_uncorrected_defect.py
"""

import numpy as np

from pqbernstein import (
    OperatorSpec,
    PQParams,
    builtin_function,
    operator_curve,
)

one = builtin_function("monomial_0")
xs = np.linspace(0, 1, 101)

print(" n    p     max |B_uncorrected(1;x) - 1|   B_uncorrected(1;0)")
for p in (0.5, 0.7, 0.9, 0.999999999):
    for n in (2, 5, 10):
        spec = OperatorSpec(n, PQParams(p, 0.5 * p))
        curve = operator_curve(spec, one, xs, original=True)
        dev = np.max(np.abs(curve - 1.0))
        print(f"{n:2d}  {p:5.3f}  {dev:28.6e}   {curve[0]:18.12f}")

print("\ncorrected operator on the same inputs:")
for p in (0.5, 0.9):
    spec = OperatorSpec(10, PQParams(p, 0.5 * p))
    curve = operator_curve(spec, one, xs)
    print(f"p={p}: max |B(1;x) - 1| = {np.max(np.abs(curve - 1.0)):.3e}")

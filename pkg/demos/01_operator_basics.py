"""Basics: build an operator, look at its basis, nodes, and interpolation.

Run:  python demos/01_operator_basics.py
"""

import math

import numpy as np

from pqbernstein import OperatorSpec, PQParams, apply_operator, basis, builtin_function, nodes

spec = OperatorSpec(n=5, params=PQParams(p=0.9, q=0.7))
print(f"operator: n={spec.n}, p={spec.params.p}, q={spec.params.q}")

# The basis functions are nonnegative and sum to one at every x.
for x in (0.0, 0.25, 0.5, 0.75, 1.0):
    b = basis(spec, x).values
    print(f"  x={x:4}  basis={np.round(b, 6)}  sum={math.fsum(b.tolist()):.15f}")

# The sample nodes run from 0 to 1, strictly increasing.
print("nodes:", np.round(nodes(spec).values, 6))

# The operator maps a function to a polynomial that interpolates it at the
# endpoints and smooths it inside.
f = builtin_function("abs_centered")
print("\n x      f(x)     B(f;x)")
for x in np.linspace(0, 1, 9):
    print(f"{x:4.2f}  {f(x):8.5f}  {apply_operator(spec, f, float(x)):8.5f}")

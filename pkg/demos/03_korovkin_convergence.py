"""Uniform convergence needs parameter sequences approaching 1.

Along p_n = 1 - 1/(2n), q_n = 1 - 1/n the second-moment error and its bound
2 p^{n-1}/[n] both decay; with constant (p, q) = (0.9, 0.8) the bound tends
to 2(p-q)/p = 0.222... and the error stalls.  By the Korovkin criterion the
first experiment implies uniform convergence for every continuous target.

Run:  python demos/03_korovkin_convergence.py
"""

from pqbernstein import Grid, builtin_function, constant_sequence, korovkin_experiment, param_sequence

grid = Grid.uniform(1001)
ns = [10, 25, 50, 100, 200]


def show(report, title):
    print(title)
    print("   n      p        q       err(t^2)    bound")
    for n, p, q, e0, e1, e2, bound, ef in report.rows:
        print(f"{n:5d}  {p:.5f}  {q:.5f}  {e2:.3e}  {bound:.3e}")
    print("verdicts:", report.verdicts, "\n")


show(
    korovkin_experiment(param_sequence("half_harmonic"), ns, grid,
                        f=builtin_function("cubic_roots")),
    "p_n, q_n -> 1 (half_harmonic):",
)
show(
    korovkin_experiment(constant_sequence(0.9, 0.8), ns, grid,
                        f=builtin_function("cubic_roots")),
    "constant (0.9, 0.8) - negative control:",
)

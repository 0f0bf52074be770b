"""Produce the multi-curve figure files consumed by the plot renderer.

Writes CSV files under demos/out/.  The same files come out of the CLI:

    pqbernstein figure vary_q  --output out/vary_q.csv  --reproducible
    pqbernstein figure vary_n  --output out/vary_n.csv  --reproducible
    pqbernstein figure vary_pq --output out/vary_pq.csv --reproducible

Render them with the plots package (see plots/README.md):

    node plots/dist/cli.js render out/vary_q.csv vary_q.svg

Run:  python demos/05_figure_data.py
"""

import pathlib

from pqbernstein.cli import main

out_dir = pathlib.Path(__file__).parent / "out"
out_dir.mkdir(exist_ok=True)

for figure_id in ("vary_q", "vary_n", "vary_pq"):
    target = out_dir / f"{figure_id}.csv"
    code = main(
        ["figure", figure_id, "--grid", "201", "--output", str(target), "--reproducible"]
    )
    print(f"{figure_id}: exit {code}, wrote {target}")

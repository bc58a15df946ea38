"""Small batch run: one CSV row per instance, with the conjecture margin."""

import sys

from urmatch.experiment import build_corpus, run_experiment, write_csv

corpus = build_corpus({"instances": [
    {"family": "named", "ids": ["FIG1", "K33", "C7", "PETERSEN"]},
    {"family": "exhaustive", "n_max": 4},
    {"family": "random-bridged", "n_min": 20, "n_max": 30, "count": 4, "seed": 1},
]})
rows = run_experiment(corpus, jobs=2)
write_csv(rows, sys.stdout)
print(f"{len(rows)} rows, {sum(r.falsified for r in rows)} falsified", file=sys.stderr)

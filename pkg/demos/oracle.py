"""Exact nu, nu_ur and nu_ac by branch and bound, against brute-force enumeration."""

from urmatch.forge import named
from urmatch.oracle import nu_ac_exact, nu_exact, nu_ur_exact, parameters_by_enumeration

for name in ("C7", "K33", "PETERSEN", "FIG1"):
    g = named(name)
    ur = nu_ur_exact(g)
    line = (f"{name:9s} n={g.n:2d} m={g.m:2d}  nu={nu_exact(g).optimum}  "
            f"nu_ur={ur.optimum}  nu_ac={nu_ac_exact(g).optimum}  nodes={ur.explored}")
    if g.m <= 15:
        line += f"  enumeration={parameters_by_enumeration(g)}"
    print(line)
print("witness for FIG1:", nu_ur_exact(named("FIG1")).witness.sorted_edges())

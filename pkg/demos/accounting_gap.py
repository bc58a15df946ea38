"""A graph on which the canonical reduction step misses its accounting.

The default engine audits each candidate step, records the failures and
moves on to the next candidate.  Strict mode stops at the first failure.
"""

from urmatch import certify_theorem1
from urmatch.errors import ProofFalsificationError
from urmatch.forge import accounting_gap_example

g = accounting_gap_example()
cert = certify_theorem1(g)
print(f"n={g.n} m={g.m} good bridges={cert.b_good}: |M|={cert.achieved} >= {cert.target}")
for note in cert.exceptions:
    print("  rejected:", note)
try:
    certify_theorem1(g, strict=True)
except ProofFalsificationError as exc:
    print("strict mode:", exc)

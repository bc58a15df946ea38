"""Certificate for 3|M| >= n - 1 on graphs of girth at least 7."""

from urmatch import certify_theorem2
from urmatch.forge import named, random_subcubic_girth

mcgee = named("MCGEE")
cert = certify_theorem2(mcgee)
print(f"McGee graph: n={cert.n} girth={cert.girth} |M|={cert.achieved} target={cert.target}")
for step in cert.trace[:6]:
    print("  ", step.to_line())
print(f"   ... {len(cert.trace)} steps")

for seed in range(5):
    g = random_subcubic_girth(50, 7, seed)
    c = certify_theorem2(g)
    print(f"random n=50 m={g.m} girth={c.girth}: |M|={c.achieved} (need {c.target})")

# below girth 7 the bound is not guaranteed; exploratory mode reports what breaks
for name in ("HEAWOOD", "K23"):
    g = named(name)
    c = certify_theorem2(g, require_girth=False)
    print(f"{name} (girth {c.girth}) exploratory: |M|={c.achieved} target={c.target}")
    for note in c.anomalies:
        print("   anomaly:", note)

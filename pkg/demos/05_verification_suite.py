# # Running the checks behind the claims
#
# The verify module turns each statement about regular polygons into a
# numerical check: bound directions, monotonicity, identities and the order
# of convergence. The same suites are exposed as ``isoperimetry verify``.

# %%
from isoperimetry.verify import identity_audit, run_suite, sweep

# %%
for r in run_suite("all"):
    print(f"{'ok ' if r.passed else 'BAD'} {r.suite:11s} {r.check:38s} {r.observed}")

# %%
for c in identity_audit(p=1000.0):
    print(c.name, c.max_rel_deviation)

# %%
# A sweep returns one row per n with every metric and area column.
rows = sweep(4, 4096, ratio=2, p=1.0)
for r in rows:
    rec = r.record()
    print(rec["n"], rec["polygon_area"], rec["wasted_exact"], rec["smoothness"])

# # Efficiency indices of regular polygons
#
# Sixteen dimensionless scores compare an n-gon with its limiting circle.
# Several are the same formula under different names, a few carry
# corrections to their stated limits, and two depend on a boundary slope m.

# %%
from isoperimetry.metrics import ALIAS_GROUPS, REGISTRY, MetricId, evaluate_all


def table(n, p=1.0, m=0.0):
    return {mv.id: mv.value for mv in evaluate_all(n, p, m)}

# %%
values = table(4, 4.0)
for mid, v in values.items():
    d = REGISTRY[mid]
    flag = "" if d.erratum_note is None else "  (corrected)"
    print(f"{mid.value:24s} {v:.10f}  limit {d.limit_at_infinity}{flag}")

# %%
# Alias groups evaluate to identical floats.
for group in ALIAS_GROUPS:
    print([m.value for m in group], {values[m] for m in group})

# %%
# The slope-dependent pair drops from 1 towards 0 as the sides tilt.
for m in (0.0, 0.5, 1.0, 10.0, 1e6):
    print(m, table(4, 4.0, m)[MetricId.PERIMETER_SLOPE])

# %%
# Convergence of a few indices towards their limits.
for n in (3, 10, 100, 10**4, 10**8):
    v = table(n)
    print(n, v[MetricId.SMOOTHNESS], v[MetricId.ISO_SLOPE], v[MetricId.SIDE_APOTHEM])

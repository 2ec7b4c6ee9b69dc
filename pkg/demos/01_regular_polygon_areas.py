# # Regular polygons at a fixed perimeter
#
# Fix the perimeter p and let the number of sides grow. Side, apothem and
# circumradius all follow from n and p, and the area can be written two ways:
# half the apothem times the perimeter, or n central triangles.

# %%
import math

import numpy as np

from isoperimetry import RegularPolygonSpec, area_apothem, area_circumradius, derive, vertices
from isoperimetry.regular_geometry import shoelace

# %%
# A unit square: side 1, apothem 1/2, circumradius sqrt(2)/2.
spec = RegularPolygonSpec(4, 4.0)
print(derive(spec))

# %%
# Both area formulas agree, and the shoelace formula on explicit vertices
# gives a third, independent answer.
print(f"{'n':>8} {'apothem form':>22} {'circumradius form':>22} {'shoelace':>22}")
for n in (3, 4, 6, 12, 100, 1000):
    print(f"{n:8d} {area_apothem(n, 1.0):22.17g} {area_circumradius(n, 1.0):22.17g} "
          f"{shoelace(vertices(n, 1.0, rotation=0.4)):22.17g}")

# %%
# The areas climb towards the circle of the same perimeter, p**2 / (4 pi).
ns = np.unique(np.geomspace(3, 10**6, 12).round().astype(int))
areas = np.array([area_apothem(int(n), 1.0) for n in ns])
print("circle:", 1 / (4 * math.pi))
for n, a in zip(ns, areas):
    print(f"{n:8d} {a:.17g}")
assert np.all(np.diff(areas) > 0)

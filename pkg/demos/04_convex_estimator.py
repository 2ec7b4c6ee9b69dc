# # Estimating the area of a convex polygon from its apothems
#
# For a regular polygon, area = (average apothem) x (perimeter) / 2. For an
# irregular convex polygon we measure the distance from the centroid to each
# side. A plain average gets the area wrong; weighting by side length makes
# the estimate exact, because each side contributes a triangle.

# %%
import numpy as np

from isoperimetry import ConvexPolygon, estimate, vertices

# %%
# Regular hexagon: both estimates match the true area.
print(estimate(ConvexPolygon(vertices(6, 6.0))))

# %%
# Rectangles k x 1: the unweighted error grows like (k - 1)**2 / (4 k).
for k in (1, 2, 4, 10):
    rep = estimate(ConvexPolygon([(0, 0), (k, 0), (k, 1), (0, 1)]))
    print(k, rep.relative_error_unweighted, (k - 1) ** 2 / (4 * k))

# %%
# A random convex polygon: points on an ellipse at sorted angles.
rng = np.random.default_rng(7)
t = np.sort(rng.uniform(0, 2 * np.pi, 9))
poly = ConvexPolygon(np.column_stack((3 * np.cos(t), np.sin(t))))
rep = estimate(poly)
print(rep.exact_area, rep.estimate_weighted, rep.estimate_unweighted)

# %%
# Non-convex input is rejected with the offending vertex.
try:
    ConvexPolygon([(0, 0), (2, 0), (1, 0.2), (2, 2), (0, 2)])
except ValueError as exc:
    print(exc)

"""Random strictly convex polygons for property tests."""

import numpy as np


def random_convex_polygon(rng, k=None):
    """Points on a random ellipse at sorted random angles, rigidly moved.

    Affine images of a circle keep every vertex strictly convex.
    """
    if k is None:
        k = int(rng.integers(3, 40))
    while True:
        t = np.sort(rng.uniform(0.0, 2 * np.pi, k))
        gaps = np.diff(np.concatenate([t, [t[0] + 2 * np.pi]]))
        if gaps.min() > 1e-3 and gaps.max() < np.pi:
            break
    a, b = rng.uniform(0.1, 10.0, 2)
    pts = np.column_stack((a * np.cos(t), b * np.sin(t)))
    phi = rng.uniform(0, 2 * np.pi)
    rot = np.array([[np.cos(phi), -np.sin(phi)], [np.sin(phi), np.cos(phi)]])
    return pts @ rot.T + rng.uniform(-50, 50, 2)

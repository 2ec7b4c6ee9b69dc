# # How much area a regular polygon wastes
#
# The wasted area W_n is what the circle of perimeter p has and the regular
# n-gon lacks. It shrinks like pi p**2 / (12 n**2). A closed-form bound
# pi p**2 / (4 (3 n**2 + pi**2)) is often quoted as an upper bound; here we
# check which side of W_n it actually sits on.

# %%
import math

from isoperimetry import wasted_area, wasted_area_asymptotic, wasted_area_bound
from isoperimetry.verify import classify_bound, fit_convergence_order, geometric_grid

# %%
print(f"{'n':>8} {'exact':>24} {'leading term':>24} {'bound':>24}")
for n in (3, 4, 10, 100, 10**4, 10**6):
    print(f"{n:8d} {wasted_area(n, 1.0):24.17g} {wasted_area_asymptotic(n, 1.0):24.17g} "
          f"{wasted_area_bound(n, 1.0)[0]:24.17g}")

# %%
# The naive difference p**2/(4 pi) - A_n loses every digit near n = 10**7.
# The library evaluates (tan x - x) by series instead.
n = 10**7
naive = 1 / (4 * math.pi) - 1 / (4 * n * math.tan(math.pi / n))
print("naive:", naive, " stable:", wasted_area(n, 1.0))

# %%
# Order of convergence from a log-log fit over [64, 4096].
fit = fit_convergence_order([(n, wasted_area(n, 1.0)) for n in geometric_grid(64, 4096, 50)])
print(f"slope {fit.slope:.6f}, r^2 {fit.r_squared:.9f}, amplitude {math.exp(fit.intercept):.6f} "
      f"vs pi/12 = {math.pi / 12:.6f}")

# %%
# Against the claim that the bound lies above W_n:
W = lambda n: wasted_area(n, 1.0)
B = lambda n: wasted_area_bound(n, 1.0)[0]
print(classify_bound(W, B, (3, 10**6), "upper"))
print(classify_bound(W, B, (3, 10**6), "lower"))

"""Boundary Hausdorff distance with a certificate, and symmetric-difference area."""

from cheegerpoly import hausdorff_boundary, make_polygon, random_convex_ngon, symmetric_difference_area, tentacle_polygon

square = make_polygon([(0, 0), (1, 0), (1, 1), (0, 1)])
shifted = square.translated((0.1, 0))
d = hausdorff_boundary(square, shifted, 1e-9)
print(f"square vs shifted by 0.1: hd = {d.estimate:.12f} (+ at most {d.error_bound:.1e})")
print(f"                          L1 = {symmetric_difference_area(square, shifted):.12f}")

# The tolerance controls how tight the certificate is, not how long you wait for luck.
a, b = random_convex_ngon(6, 1), random_convex_ngon(8, 2)
for tol in (1e-2, 1e-5, 1e-9):
    d = hausdorff_boundary(a, b, tol)
    print(f"tol {tol:.0e}: {d.estimate:.12f} in [{d.estimate:.12f}, {d.estimate + d.error_bound:.12f}]")

# Nonconvex shapes work too: the tentacle reaches far outside the square.
t = tentacle_polygon(10)
print(f"\ntentacle k=10 vs square: hd = {hausdorff_boundary(t, square).estimate:.6f}, "
      f"L1 = {symmetric_difference_area(t, square):.6f}")

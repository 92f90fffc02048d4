"""Random convex polygons against the inequalities of the theory.

Each row is one ensemble of random unit-area N-gons; all violation counts
should be zero.  Distances (and hence the empirical stability constants) are
computed only for the small ensembles because alignment is comparatively slow.
"""

from cheegerpoly import verify_ensemble

for n in range(3, 9):
    rep = verify_ensemble(n, 2000, seed=1, distances=False)
    print(f"N={n}: deficit in [{rep.deficit_min:.2e}, {rep.deficit_max:.3f}], "
          f"{rep.regular_count} regular, violations {sum(rep.violations.values())}")

rep = verify_ensemble(6, 30, seed=1)
print(f"\nN=6 with distances: C_hd {rep.c_emp_hd:.4f}, C_L1 {rep.c_emp_l1:.4f}, C_iso {rep.c_emp_iso:.4f}")

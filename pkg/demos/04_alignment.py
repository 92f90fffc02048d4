"""Rigid alignment: the best rotation, translation and possible reflection.

A polygon and a moved copy of it should align to distance ~0; a perturbed
hexagon aligns to something smaller than its raw distance.
"""

from cheegerpoly import RigidMotion, align, apply_motion, hausdorff_boundary, perturb_ngon, random_convex_ngon, regular_ngon

p = random_convex_ngon(6, 7)
moved = apply_motion(p, RigidMotion(2.1, (3.0, -1.5), True))
res = align(moved, p, "hausdorff")
print(f"recovered: angle {res.motion.angle:.6f}, reflect {res.motion.reflect}, distance {res.distance:.2e}")

hexagon = regular_ngon(6)
for eps in (0.08, 0.02):
    q = perturb_ngon(6, eps)
    raw = hausdorff_boundary(q, hexagon).estimate
    hd = align(q, hexagon, "hausdorff").distance
    l1 = align(q, hexagon, "l1").distance
    print(f"eps {eps}: raw hd {raw:.6f}, aligned hd {hd:.6f}, aligned L1 {l1:.6f}")

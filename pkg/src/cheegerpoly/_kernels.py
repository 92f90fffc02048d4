"""Compiled inner loops.

Everything here works on plain float64 arrays so it can be jitted; the public
modules wrap these with validation and domain types.
"""

import numpy as np
from numba import njit

_STACK = 512


@njit(cache=True)
def _clip(xs, ys, n, a, b, c, ox, oy):
    # Sutherland-Hodgman against a*x + b*y <= c; returns the new vertex count.
    m = 0
    for i in range(n):
        j = i + 1
        if j == n:
            j = 0
        si = a * xs[i] + b * ys[i] - c
        sj = a * xs[j] + b * ys[j] - c
        if si <= 0.0:
            ox[m] = xs[i]
            oy[m] = ys[i]
            m += 1
        if (si < 0.0 and sj > 0.0) or (si > 0.0 and sj < 0.0):
            t = si / (si - sj)
            ox[m] = xs[i] + t * (xs[j] - xs[i])
            oy[m] = ys[i] + t * (ys[j] - ys[i])
            m += 1
    return m


@njit(cache=True)
def _shoelace(xs, ys, n):
    if n < 3:
        return 0.0
    x0 = xs[0]
    y0 = ys[0]
    s = 0.0
    for i in range(1, n - 1):
        s += (xs[i] - x0) * (ys[i + 1] - y0) - (xs[i + 1] - x0) * (ys[i] - y0)
    return 0.5 * s


@njit(cache=True)
def offset_polygon(verts, nx, ny, c, r):
    """Vertices of the intersection of ``nx*x + ny*y <= c - r`` with the polygon."""
    n = verts.shape[0]
    cap = 2 * n + 8
    ax = np.empty(cap)
    ay = np.empty(cap)
    bx = np.empty(cap)
    by = np.empty(cap)
    for i in range(n):
        ax[i] = verts[i, 0]
        ay[i] = verts[i, 1]
    m = n
    for k in range(n):
        m = _clip(ax, ay, m, nx[k], ny[k], c[k] - r, bx, by)
        ax, bx = bx, ax
        ay, by = by, ay
        if m == 0:
            break
    out = np.empty((m, 2))
    for i in range(m):
        out[i, 0] = ax[i]
        out[i, 1] = ay[i]
    return out


@njit(cache=True)
def offset_area(verts, nx, ny, c, r):
    n = verts.shape[0]
    cap = 2 * n + 8
    ax = np.empty(cap)
    ay = np.empty(cap)
    bx = np.empty(cap)
    by = np.empty(cap)
    for i in range(n):
        ax[i] = verts[i, 0]
        ay[i] = verts[i, 1]
    m = n
    for k in range(n):
        m = _clip(ax, ay, m, nx[k], ny[k], c[k] - r, bx, by)
        ax, bx = bx, ax
        ay, by = by, ay
        if m == 0:
            return 0.0
    return max(_shoelace(ax, ay, m), 0.0)


@njit(cache=True)
def _convex_pair_area(sx, sy, ns, cx, cy, nc, bufs):
    # |subject ∩ clip|, clip counterclockwise and convex; subject any orientation.
    ax, ay, bx, by = bufs
    for i in range(ns):
        ax[i] = sx[i]
        ay[i] = sy[i]
    m = ns
    for k in range(nc):
        l = k + 1
        if l == nc:
            l = 0
        dx = cx[l] - cx[k]
        dy = cy[l] - cy[k]
        m = _clip(ax, ay, m, dy, -dx, dy * cx[k] - dx * cy[k], bx, by)
        ax, bx = bx, ax
        ay, by = by, ay
        if m == 0:
            return 0.0
    return abs(_shoelace(ax, ay, m))


@njit(cache=True)
def pieces_intersection_area(a, a_off, b, b_off):
    """Sum of pairwise intersection areas of two convex decompositions.

    ``a[a_off[i]:a_off[i+1]]`` is piece i of the first set; pieces of ``b`` must
    be counterclockwise.
    """
    cap = 2 * (a.shape[0] + b.shape[0]) + 8
    bufs = (np.empty(cap), np.empty(cap), np.empty(cap), np.empty(cap))
    total = 0.0
    for i in range(a_off.shape[0] - 1):
        s0 = a_off[i]
        s1 = a_off[i + 1]
        sx = a[s0:s1, 0]
        sy = a[s0:s1, 1]
        for j in range(b_off.shape[0] - 1):
            c0 = b_off[j]
            c1 = b_off[j + 1]
            total += _convex_pair_area(sx, sy, s1 - s0, b[c0:c1, 0], b[c0:c1, 1], c1 - c0, bufs)
    return total


@njit(cache=True)
def _seg_dist(px, py, ax, ay, bx, by):
    dx = bx - ax
    dy = by - ay
    l2 = dx * dx + dy * dy
    t = 0.0
    if l2 > 0.0:
        t = ((px - ax) * dx + (py - ay) * dy) / l2
        if t < 0.0:
            t = 0.0
        elif t > 1.0:
            t = 1.0
    ex = ax + t * dx - px
    ey = ay + t * dy - py
    return np.sqrt(ex * ex + ey * ey)


@njit(cache=True)
def _dist_to_polyline(px, py, b):
    m = b.shape[0]
    best = np.inf
    for j in range(m):
        k = j + 1
        if k == m:
            k = 0
        d = _seg_dist(px, py, b[j, 0], b[j, 1], b[k, 0], b[k, 1])
        if d < best:
            best = d
    return best


@njit(cache=True)
def directed_hausdorff(a, b, tol):
    """Certified bounds (lo, hi) on sup over the closed curve ``a`` of dist(x, curve b).

    Branch and bound over sub-segments of ``a``.  On a sub-segment the distance
    to each single edge of ``b`` is convex, so ``min_j max(d_j(x0), d_j(x1))``
    bounds it from above; the 1-Lipschitz bound ``(f0 + f1 + L)/2`` is used too.
    """
    n = a.shape[0]
    m = b.shape[0]
    lo = 0.0
    for i in range(n):
        d = _dist_to_polyline(a[i, 0], a[i, 1], b)
        if d > lo:
            lo = d
    hi_pruned = 0.0
    st = np.empty((_STACK, 4))
    for i in range(n):
        k = i + 1
        if k == n:
            k = 0
        top = 0
        st[0, 0] = a[i, 0]
        st[0, 1] = a[i, 1]
        st[0, 2] = a[k, 0]
        st[0, 3] = a[k, 1]
        top = 1
        while top > 0:
            top -= 1
            x0 = st[top, 0]
            y0 = st[top, 1]
            x1 = st[top, 2]
            y1 = st[top, 3]
            f0 = np.inf
            f1 = np.inf
            ub_cvx = np.inf
            for j in range(m):
                l = j + 1
                if l == m:
                    l = 0
                d0 = _seg_dist(x0, y0, b[j, 0], b[j, 1], b[l, 0], b[l, 1])
                d1 = _seg_dist(x1, y1, b[j, 0], b[j, 1], b[l, 0], b[l, 1])
                if d0 < f0:
                    f0 = d0
                if d1 < f1:
                    f1 = d1
                mx = d0 if d0 > d1 else d1
                if mx < ub_cvx:
                    ub_cvx = mx
            if f0 > lo:
                lo = f0
            if f1 > lo:
                lo = f1
            length = np.sqrt((x1 - x0) ** 2 + (y1 - y0) ** 2)
            ub = 0.5 * (f0 + f1 + length)
            if ub_cvx < ub:
                ub = ub_cvx
            if ub <= lo + tol or top + 2 > _STACK:
                if ub > hi_pruned:
                    hi_pruned = ub
                continue
            xm = 0.5 * (x0 + x1)
            ym = 0.5 * (y0 + y1)
            st[top, 0] = xm
            st[top, 1] = ym
            st[top, 2] = x1
            st[top, 3] = y1
            st[top + 1, 0] = x0
            st[top + 1, 1] = y0
            st[top + 1, 2] = xm
            st[top + 1, 3] = ym
            top += 2
    if hi_pruned < lo:
        hi_pruned = lo
    return lo, hi_pruned


@njit(cache=True)
def hausdorff_pair(a, b, tol):
    lo1, hi1 = directed_hausdorff(a, b, tol)
    lo2, hi2 = directed_hausdorff(b, a, tol)
    return max(lo1, lo2), max(hi1, hi2)


@njit(cache=True)
def rigid_transform(base, angle, reflect, ox, oy):
    c = np.cos(angle)
    s = np.sin(angle)
    out = np.empty_like(base)
    for i in range(base.shape[0]):
        x = base[i, 0]
        y = -base[i, 1] if reflect else base[i, 1]
        out[i, 0] = c * x - s * y + ox
        out[i, 1] = s * x + c * y + oy
    return out

"""Pure-Python enclosing-circle kernels.

Mirrors ``_ckernels.pyx`` operation for operation so both backends return
bit-identical floats. Inputs are plain sequences of floats; circles come
back as ``(cx, cy, r)`` tuples with support indices into the input.
"""

from math import sqrt

from .geom import circumcenter_xy


def _inside(cx, cy, r, x, y, eps):
    dx = x - cx
    dy = y - cy
    return sqrt(dx * dx + dy * dy) <= r + eps


def _two(x1, y1, x2, y2):
    dx = x1 - x2
    dy = y1 - y2
    return (x1 + x2) / 2.0, (y1 + y2) / 2.0, sqrt(dx * dx + dy * dy) / 2.0


def _three(x1, y1, x2, y2, x3, y3, eps_deg):
    c = circumcenter_xy(x1, y1, x2, y2, x3, y3, eps_deg)
    if c is None:
        return None
    dx = c[0] - x1
    dy = c[1] - y1
    return c[0], c[1], sqrt(dx * dx + dy * dy)


def _dist2(x1, y1, x2, y2):
    dx = x1 - x2
    dy = y1 - y2
    return dx * dx + dy * dy


def welzl(xs, ys, order, eps, eps_deg):
    """Iterative incremental minidisk, visiting points in ``order``.

    Returns ``(cx, cy, r, support)``; ``support`` holds original indices.
    """
    n = len(order)
    px = [xs[i] for i in order]
    py = [ys[i] for i in order]
    cx, cy, r = px[0], py[0], 0.0
    sup = (0,)
    for i in range(1, n):
        if _inside(cx, cy, r, px[i], py[i], eps):
            continue
        cx, cy, r = px[i], py[i], 0.0
        sup = (i,)
        for j in range(i):
            if _inside(cx, cy, r, px[j], py[j], eps):
                continue
            cx, cy, r = _two(px[i], py[i], px[j], py[j])
            sup = (i, j)
            for k in range(j):
                if _inside(cx, cy, r, px[k], py[k], eps):
                    continue
                c3 = _three(px[i], py[i], px[j], py[j], px[k], py[k], eps_deg)
                if c3 is not None:
                    cx, cy, r = c3
                    sup = (i, j, k)
                    continue
                # collinear: the outermost pair of the three spans the others
                dij = _dist2(px[i], py[i], px[j], py[j])
                dik = _dist2(px[i], py[i], px[k], py[k])
                djk = _dist2(px[j], py[j], px[k], py[k])
                if dij >= dik and dij >= djk:
                    a, b = i, j
                elif dik >= djk:
                    a, b = i, k
                else:
                    a, b = j, k
                cx, cy, r = _two(px[a], py[a], px[b], py[b])
                sup = (a, b)
    return cx, cy, r, tuple(order[s] for s in sup)


def _covers(xs, ys, n, cx, cy, r, eps):
    for t in range(n):
        if not _inside(cx, cy, r, xs[t], ys[t], eps):
            return False
    return True


def _better(r, cx, cy, br, bcx, bcy):
    if r < br:
        return True
    if r == br:
        return cx < bcx or (cx == bcx and cy < bcy)
    return False


def bruteforce(xs, ys, eps, eps_deg):
    """Smallest covering circle over all pair and non-collinear triple circles.

    Equal radii resolve to the lexicographically smaller center. Returns
    ``None`` when no candidate covers the input.
    """
    n = len(xs)
    best = None
    br = bcx = bcy = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            cx, cy, r = _two(xs[i], ys[i], xs[j], ys[j])
            if best is not None and not _better(r, cx, cy, br, bcx, bcy):
                continue
            if _covers(xs, ys, n, cx, cy, r, eps):
                best = (i, j)
                bcx, bcy, br = cx, cy, r
    for i in range(n):
        for j in range(i + 1, n):
            for h in range(j + 1, n):
                c3 = _three(xs[i], ys[i], xs[j], ys[j], xs[h], ys[h], eps_deg)
                if c3 is None:
                    continue
                cx, cy, r = c3
                if best is not None and not _better(r, cx, cy, br, bcx, bcy):
                    continue
                if _covers(xs, ys, n, cx, cy, r, eps):
                    best = (i, j, h)
                    bcx, bcy, br = cx, cy, r
    if best is None:
        return None
    return bcx, bcy, br, best


def best_circumcircle(xs, ys, members, k, eps, eps_deg):
    """Smallest circle through point ``k`` and two of ``members`` covering all.

    Pairs are visited in ``members`` order; the first strictly smallest wins.
    Returns ``(cx, cy, r, a, b)`` or ``None`` if no candidate qualifies.
    """
    m = len(members)
    xk = xs[k]
    yk = ys[k]
    best = None
    br = 0.0
    for s in range(m):
        a = members[s]
        for t in range(s + 1, m):
            b = members[t]
            c3 = _three(xs[a], ys[a], xs[b], ys[b], xk, yk, eps_deg)
            if c3 is None:
                continue
            cx, cy, r = c3
            if best is not None and r >= br:
                continue
            if not _inside(cx, cy, r, xk, yk, eps):
                continue
            ok = True
            for u in range(m):
                q = members[u]
                if not _inside(cx, cy, r, xs[q], ys[q], eps):
                    ok = False
                    break
            if ok:
                best = (cx, cy, r, a, b)
                br = r
    return best

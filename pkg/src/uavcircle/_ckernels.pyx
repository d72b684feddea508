# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enclosing-circle kernels.

Same signatures and arithmetic as ``_pykernels``; build without fast-math or
FP contraction so results stay bit-identical to the Python fallback.
"""

from libc.math cimport sqrt, fabs
from libc.stdlib cimport malloc, free

cdef double DEGENERATE_REL = 1e-12
cdef double MIN_SCALE = 1e-30


cdef inline bint _inside(double cx, double cy, double r,
                         double x, double y, double eps) noexcept nogil:
    cdef double dx = x - cx
    cdef double dy = y - cy
    return sqrt(dx * dx + dy * dy) <= r + eps


cdef inline void _two(double x1, double y1, double x2, double y2,
                      double* out) noexcept nogil:
    cdef double dx = x1 - x2
    cdef double dy = y1 - y2
    out[0] = (x1 + x2) / 2.0
    out[1] = (y1 + y2) / 2.0
    out[2] = sqrt(dx * dx + dy * dy) / 2.0


cdef inline double _threshold(double eps_deg, double x1, double y1, double x2,
                              double y2, double x3, double y3) noexcept nogil:
    if eps_deg > 0:
        return eps_deg
    cdef double s = MIN_SCALE
    if fabs(x1) > s: s = fabs(x1)
    if fabs(y1) > s: s = fabs(y1)
    if fabs(x2) > s: s = fabs(x2)
    if fabs(y2) > s: s = fabs(y2)
    if fabs(x3) > s: s = fabs(x3)
    if fabs(y3) > s: s = fabs(y3)
    return DEGENERATE_REL * s * s


cdef inline bint _three(double xi, double yi, double xj, double yj,
                        double xh, double yh, double eps_deg,
                        double* out) noexcept nogil:
    cdef double a = xi - xj
    cdef double b = yi - yj
    cdef double c = xi - xh
    cdef double d = yi - yh
    cdef double e = ((xi * xi - xj * xj) - (yj * yj - yi * yi)) / 2.0
    cdef double f = ((xi * xi - xh * xh) - (yh * yh - yi * yi)) / 2.0
    cdef double det = a * d - b * c
    if fabs(det) <= _threshold(eps_deg, xi, yi, xj, yj, xh, yh):
        return False
    cdef double x0 = (d * e - b * f) / det
    cdef double y0 = (a * f - c * e) / det
    cdef double dx = x0 - xi
    cdef double dy = y0 - yi
    out[0] = x0
    out[1] = y0
    out[2] = sqrt(dx * dx + dy * dy)
    return True


cdef inline double _dist2(double x1, double y1, double x2, double y2) noexcept nogil:
    cdef double dx = x1 - x2
    cdef double dy = y1 - y2
    return dx * dx + dy * dy


cdef double* _to_c(seq, Py_ssize_t n) except NULL:
    cdef double* buf = <double*> malloc((n if n > 0 else 1) * sizeof(double))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t t
    for t in range(n):
        buf[t] = seq[t]
    return buf


def welzl(xs, ys, order, double eps, double eps_deg):
    cdef Py_ssize_t n = len(order)
    cdef double* px = <double*> malloc(n * sizeof(double))
    cdef double* py = <double*> malloc(n * sizeof(double))
    if px == NULL or py == NULL:
        free(px); free(py)
        raise MemoryError()
    cdef Py_ssize_t t
    for t in range(n):
        px[t] = xs[order[t]]
        py[t] = ys[order[t]]
    cdef double c[3]
    cdef double c3[3]
    cdef Py_ssize_t i, j, k, a, b
    cdef int ns = 1
    cdef Py_ssize_t s0 = 0, s1 = 0, s2 = 0
    cdef double dij, dik, djk
    c[0] = px[0]; c[1] = py[0]; c[2] = 0.0
    with nogil:
        for i in range(1, n):
            if _inside(c[0], c[1], c[2], px[i], py[i], eps):
                continue
            c[0] = px[i]; c[1] = py[i]; c[2] = 0.0
            ns = 1; s0 = i
            for j in range(i):
                if _inside(c[0], c[1], c[2], px[j], py[j], eps):
                    continue
                _two(px[i], py[i], px[j], py[j], c)
                ns = 2; s0 = i; s1 = j
                for k in range(j):
                    if _inside(c[0], c[1], c[2], px[k], py[k], eps):
                        continue
                    if _three(px[i], py[i], px[j], py[j], px[k], py[k], eps_deg, c3):
                        c[0] = c3[0]; c[1] = c3[1]; c[2] = c3[2]
                        ns = 3; s0 = i; s1 = j; s2 = k
                        continue
                    dij = _dist2(px[i], py[i], px[j], py[j])
                    dik = _dist2(px[i], py[i], px[k], py[k])
                    djk = _dist2(px[j], py[j], px[k], py[k])
                    if dij >= dik and dij >= djk:
                        a = i; b = j
                    elif dik >= djk:
                        a = i; b = k
                    else:
                        a = j; b = k
                    _two(px[a], py[a], px[b], py[b], c)
                    ns = 2; s0 = a; s1 = b
    free(px)
    free(py)
    if ns == 1:
        sup = (order[s0],)
    elif ns == 2:
        sup = (order[s0], order[s1])
    else:
        sup = (order[s0], order[s1], order[s2])
    return c[0], c[1], c[2], sup


cdef inline bint _better(double r, double cx, double cy,
                         double br, double bcx, double bcy) noexcept nogil:
    if r < br:
        return True
    if r == br:
        return cx < bcx or (cx == bcx and cy < bcy)
    return False


cdef inline bint _covers(double* x, double* y, Py_ssize_t n, double cx,
                         double cy, double r, double eps) noexcept nogil:
    cdef Py_ssize_t t
    for t in range(n):
        if not _inside(cx, cy, r, x[t], y[t], eps):
            return False
    return True


def bruteforce(xs, ys, double eps, double eps_deg):
    cdef Py_ssize_t n = len(xs)
    cdef double* x = _to_c(xs, n)
    cdef double* y
    try:
        y = _to_c(ys, n)
    except MemoryError:
        free(x)
        raise
    cdef double c[3]
    cdef double bcx = 0.0, bcy = 0.0, br = 0.0
    cdef int found = 0
    cdef Py_ssize_t i, j, h
    cdef Py_ssize_t b0 = 0, b1 = 0, b2 = 0
    with nogil:
        for i in range(n):
            for j in range(i + 1, n):
                _two(x[i], y[i], x[j], y[j], c)
                if found and not _better(c[2], c[0], c[1], br, bcx, bcy):
                    continue
                if _covers(x, y, n, c[0], c[1], c[2], eps):
                    found = 2; b0 = i; b1 = j
                    bcx = c[0]; bcy = c[1]; br = c[2]
        for i in range(n):
            for j in range(i + 1, n):
                for h in range(j + 1, n):
                    if not _three(x[i], y[i], x[j], y[j], x[h], y[h], eps_deg, c):
                        continue
                    if found and not _better(c[2], c[0], c[1], br, bcx, bcy):
                        continue
                    if _covers(x, y, n, c[0], c[1], c[2], eps):
                        found = 3; b0 = i; b1 = j; b2 = h
                        bcx = c[0]; bcy = c[1]; br = c[2]
    free(x)
    free(y)
    if not found:
        return None
    if found == 2:
        return bcx, bcy, br, (b0, b1)
    return bcx, bcy, br, (b0, b1, b2)


def best_circumcircle(xs, ys, members, Py_ssize_t k, double eps, double eps_deg):
    cdef Py_ssize_t n = len(xs)
    cdef Py_ssize_t m = len(members)
    cdef double* x = _to_c(xs, n)
    cdef double* y
    try:
        y = _to_c(ys, n)
    except MemoryError:
        free(x)
        raise
    cdef Py_ssize_t* mem = <Py_ssize_t*> malloc((m if m > 0 else 1) * sizeof(Py_ssize_t))
    if mem == NULL:
        free(x); free(y)
        raise MemoryError()
    cdef Py_ssize_t s, t, u, a, b
    for s in range(m):
        mem[s] = members[s]
    cdef double c[3]
    cdef double bcx = 0.0, bcy = 0.0, br = 0.0
    cdef Py_ssize_t ba = 0, bb = 0
    cdef bint found = False, ok
    cdef double xk = x[k], yk = y[k]
    with nogil:
        for s in range(m):
            a = mem[s]
            for t in range(s + 1, m):
                b = mem[t]
                if not _three(x[a], y[a], x[b], y[b], xk, yk, eps_deg, c):
                    continue
                if found and c[2] >= br:
                    continue
                if not _inside(c[0], c[1], c[2], xk, yk, eps):
                    continue
                ok = True
                for u in range(m):
                    if not _inside(c[0], c[1], c[2], x[mem[u]], y[mem[u]], eps):
                        ok = False
                        break
                if ok:
                    found = True
                    bcx = c[0]; bcy = c[1]; br = c[2]
                    ba = a; bb = b
    free(x)
    free(y)
    free(mem)
    if not found:
        return None
    return bcx, bcy, br, ba, bb

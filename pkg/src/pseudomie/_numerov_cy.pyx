# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Numerov propagation kernel.

Twin of ``_numerov.propagate_python``: same operation order, same rescale
logic, compiled without FMA contraction, so results match the pure-Python
backend bit for bit.
"""

import numpy as np

cdef double RESCALE_LIMIT = 1e250
cdef double INF = float("inf")


def propagate_cython(f, double h, double y0, double y1):
    """Integrate y'' = f(x) y outward on a uniform grid (compiled path)."""
    cdef double[::1] fv = np.ascontiguousarray(f, dtype=np.float64)
    cdef Py_ssize_t n = fv.shape[0]
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef double c = h * h / 12.0
    cdef double ya = y0, yb = y1, yc, s
    cdef double fa = fv[0], fb = fv[1], fc
    cdef Py_ssize_t i, j
    out[0] = y0
    out[1] = y1
    for i in range(2, n):
        fc = fv[i]
        yc = (2.0 * (1.0 + 5.0 * c * fb) * yb - (1.0 - c * fa) * ya) / (1.0 - c * fc)
        if yc != yc:
            yc = RESCALE_LIMIT
        elif yc == INF:
            yc = RESCALE_LIMIT
        elif yc == -INF:
            yc = -RESCALE_LIMIT
        if yc >= RESCALE_LIMIT or yc <= -RESCALE_LIMIT:
            s = 1.0 / abs(yc)
            for j in range(i):
                out[j] *= s
            ya *= s
            yb *= s
            yc *= s
        out[i] = yc
        ya = yb
        yb = yc
        fa = fb
        fb = fc
    return out_arr

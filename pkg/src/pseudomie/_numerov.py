"""Pure-Python Numerov propagation kernel.

Reference implementation of the hot loop; ``_numerov_cy`` is the compiled
twin with identical floating-point semantics (same operation order, no FMA
contraction), so both backends return bit-identical arrays.
"""

import math

import numpy as np

# Rescale trigger.  The running solution of a stiff shooting problem grows by
# hundreds of e-folds, so the propagator renormalizes the whole solution
# whenever |y| passes this bound instead of aborting on overflow.
RESCALE_LIMIT = 1e250


def propagate_python(f, h, y0, y1):
    """Integrate y'' = f(x) y outward on a uniform grid.

    Parameters
    ----------
    f : ndarray
        f(x) sampled on the grid (at least 2 points).
    h : float
        Grid spacing.
    y0, y1 : float
        Values at the first two grid points.

    Returns
    -------
    ndarray
        The solution, renormalized in place whenever it would overflow;
        sign pattern and value ratios are preserved.
    """
    n = len(f)
    c = h * h / 12.0
    fl = f.tolist()
    out = [0.0] * n
    out[0] = y0
    out[1] = y1
    ya = y0
    yb = y1
    fa = fl[0]
    fb = fl[1]
    for i in range(2, n):
        fc = fl[i]
        yc = (2.0 * (1.0 + 5.0 * c * fb) * yb - (1.0 - c * fa) * ya) / (1.0 - c * fc)
        if yc != yc:
            yc = RESCALE_LIMIT
        elif yc == math.inf:
            yc = RESCALE_LIMIT
        elif yc == -math.inf:
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
    return np.asarray(out)

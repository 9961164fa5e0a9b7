"""Backend selection for the Numerov propagation kernel.

The compiled extension is preferred; the pure-Python twin is the fallback
when the package was installed without a compiler. ``BACKEND`` records
which one is active.
"""

from ._numerov import RESCALE_LIMIT, propagate_python

try:
    from ._numerov_cy import propagate_cython
except ImportError:
    propagate_cython = None

if propagate_cython is not None:
    propagate = propagate_cython
    BACKEND = "cython"
else:
    propagate = propagate_python
    BACKEND = "python"

__all__ = ["propagate", "propagate_python", "propagate_cython", "BACKEND", "RESCALE_LIMIT"]

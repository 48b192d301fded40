"""Kernel backend selection.

The compiled extension is preferred; the vectorized numpy module is the
fallback.  Set RINGLAB_PURE_KERNELS=1 to force the fallback, e.g. to compare
the two backends.
"""

import os

if os.environ.get("RINGLAB_PURE_KERNELS") == "1":
    from ringlab._kernels import _pure as _impl

    BACKEND = "pure"
else:
    try:
        from ringlab._kernels import _native as _impl

        BACKEND = "native"
    except ImportError:
        from ringlab._kernels import _pure as _impl

        BACKEND = "pure"

ring_axiom_violation = _impl.ring_axiom_violation
abelian_group_violation = _impl.abelian_group_violation
close_subring = _impl.close_subring
close_ideal = _impl.close_ideal
close_submodule = _impl.close_submodule

__all__ = [
    "BACKEND",
    "ring_axiom_violation",
    "abelian_group_violation",
    "close_subring",
    "close_ideal",
    "close_submodule",
]

"""Select the term-ops kernel: compiled extension if built, else pure Python.

Set QUIVERLAB_FORCE_PY=1 to insist on the fallback (used by the benchmark and
by CI to exercise both paths).
"""

import os

if os.environ.get("QUIVERLAB_FORCE_PY"):
    from quiverlab import _termops_py as _impl
else:
    try:
        from quiverlab import _termops_cy as _impl
    except ImportError:
        from quiverlab import _termops_py as _impl

BACKEND = _impl.BACKEND
add_terms = _impl.add_terms
mul_terms = _impl.mul_terms
scale_terms = _impl.scale_terms
shift_terms = _impl.shift_terms

"""Backend selection for the enumeration kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module takes over. Setting ``CSFLAB_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os

if os.environ.get("CSFLAB_PURE_PYTHON"):
    from . import _pykernels as _impl
else:
    try:
        from . import _kernels as _impl
    except ImportError:  # extension not built
        from . import _pykernels as _impl

BACKEND: str = _impl.BACKEND
canonical_certificate = _impl.canonical_certificate
stable_census = _impl.stable_census
edge_subset_census = _impl.edge_subset_census

__all__ = ["BACKEND", "canonical_certificate", "stable_census", "edge_subset_census"]

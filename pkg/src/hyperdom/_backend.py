"""Pick the compiled kernels when available, else the pure-Python ones.

Set ``HYPERDOM_PURE=1`` to force the fallback.
"""

import os

from . import _pykernels

kernels = _pykernels
NAME = "python"

if not os.environ.get("HYPERDOM_PURE"):
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        kernels = _kernels
        NAME = "cython"

first_satisfying = kernels.first_satisfying


def canonical_form(masks, n, cells):
    if n > 64 and kernels is not _pykernels:
        return _pykernels.canonical_form(masks, n, cells)
    return kernels.canonical_form(masks, n, cells)

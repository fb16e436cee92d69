"""Select the matrix kernel at import time.

The compiled extension is used when it was built; setting
WEYLIFT_PURE_PYTHON=1 forces the pure-Python implementation.
"""

import os

from weylift import _kernels_py

BACKEND = "python"
matmul = _kernels_py.matmul

if os.environ.get("WEYLIFT_PURE_PYTHON", "") in ("", "0"):
    try:
        from weylift import _ckernels
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        matmul = _ckernels.matmul

# largest magnitude the int64 kernel may produce before we switch to Python ints
INT64_SAFE = 2**62

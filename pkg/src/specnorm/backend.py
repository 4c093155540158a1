"""Selects the contraction kernel backend at import time.

The compiled extension is preferred; the numpy fallback gives identical
results (up to floating point summation order).  Set SPECNORM_BACKEND=numpy
or SPECNORM_BACKEND=c to force a choice; forcing c fails loudly when the
extension is not built.
"""

import os

from . import _kernels_np

_requested = os.environ.get("SPECNORM_BACKEND", "").strip().lower()
if _requested not in ("", "c", "numpy"):
    raise ImportError(f"SPECNORM_BACKEND must be 'c' or 'numpy', got {_requested!r}")

if _requested == "numpy":
    _impl = _kernels_np
    BACKEND = "numpy"
else:
    try:
        from . import _kernels_c as _impl  # type: ignore[no-redef]

        BACKEND = "c"
    except ImportError:
        if _requested == "c":
            raise
        _impl = _kernels_np
        BACKEND = "numpy"

contract_all = _impl.contract_all
contract_except_one = _impl.contract_except_one
contract_except_two = _impl.contract_except_two

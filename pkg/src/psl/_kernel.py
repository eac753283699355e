"""Selects the F_p elimination kernel: compiled extension if built, else pure Python.

Set PSL_PURE=1 to force the fallback (used by the benchmark and parity tests).
"""

import os

if os.environ.get("PSL_PURE") == "1":
    from psl import _fpkernel_py as kernel
else:
    try:
        from psl import _fpkernel as kernel  # type: ignore[attr-defined]
    except ImportError:
        from psl import _fpkernel_py as kernel

rref_fp = kernel.rref_fp
reduce_fp = kernel.reduce_fp
nilpotent_lifts_fp = kernel.nilpotent_lifts_fp
IMPLEMENTATION = kernel.IMPLEMENTATION

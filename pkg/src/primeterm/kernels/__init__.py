"""Hot loops of the hypercube code.

The compiled extension is used when it was built; otherwise the pure-Python
module with identical behaviour is used. ``BACKEND`` names the one in use and
``PRIMETERM_PURE=1`` forces the fallback.
"""
import os

from . import _pure

if os.environ.get("PRIMETERM_PURE") == "1":
    _impl = _pure
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _pure

BACKEND = "cython" if _impl is not _pure else "python"

geom_direct = _impl.geom_direct
pack_blocks = _impl.pack_blocks
delta_blocks = _impl.delta_blocks

__all__ = ["BACKEND", "delta_blocks", "geom_direct", "pack_blocks"]

"""Timings of the hot kernels on both backends and of the M pipeline."""
from __future__ import annotations

import time

from . import kernels
from .kernels import _pure


def _best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def _backends():
    out = [("python", _pure)]
    try:
        from .kernels import _kernels
        out.append(("cython", _kernels))
    except ImportError:
        pass
    return out


def run(repeat: int = 3) -> list:
    """Rows of (case, backend, seconds)."""
    from . import hypercube

    rows = []
    blocks = [(1 << 200) - j for j in range(4096)]
    values = list(range(4096))
    for name, mod in _backends():
        rows.append(("geom_direct r=4 q=3 t=2000", name,
                     _best(lambda: mod.geom_direct(4, 3, 2000), repeat)))
        rows.append(("pack_blocks 4096 x 400 bits", name,
                     _best(lambda: mod.pack_blocks(blocks, 400), repeat)))
        rows.append(("delta_blocks 4096 values u=200", name,
                     _best(lambda: mod.delta_blocks(values, 200), repeat)))
    rows.append(("build_M(128)", kernels.BACKEND, _best(lambda: hypercube.build_M(128), repeat)))
    rows.append(("build_M(128) explicit", "-",
                 _best(lambda: hypercube.build_M(128, "explicit"), repeat)))
    return rows


def report(rows) -> str:
    width = max(len(r[0]) for r in rows)
    lines = [f"{'case':<{width}}  backend  seconds"]
    lines += [f"{case:<{width}}  {backend:<7}  {sec:.4f}" for case, backend, sec in rows]
    return "\n".join(lines)

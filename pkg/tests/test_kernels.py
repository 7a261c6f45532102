import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from primeterm import kernels
from primeterm.kernels import _pure

try:
    from primeterm.kernels import _kernels
except ImportError:
    _kernels = None

needs_ext = pytest.mark.skipif(_kernels is None, reason="compiled extension not built")


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")
    assert (kernels.BACKEND == "cython") == (_kernels is not None
                                             and os.environ.get("PRIMETERM_PURE") != "1")


def test_pure_env_forces_fallback():
    code = "import primeterm.kernels as k; print(k.BACKEND)"
    env = dict(os.environ, PRIMETERM_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "python"


def test_pure_examples():
    assert _pure.geom_direct(1, 2, 3) == 10
    assert _pure.pack_blocks([1, 2, 3], 4) == 0x321
    assert _pure.delta_blocks([0, 5], 3) == [63, 28]


def test_pack_blocks_rejects_overflow():
    with pytest.raises(ValueError):
        _pure.pack_blocks([16], 4)


@needs_ext
@given(st.integers(0, 6), st.integers(2, 1 << 70), st.integers(0, 40))
def test_geom_direct_backends_agree(r, q, t):
    assert _kernels.geom_direct(r, q, t) == _pure.geom_direct(r, q, t)


@needs_ext
@given(st.integers(1, 200).flatmap(
    lambda w: st.tuples(st.just(w), st.lists(st.integers(0, (1 << w) - 1), max_size=50))))
def test_pack_blocks_backends_agree(case):
    width, blocks = case
    assert _kernels.pack_blocks(blocks, width) == _pure.pack_blocks(blocks, width)


@needs_ext
@given(st.integers(1, 120).flatmap(
    lambda u: st.tuples(st.just(u), st.lists(st.integers(0, (1 << u) - 1), max_size=50))))
def test_delta_blocks_backends_agree(case):
    u, values = case
    assert _kernels.delta_blocks(values, u) == _pure.delta_blocks(values, u)


@needs_ext
def test_ext_rejects_overflow():
    with pytest.raises(ValueError):
        _kernels.pack_blocks([16], 4)

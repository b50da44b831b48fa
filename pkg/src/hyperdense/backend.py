"""Kernel selection: compiled extension when importable, pure Python otherwise.

Set ``HYPERDENSE_PURE=1`` to force the pure-Python kernels. Even with the
extension loaded, inputs whose integers could overflow int64 fall back to
the Python kernels, which use arbitrary-precision integers.
"""

from __future__ import annotations

import os
from array import array
from contextlib import contextmanager

from . import _pykernels

try:
    if os.environ.get("HYPERDENSE_PURE", "") not in ("", "0"):
        raise ImportError("pure-Python kernels forced by HYPERDENSE_PURE")
    from . import _ckernels
except ImportError:
    _ckernels = None

_MODULES = {"python": _pykernels}
if _ckernels is not None:
    _MODULES["cython"] = _ckernels

# headroom below 2**63 for sums of two in-range values
INT64_LIMIT = 1 << 61

_active = "cython" if _ckernels is not None else "python"


def available() -> list[str]:
    return list(_MODULES)


def active() -> str:
    return _active


@contextmanager
def use(name: str):
    """Temporarily route every kernel call to the named backend."""
    global _active
    if name not in _MODULES:
        raise ValueError(f"backend {name!r} not available (have {available()})")
    old = _active
    _active = name
    try:
        yield
    finally:
        _active = old


def _q(seq) -> array:
    return array("q", seq)


def max_flow(num_nodes, s, t, tails, heads, caps, variant):
    if _active == "cython" and sum(caps) < INT64_LIMIT:
        return _ckernels.max_flow(num_nodes, s, t, _q(tails), _q(heads), _q(caps), variant)
    return _pykernels.max_flow(num_nodes, s, t, tails, heads, caps, variant)


def peel(A):
    if _active == "cython" and A.psi < INT64_LIMIT:
        return _ckernels.peel(A.n, _q(A.edge_ptr), _q(A.edge_verts), _q(A.vert_ptr),
                              _q(A.vert_edges), _q(A.tab_ptr), _q(A.tables), A.psi)
    return _pykernels.peel(A.n, A.edge_ptr, A.edge_verts, A.vert_ptr, A.vert_edges,
                           A.tab_ptr, A.tables, A.psi)


def brute(A):
    if _active == "cython" and A.psi * max(A.n, 1) < INT64_LIMIT and A.n < 63:
        return _ckernels.brute(A.n, _q(A.edge_ptr), _q(A.edge_verts), _q(A.vert_ptr),
                               _q(A.vert_edges), _q(A.tab_ptr), _q(A.tables))
    return _pykernels.brute(A.n, A.edge_ptr, A.edge_verts, A.vert_ptr, A.vert_edges,
                            A.tab_ptr, A.tables)

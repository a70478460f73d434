"""Selects the elimination kernel at import time.

The compiled extension is used when it was built; otherwise the pure-Python
kernel. Set ``PSETS_PURE_PYTHON=1`` to force the fallback.

``PSETS_MUTATE_RANK=1`` (or :func:`set_rank_mutation`) turns on a deliberate
fault: every rank-deficient result is reported one higher. It exists only so
the verification harness can demonstrate that it detects broken kernels.
"""

import contextlib
import os

from psets import _pykernels

eliminate_python = _pykernels.eliminate

try:
    if os.environ.get("PSETS_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure Python kernel forced")
    from psets import _ckernels
except ImportError:
    eliminate_native = None
    _impl = eliminate_python
    BACKEND = "python"
else:
    eliminate_native = _ckernels.eliminate
    _impl = eliminate_native
    BACKEND = "cython"

_mutate_rank = os.environ.get("PSETS_MUTATE_RANK", "") not in ("", "0")


def set_rank_mutation(enabled):
    global _mutate_rank
    _mutate_rank = bool(enabled)


def rank_mutation_enabled():
    return _mutate_rank


@contextlib.contextmanager
def rank_mutation(enabled=True):
    previous = _mutate_rank
    set_rank_mutation(enabled)
    try:
        yield
    finally:
        set_rank_mutation(previous)


def eliminate(rows, ncols):
    rank, pivot, sign = _impl(rows, ncols)
    if _mutate_rank and rank < min(len(rows), ncols):
        rank += 1
    return rank, pivot, sign

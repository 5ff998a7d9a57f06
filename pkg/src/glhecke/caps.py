"""Resource caps: bounds enforced before any large module is materialized.

The default dimension cap comes from the LEFSCHETZ_CAP_DIM environment
variable (400 when unset); the rank cap defaults to 6.  Sweeps and tests may
raise them locally with the `caps` context manager.
"""

from __future__ import annotations

import os
from contextlib import contextmanager

DEFAULT_MAX_DIM = int(os.environ.get("LEFSCHETZ_CAP_DIM", "400"))
DEFAULT_MAX_RANK = 6

_state = {"max_dim": DEFAULT_MAX_DIM, "max_rank": DEFAULT_MAX_RANK}


class CapExceeded(RuntimeError):
    """Raised before constructing anything larger than the configured caps."""


def max_dim() -> int:
    return _state["max_dim"]


def max_rank() -> int:
    return _state["max_rank"]


def check_dim(dim: int):
    if dim > _state["max_dim"]:
        raise CapExceeded("instance too large: dimension %d exceeds cap %d" % (dim, _state["max_dim"]))


def check_rank(m: int):
    if m > _state["max_rank"]:
        raise CapExceeded("instance too large: rank %d exceeds cap %d" % (m, _state["max_rank"]))


@contextmanager
def caps(max_dim: int | None = None, max_rank: int | None = None):
    old = dict(_state)
    if max_dim is not None:
        _state["max_dim"] = max_dim
    if max_rank is not None:
        _state["max_rank"] = max_rank
    try:
        yield
    finally:
        _state.update(old)

"""Exact polyhedral criteria for tropical skeletons over toric varieties.

All functions take and return plain Python data (dicts, lists, ints, and
"p/q" strings for rationals); the heavy lifting happens in the C++ core.
"""

import json

from . import _core
from ._core import TropskelError

__all__ = [
    "TropskelError",
    "hypersurface",
    "extend",
    "check",
    "hk",
    "smith_normal_form",
    "lattice_index",
    "error_code",
]


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def error_code(exc):
    """Upper-snake error code of a TropskelError, e.g. "TOO_FEW_TERMS"."""
    return str(exc).split(":", 1)[0]


def hypersurface(polynomial):
    return json.loads(_core.hypersurface(_dump(polynomial)))


def extend(complex_, fan):
    return json.loads(_core.extend(_dump(complex_), _dump(fan)))


def check(kind, complex_, fan=None, cone=None, cell=None, dims=None, jobs=1):
    out = _core.check(kind, _dump(complex_), None if fan is None else _dump(fan), cone, cell, dims or {}, jobs)
    return json.loads(out)


def hk(data):
    return json.loads(_core.hk(_dump(data)))


def smith_normal_form(matrix):
    return json.loads(_core.smith_normal_form(json.dumps(matrix)))


def lattice_index(matrix):
    idx = _core.lattice_index(json.dumps(matrix))
    return None if idx is None else int(idx)

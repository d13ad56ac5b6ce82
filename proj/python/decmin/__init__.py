"""Decreasingly minimal elements of integral base-polyhedra."""

import json as _json

from ._decmin import (
    DecminError,
    Infeasible,
    canonical,
    certify,
    dec_compare,
    decmin,
    inc_compare,
    orient,
    orient_capacitated,
    semimatch,
)
from ._decmin import basis_sum as _basis_sum


def basis_sum(matroids):
    """Dec-min sum of one basis per matroid; matroids are dicts or JSON strings."""
    return _basis_sum([m if isinstance(m, str) else _json.dumps(m) for m in matroids])


__all__ = [
    "DecminError",
    "Infeasible",
    "basis_sum",
    "canonical",
    "certify",
    "dec_compare",
    "decmin",
    "inc_compare",
    "orient",
    "orient_capacitated",
    "semimatch",
]

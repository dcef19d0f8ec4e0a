"""Exact spin-number and G-hat character computations."""

import json

from . import _core
from ._core import (
    DataInconsistency,
    GoldenNumber,
    InconsistentInput,
    NonIsolatedFixedPoint,
    ParseError,
    SpinIndexError,
    check_orthogonality,
    ghat_chartable,
    ghat_classes,
    icosa_table,
    spin_davis,
    spin_decompose,
    verification_checks,
    verify,
)


def spin_nu(phat, x, dim=4):
    """nu for one isolated fixed point.

    `phat` is [[a, b], [c, d]] with quaternion entries [q0, q1, q2, q3] (dim 4)
    or complex entries {"re": .., "im": ..} (dim 2); coordinates may be ints or
    golden strings such as "1/2+3*t".
    """
    return _core._spin_nu_json(dim, json.dumps(phat), json.dumps(x))


__all__ = [
    "DataInconsistency",
    "GoldenNumber",
    "InconsistentInput",
    "NonIsolatedFixedPoint",
    "ParseError",
    "SpinIndexError",
    "check_orthogonality",
    "ghat_chartable",
    "ghat_classes",
    "icosa_table",
    "spin_davis",
    "spin_decompose",
    "spin_nu",
    "verification_checks",
    "verify",
]

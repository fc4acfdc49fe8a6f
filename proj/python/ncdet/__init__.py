"""Quasideterminants and determinants over noncommutative scalars.

Matrices are passed as JSON text in the same format the command line tool
reads: {"scalar": kind, "n": order, "entries": [[...]]}. Every operation
returns a plain dict; exact values arrive as rational strings unless
as_float is set.
"""

import json as _json

from ._core import (
    CapError,
    InputError,
    NcdetError,
    SingularError,
    UndefinedError,
    __version__,
    mu_count,
)
from . import _core


def _doc(text):
    return _json.loads(text)


def quasidet(matrix, row, col, as_float=False):
    return _doc(_core.quasidet(matrix, row, col, as_float))


def moore(matrix, as_float=False):
    return _doc(_core.moore(matrix, as_float))


def study(matrix, as_float=False):
    return _doc(_core.study(matrix, as_float))


def dieudonne(matrix, as_float=False):
    return _doc(_core.dieudonne(matrix, as_float))


def norm(matrix, method="moore", as_float=False):
    return _doc(_core.norm(matrix, method, as_float))


def predet(matrix, rows, cols, as_float=False):
    return _doc(_core.predet(matrix, list(rows), list(cols), as_float))


def permanent(matrix, row, col, cap=6, as_float=False):
    return _doc(_core.permanent(matrix, row, col, cap, as_float))


def expand(n, row, col, cap=6):
    return _doc(_core.expand(n, row, col, cap))


def verify(suite="all", n=3, trials=100, seed=42, scalar="rational-quaternion"):
    return _doc(_core.verify(suite, n, trials, seed, scalar))


def canonical_matrix(matrix):
    return _core.canonical_matrix(matrix)


__all__ = [
    "CapError",
    "InputError",
    "NcdetError",
    "SingularError",
    "UndefinedError",
    "__version__",
    "canonical_matrix",
    "dieudonne",
    "expand",
    "moore",
    "mu_count",
    "norm",
    "permanent",
    "predet",
    "quasidet",
    "study",
    "verify",
]

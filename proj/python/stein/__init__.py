"""Exact computations with set compositions, Lie elements and the adjoint
braid arrangement.

Elements are plain dicts in the JSON schemas of the ``stein`` command-line
tool (labels as strings, rationals as "p/q" strings).  ``fraction`` turns a
coefficient into a ``fractions.Fraction``.
"""

import json
from fractions import Fraction

from . import _stein
from ._stein import DomainError, FormatError, ResourceError

__all__ = [
    "DomainError", "FormatError", "ResourceError", "fraction", "configure",
    "compositions", "chamber_count", "chambers", "multiply", "comultiply",
    "antipode", "change_basis", "pairing", "reduce", "cobracket",
    "steinmann_rank", "stein_quotient_dim", "is_steinmann", "functional",
    "comb_coefficients", "eulerian", "dynkin", "egs", "verify",
]


def fraction(text):
    return Fraction(text)


def _j(value):
    return value if isinstance(value, str) else json.dumps(value)


def _labels(s):
    return json.dumps([str(a) for a in s])


def configure(max_n=6, cache_dir=""):
    _stein.configure(max_n, cache_dir)


def compositions(n):
    return json.loads(_stein.compositions(n))


def chamber_count(n):
    return _stein.chamber_count(n)


def chambers(n):
    return json.loads(_stein.chambers(n))


def multiply(a, b):
    return json.loads(_stein.multiply(_j(a), _j(b)))


def comultiply(x, s, t):
    return json.loads(_stein.comultiply(_j(x), _labels(s), _labels(t)))


def antipode(x):
    return json.loads(_stein.antipode(_j(x)))


def change_basis(x, to):
    return json.loads(_stein.change_basis(_j(x), to))


def pairing(a, x):
    return Fraction(_stein.pairing(_j(a), _j(x)))


def reduce(tree):
    return json.loads(_stein.reduce(_j(tree)))


def cobracket(x, s, t):
    return json.loads(_stein.cobracket(_j(x), _labels(s), _labels(t)))


def steinmann_rank(n):
    return _stein.steinmann_rank(n)


def stein_quotient_dim(n):
    return _stein.stein_quotient_dim(n)


def is_steinmann(f):
    return _stein.is_steinmann(_j(f))


def functional(x):
    """Chamber values of a functional, Sigma* element or Zie* element."""
    return json.loads(_stein.functional(_j(x)))


def comb_coefficients(f):
    return json.loads(_stein.comb_coefficients(_j(f)))


def eulerian(n):
    return json.loads(_stein.eulerian(n))


def dynkin(n, signs):
    return json.loads(_stein.dynkin(n, signs))


def egs(n, signs):
    return json.loads(_stein.egs(n, signs))


def verify(suite, n, seed=1):
    return json.loads(_stein.verify(suite, n, seed))

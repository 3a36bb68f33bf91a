"""Exact 1/2-derivations, local and 2-local 1/2-derivations of Lie algebras."""

import json
from fractions import Fraction

from . import _core
from ._core import FamilySpec, LieAlgebra, ParseError, ValidationError, build, list_families

__all__ = [
    "FamilySpec",
    "LieAlgebra",
    "ParseError",
    "ValidationError",
    "analyze",
    "bracket",
    "build",
    "derivations",
    "expected_dimensions",
    "family",
    "list_families",
    "table_row",
    "witness",
]


def _str(x):
    return str(Fraction(x))


def family(name, n=0, m=0, beta=None, alphas=(), lambdas=()):
    """Catalog instance, e.g. family("s1", n=5, beta=2)."""
    return _core.family_spec(
        name,
        n,
        m,
        None if beta is None else _str(beta),
        [_str(a) for a in alphas],
        [_str(x) for x in lambdas],
    )


def bracket(algebra, u, v):
    """[u, v] on coordinate vectors; entries come back as Fractions."""
    out = algebra.bracket([_str(x) for x in u], [_str(x) for x in v])
    return [Fraction(x) for x in out]


def derivations(algebra, delta=Fraction(1, 2)):
    return json.loads(_core.derivations(algebra, _str(delta)))


def analyze(algebra, seed=2024, trials=8, window=3, strata_depth=3, delta=Fraction(1, 2), spec=None):
    """Returns (report dict, exit code): 0 ok, 2 Jacobi failure, 3 not stabilized or inconclusive."""
    text, code = _core.analyze(algebra, seed, trials, window, strata_depth, _str(delta), spec)
    return json.loads(text), code


def table_row(spec, seed=2024):
    return json.loads(_core.table_row(spec, seed))


def witness(spec, seed=2024):
    return json.loads(_core.witness(spec, seed))


def expected_dimensions(spec):
    return _core.expected_dimensions(spec)

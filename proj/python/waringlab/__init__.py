"""Exact rank, border rank and decomposition checks for binary forms and
Veronese varieties.

Every function returns plain Python data decoded from the same JSON the
command-line tool prints; rationals stay exact as "p/q" strings.
"""

import json
from fractions import Fraction

from . import _core
from ._core import DegenerateDraw, Error, ParseError, PreconditionError

__all__ = [
    "DegenerateDraw",
    "Error",
    "ParseError",
    "PreconditionError",
    "detect_configuration",
    "h_values",
    "mixed_decomposition",
    "non_uniqueness_set",
    "rank_profile",
    "run_suite",
    "span_pair",
    "suite_ids",
    "to_fraction",
]


def to_fraction(text):
    """Parse a "p/q" string from a report."""
    return Fraction(text)


def _points(points):
    return [[str(x) for x in p] for p in points]


def rank_profile(form):
    """Border, cactus and Waring rank of a form given as "d:c0,...,cd"."""
    return json.loads(_core.rank_profile(form))


def non_uniqueness_set(form, t=0, samples=0, seed=7, max_coeff=50):
    return json.loads(_core.non_uniqueness_set(form, t, samples, seed, max_coeff))


def suite_ids():
    return list(_core.suite_ids())


def run_suite(suite, seed=7, samples=0, max_coeff=50):
    return json.loads(_core.run_suite(suite, seed, samples, max_coeff))


def h_values(points, t):
    return json.loads(_core.h_values(_points(points), t))


def detect_configuration(points, d):
    return json.loads(_core.detect_configuration(_points(points), d))


def mixed_decomposition(n, d, b, k, samples=12, seed=7, max_coeff=50):
    return json.loads(_core.mixed_decomposition(n, d, b, k, samples, seed, max_coeff))


def span_pair(curve, r, s, a, seed=7):
    """curve: "rnc", "gap", "random" or the text of a curve file."""
    return json.loads(_core.span_pair(curve, r, [str(x) for x in s], [str(x) for x in a], seed))

"""Quantiles of two-component mixtures S = I*X + (1-I)*Y.

Levels and points may be given as str, int, float or fractions.Fraction.
Piecewise results are exact and come back as decimal or "num/den" strings.
"""

import json
from fractions import Fraction

from ._mixq import (
    DomainError,
    InternalContradiction,
    Mixture,
    ParseError,
    sample,
)
from . import _mixq

__all__ = [
    "DomainError",
    "InternalContradiction",
    "Mixture",
    "ParseError",
    "cdf",
    "classify",
    "cross_check",
    "direct_quantile",
    "generate_instance",
    "monte_carlo_quantile",
    "quantile",
    "sample",
    "verify",
]


def _text(value):
    if isinstance(value, str):
        return value
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, (int, float)):
        return repr(value)
    raise TypeError(f"unsupported number type {type(value).__name__}")


def _mixture(spec):
    if isinstance(spec, Mixture):
        return spec
    if isinstance(spec, dict):
        return Mixture(json.dumps(spec))
    return Mixture(spec)


def quantile(spec, p):
    return json.loads(_mixq.quantile_json(_mixture(spec), _text(p)))


def classify(spec, p):
    return json.loads(_mixq.classify_json(_mixture(spec), _text(p)))


def direct_quantile(spec, p):
    return _mixq.direct_quantile(_mixture(spec), _text(p))


def cdf(spec, x):
    return _mixq.cdf(_mixture(spec), _text(x))


def cross_check(spec, p):
    return json.loads(_mixq.cross_check_json(_mixture(spec), _text(p)))


def monte_carlo_quantile(spec, p, n, seed):
    return _mixq.monte_carlo_quantile(_mixture(spec), _text(p), n, seed)


def generate_instance(seed, index):
    return _mixq.generate_instance(seed, index)


def verify(count, seed, jobs=1):
    return json.loads(_mixq.verify_json(count, seed, jobs))

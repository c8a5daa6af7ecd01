"""Exact moments of the (q,t)-Poisson model.

Polynomials travel as canonical strings such as ``"lambda^2 + lambda"`` and
rationals as ``"a/b"`` strings; ``evaluate`` returns a ``Fraction``.
"""

from fractions import Fraction

from . import _qtmoments
from ._qtmoments import (
    QtMomentsError,
    arrangements,
    binomial_moments,
    canonical,
    contributors,
    jfraction,
    moment,
    orthogonal_polynomials,
    partitions,
    qt_factorial,
    qt_number,
    run_cli,
    verify,
)

METHODS = ("partitions", "operator", "cards", "motzkin", "cfrac")


def evaluate(poly, **values):
    """Value of ``poly`` at the given point, e.g. ``evaluate(p, q=0, t=1, lambda_=1)``."""
    at = {name.rstrip("_"): str(Fraction(v)) for name, v in values.items()}
    return Fraction(_qtmoments.evaluate(poly, at))


def moments(n_max, mode="strict", method="partitions"):
    """Canonical strings of m_0..m_n_max."""
    return ["1"] + [moment(n, method=method, mode=mode) for n in range(1, n_max + 1)]


__all__ = [
    "METHODS",
    "QtMomentsError",
    "arrangements",
    "binomial_moments",
    "canonical",
    "contributors",
    "evaluate",
    "jfraction",
    "moment",
    "moments",
    "orthogonal_polynomials",
    "partitions",
    "qt_factorial",
    "qt_number",
    "run_cli",
    "verify",
]

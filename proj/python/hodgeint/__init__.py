"""Exact Hodge integrals with at most one lambda class."""

from ._hodge import (
    Engine,
    burnside_double_hurwitz,
    hurwitz_weight,
    oracle_genus0,
    oracle_lambda_g,
    oracle_lambda_gm1_onepoint,
    reference_corpus,
)

_default = None


def _engine():
    global _default
    if _default is None:
        _default = Engine()
    return _default


def compute(genus, lambda_index, psi):
    """Value of the integral as a Fraction (0 when the degree is wrong)."""
    return _engine().compute(genus, lambda_index, list(psi))


def relation(genus, e, d):
    return _engine().relation(genus, list(e), d)


__all__ = [
    "Engine",
    "burnside_double_hurwitz",
    "compute",
    "hurwitz_weight",
    "oracle_genus0",
    "oracle_lambda_g",
    "oracle_lambda_gm1_onepoint",
    "reference_corpus",
    "relation",
]

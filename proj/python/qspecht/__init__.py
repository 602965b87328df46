"""Reducibility of Specht modules for Hecke algebras at q = -1."""

import json

from ._core import conjugate, homdim, is_doubly_singular, n_statistic, partitions, regularize
from ._core import _classify, _verify_mainhom

__all__ = ["classify", "conjugate", "homdim", "is_doubly_singular", "n_statistic", "partitions",
           "regularize", "verify_mainhom"]


def classify(partition, char=0):
    """Classification record as a dict (same fields as the CLI's JSON)."""
    return json.loads(_classify(list(partition), char))


def verify_mainhom(s, sp, f, g, cancellations=False):
    return json.loads(_verify_mainhom(s, sp, f, g, cancellations))

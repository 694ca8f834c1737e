"""
Exceptions raised by quiverdeg.
"""

from typing import List

__all__: List[str] = [
    "QuiverError",
    "NotDynkinError",
    "QuiverMismatchError",
    "NotADegenerationError",
    "InconsistencyError",
    "SearchExhaustedError",
]


class QuiverError(ValueError):
    """
    Malformed quiver or representation data.
    """


class NotDynkinError(QuiverError):
    """
    An operation that needs a Dynkin quiver received another quiver.
    """


class QuiverMismatchError(QuiverError):
    """
    Operands live over different quivers.
    """


class NotADegenerationError(ValueError):
    """
    The pair of modules is not ordered by degeneration.
    """


class InconsistencyError(RuntimeError):
    """
    A computed value contradicts a proven identity.

    Raised for instance on a non-integral decomposition or an inexact
    sequence. It always signals a bug.
    """


class SearchExhaustedError(RuntimeError):
    """
    A bounded search ran out of budget.

    This never disproves existence of the object searched for.
    """

"""The three-case factor shared by flag and matrix weight functions."""
from __future__ import annotations

from typing import Optional

from .algebra import LaurentPolynomial


def psi(own: Optional[int], other: int, xi: LaurentPolynomial) -> LaurentPolynomial:
    """(1 - xi) if other < own, (1+y) xi if equal, (1 + y xi) if other > own.

    own=None stands for an index larger than every other, so the first case applies.
    """
    y = xi.table.y
    if own is None or other < own:
        return 1 - xi
    if other == own:
        return (1 + y) * xi
    return 1 + y * xi


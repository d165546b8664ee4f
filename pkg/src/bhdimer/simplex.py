"""Geometry of the simplex of energy distributions.

The inner triangle spanned by the edge midpoints ``(1/2, 1/2, 0)``,
``(1/2, 0, 1/2)`` and ``(0, 1/2, 1/2)`` is exactly ``{r : max r_i <= 1/2}``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .entanglement import concurrence
from .errors import DomainError, InvalidDistribution

BOUNDARY_TOL = 1e-12
NORM_TOL = 1e-12
QUBIT_THRESHOLD = math.sqrt(3.0) / 2.0


class Region(enum.Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class SimplexPoint:
    r: tuple[float, float, float]
    region: Region
    concurrence: float


def _validate(r) -> np.ndarray:
    r = np.asarray(r, dtype=float)
    if r.shape != (3,) or np.any(r < 0.0) or abs(r.sum() - 1.0) > NORM_TOL:
        raise InvalidDistribution(f"not a probability triad: {np.asarray(r).tolist()}")
    return r


def classify(r) -> Region:
    """Locate a triad relative to the inner triangle."""
    top = float(np.max(_validate(r)))
    if abs(top - 0.5) <= BOUNDARY_TOL:
        return Region.BOUNDARY
    return Region.INSIDE if top < 0.5 else Region.OUTSIDE


def edge_concurrence(r: float) -> float:
    """Concurrence along an edge ``{1/2, r, 1/2 - r}`` of the inner triangle."""
    if not 0.0 < r < 0.5:
        raise DomainError(f"edge parameter must lie in (0, 1/2), got {r!r}")
    return math.sqrt(0.75 * (1.0 + 2.0 * r * (1.0 - 2.0 * r)))


def barycentric_grid(n: int) -> list[tuple[int, int, int]]:
    """Integer triples ``(a, b, n - a - b)`` in lexicographic ``(a, b)`` order."""
    if n < 2:
        raise ValueError("grid resolution must be at least 2")
    return [(a, b, n - a - b) for a in range(n + 1) for b in range(n + 1 - a)]


def sample_simplex(n: int) -> list[SimplexPoint]:
    """Classified grid points with their (diagonal-Hamiltonian) concurrence."""
    points = []
    for a, b, c in barycentric_grid(n):
        r = (a / n, b / n, c / n)
        points.append(SimplexPoint(r, classify(r), concurrence(r)))
    return points

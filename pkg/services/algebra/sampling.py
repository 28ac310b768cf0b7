"""Seeded exact sample points and exact linear solves over them."""
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from config.loader import ConfigLoader
from services.algebra.mpoly import to_qq
from services.algebra.varids import VarId
from services.errors import RankDeficient
from utils.logger import logger

Point = Dict[VarId, Fraction]


class SamplePoints:
    """Draws integer points from a numpy generator; values are used as exact Fractions."""

    MAX_ATTEMPTS = 50

    def __init__(self, seed: Optional[int] = None, bound: Optional[int] = None):
        self.seed = seed if seed is not None else ConfigLoader.get("engine.seed", 20240611)
        self.bound = bound or ConfigLoader.get("engine.sample_bound", 1000000)
        self._rng = np.random.default_rng(self.seed)

    def point(self, variables: Iterable[VarId]) -> Point:
        variables = sorted(set(variables))
        values = self._rng.choice(self.bound, size=len(variables), replace=False) + 1
        return {v: Fraction(int(x)) for v, x in zip(variables, values)}

    def regular_points(self, fns: List[Callable[[Point], Fraction]], variables: Iterable[VarId],
                       count: int) -> List[Point]:
        """count points at which every function in fns is defined."""
        variables = list(variables)
        points = []
        attempts = 0
        while len(points) < count:
            attempts += 1
            if attempts > self.MAX_ATTEMPTS * max(count, 1):
                raise ZeroDivisionError("no regular sample point found")
            pt = self.point(variables)
            try:
                for fn in fns:
                    fn(pt)
            except ZeroDivisionError:
                continue
            points.append(pt)
        return points


def solve_exact(rows: List[List[Fraction]], rhs: List[Fraction]) -> Optional[List[Fraction]]:
    """Unique solution of an overdetermined system over QQ; None if inconsistent.

    Raises RankDeficient when the rows leave an unknown free.
    """
    width = len(rows[0]) if rows else 0
    augmented = [[to_qq(x) for x in row] + [to_qq(b)] for row, b in zip(rows, rhs)]
    matrix = DomainMatrix(augmented, (len(augmented), width + 1), QQ)
    reduced, pivots = matrix.rref()
    if width in pivots:
        logger.debug(f"sample system of {len(rows)} rows in {width} unknowns is inconsistent")
        return None
    if len(pivots) < width:
        raise RankDeficient(f"sample system has rank {len(pivots)} < {width}")
    dense = reduced.to_Matrix()
    return [Fraction(int(dense[i, width].p), int(dense[i, width].q)) for i in range(width)]

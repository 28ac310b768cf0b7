"""Schur coefficients ((I)) of the equivariant Segre classes of Sym^2."""
from functools import lru_cache
from typing import Iterator, Sequence, Tuple

from services.algebra.mpoly import MPoly, mono_degree, mpoly_sum
from services.algebra.varids import alpha
from services.errors import ThomError
from services.schur.delta import delta_alphabet
from services.schur.partitions import Partition, conjugate
from utils.logger import logger


def is_segre_index(I: Sequence[int]) -> bool:
    return all(i >= 0 for i in I) and all(I[k] > I[k + 1] for k in range(len(I) - 1))


@lru_cache(maxsize=None)
def _segre(I: Tuple[int, ...]) -> int:
    if not I:
        return 1
    if not is_segre_index(I):
        return 0
    r = len(I)
    total = 2 * sum(_segre(I[:k] + (I[k] - 1,) + I[k + 1:]) for k in range(r))
    if I[-1] == 0:
        total += _segre(I[:-1])
    value, remainder = divmod(total, r)
    if remainder:
        raise ThomError(f"Segre recursion is not integral at {I}")
    return value


def segre_coeff(I: Sequence[int]) -> int:
    """((I)) from r((I)) - 2 sum_k ((I - e_k)) = [i_r = 0] ((i_1..i_{r-1})), with ((0)) = 1.

    Sequences that are not strictly decreasing and nonnegative give 0.
    """
    return _segre(tuple(int(i) for i in I))


def segre_indices(length: int, max_weight: int, floor: int = 0) -> Iterator[Tuple[int, ...]]:
    """Strictly decreasing sequences i_1 > ... > i_length >= floor with sum <= max_weight."""
    if length == 0:
        if max_weight >= 0:
            yield ()
        return
    for last in range(floor, max_weight + 1):
        for head in segre_indices(length - 1, max_weight - last, last + 1):
            yield head + (last,)


def _truncate(poly: MPoly, degree: int) -> MPoly:
    return MPoly({m: c for m, c in poly.terms() if mono_degree(m) <= degree})


def segre_series(n: int, degree_bound: int) -> MPoly:
    """1 / prod_{i<=j} (1 - alpha_i - alpha_j), truncated at the degree bound."""
    result = MPoly.constant(1)
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            w = MPoly.var(alpha(i)) + MPoly.var(alpha(j))
            geometric = mpoly_sum(w ** k for k in range(degree_bound + 1))
            result = _truncate(result * geometric, degree_bound)
    return result


def segre_schur_side(n: int, degree_bound: int) -> MPoly:
    """sum_I ((I)) Delta_{conj(I - rho_{n-1})}(alpha_1..alpha_n) up to the degree bound."""
    alphas = [MPoly.var(alpha(i)) for i in range(1, n + 1)]
    offset = n * (n - 1) // 2
    terms = []
    for I in segre_indices(n, degree_bound + offset):
        lam = conjugate(Partition(I[k] - (n - 1 - k) for k in range(n)))
        terms.append(delta_alphabet(lam, alphas) * segre_coeff(I))
    return mpoly_sum(terms)


def segre_series_check(n: int, degree_bound: int) -> bool:
    lhs = segre_series(n, degree_bound)
    rhs = segre_schur_side(n, degree_bound)
    ok = lhs == rhs
    logger.debug(f"Segre expansion n={n} through degree {degree_bound}: {'ok' if ok else 'MISMATCH'}")
    return ok

"""Jacobi-Trudi determinants in quotient variables and in explicit alphabets."""
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from sympy.combinatorics import Permutation

from services.algebra.linform import LinForm
from services.algebra.mpoly import MPoly, Monomial
from services.algebra.varids import VarId, c
from services.schur.partitions import Partition

ONE = MPoly.constant(1)
ZERO = MPoly()


def straighten(seq: Sequence[int]) -> Optional[Tuple[int, Partition]]:
    """Rewrite det(h_{a_i+j-i}) for a raw integer sequence as sign * Delta_lambda.

    Returns None when the determinant vanishes.
    """
    m = len(seq)
    shifted = [a - i for i, a in enumerate(seq)]
    if len(set(shifted)) < m:
        return None
    order = sorted(range(m), key=lambda i: -shifted[i])
    lam = [shifted[order[i]] + i for i in range(m)]
    if lam and lam[-1] < 0:
        return None
    sign = Permutation(order).signature() if m > 1 else 1
    return sign, Partition(lam)


def jacobi_trudi(lam: Partition, entry: Callable[[int], MPoly]) -> MPoly:
    """det(entry(lam_i + j - i)) by row expansion memoized on used columns."""
    ell = len(lam)
    if ell == 0:
        return ONE
    rows = [[entry(lam[i] + j - i) for j in range(ell)] for i in range(ell)]
    memo: Dict[int, MPoly] = {}

    def minor(row: int, used: int) -> MPoly:
        if row == ell:
            return ONE
        if used in memo:
            return memo[used]
        total = ZERO
        position = 0
        for j in range(ell):
            if used & (1 << j):
                continue
            value = rows[row][j]
            if not value.is_zero():
                term = value * minor(row + 1, used | (1 << j))
                total = total + (term if position % 2 == 0 else -term)
            position += 1
        memo[used] = total
        return total

    return minor(0, 0)


def _c_entry(k: int) -> MPoly:
    if k < 0:
        return ZERO
    if k == 0:
        return ONE
    return MPoly.var(c(k))


@lru_cache(maxsize=None)
def delta_quotient(lam: Partition) -> MPoly:
    """Delta_lambda = det(c_{lambda_i + j - i}) with c_0 = 1."""
    return jacobi_trudi(lam, _c_entry)


def delta_raw(seq: Sequence[int]) -> MPoly:
    """Delta of a raw integer sequence, straightened first."""
    straight = straighten(seq)
    if straight is None:
        return ZERO
    sign, lam = straight
    return delta_quotient(lam) * sign


def elementary_symmetric(xs: Sequence) -> List[MPoly]:
    """[e_0, ..., e_n] of an alphabet of LinForms or MPolys."""
    e = [ONE]
    for x in xs:
        x = x.to_mpoly() if isinstance(x, LinForm) else x
        e = [e[0]] + [e[k] + x * e[k - 1] for k in range(1, len(e))] + [x * e[-1]]
    return e


def delta_alphabet(lam: Partition, xs: Sequence) -> MPoly:
    """det(sigma_{lambda_i + j - i}(xs)); vanishes when lambda_1 exceeds the alphabet size."""
    e = elementary_symmetric(xs)

    def entry(k: int) -> MPoly:
        if k < 0 or k >= len(e):
            return ZERO
        return e[k]

    return jacobi_trudi(lam, entry)


def c_monomial(parts: Sequence[int]) -> MPoly:
    """prod c_{k} over the parts; zero parts are c_0 = 1, negative parts give 0."""
    exps: Dict[VarId, int] = {}
    for k in parts:
        if k < 0:
            return ZERO
        if k:
            exps[c(k)] = exps.get(c(k), 0) + 1
    return MPoly.monomial(exps)


def monomial_partition(m: Monomial) -> Partition:
    """The partition whose parts are the c-indices of a c-monomial."""
    parts: List[int] = []
    for v, e in m:
        if v.namespace != "c":
            raise ValueError(f"{v} is not a quotient variable")
        if v.index:
            parts.extend([v.index] * e)
    return Partition(sorted(parts, reverse=True))


def c_degree(v: VarId) -> int:
    """Grading deg c_i = i."""
    return v.index if v.namespace == "c" else 1


def as_partition_dict(poly: MPoly) -> Dict[Partition, Fraction]:
    out: Dict[Partition, Fraction] = {}
    for m, coeff in poly.terms():
        lam = monomial_partition(m)
        out[lam] = out.get(lam, 0) + coeff
    return {lam: value for lam, value in out.items() if value}


@lru_cache(maxsize=None)
def delta_terms(lam: Partition) -> Tuple[Tuple[Partition, Fraction], ...]:
    return tuple(sorted(as_partition_dict(delta_quotient(lam)).items()))

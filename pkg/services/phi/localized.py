"""Tp of Phi_{n,r} localized at the fixed points of P(Sym^2 C^n)."""
from fractions import Fraction
from math import comb
from typing import List

from services.algebra.linform import LinForm
from services.algebra.ratfn import RatFn, resultant_ratfn
from services.algebra.varids import alpha
from services.errors import PreconditionError
from services.schur.delta import delta_alphabet
from services.schur.partitions import staircase
from services.thom.forms import RootForm, Summand
from utils.logger import logger


def phi_codim(m: int, r: int, l: int) -> int:
    """codim of Phi_{m,r}(n, n+l): (m+1)l + C(m+1,2) + C(r+1,2) + 1."""
    if not 0 <= r < m:
        raise PreconditionError(f"Phi_{{m,r}} needs 0 <= r < m, got m={m}, r={r}")
    return (m + 1) * l + comb(m + 1, 2) + comb(r + 1, 2) + 1


def fixed_points(n: int) -> List[tuple]:
    """The lines alpha_i + alpha_j, i <= j, of Sym^2."""
    return [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]


def _weight(i: int, j: int) -> LinForm:
    return LinForm.of(alpha(i)) + LinForm.of(alpha(j))


def rank_locus_restriction(n: int, r: int, i: int, j: int) -> RatFn:
    """[X(n, r)] at the fixed point (i, j): 2^r Delta_{rho_r}(alpha_u - (alpha_i + alpha_j)/2)."""
    half = _weight(i, j) * Fraction(1, 2)
    shifted = [LinForm.of(alpha(u)) - half for u in range(1, n + 1)]
    return RatFn.from_poly(delta_alphabet(staircase(r), shifted) * 2 ** r)


def phi_tp_localized(n: int, r: int, p: int) -> RootForm:
    """res(B_p|A_n) * sum_{i<=j} [E_ij] / e_ij * [X(n, r)]|_{f_ij}."""
    if not 0 <= r < n <= p:
        raise PreconditionError(f"Phi localization needs 0 <= r < n <= p, got n={n}, r={r}, p={p}")
    roots = [LinForm.of(alpha(a)) for a in range(1, n + 1)]
    points = fixed_points(n)
    summands: List[Summand] = []
    for i, j in points:
        w = _weight(i, j)
        others = [_weight(k, q) for k, q in points if (k, q) != (i, j)]
        restriction = rank_locus_restriction(n, r, i, j)
        if restriction.is_zero():
            continue
        summands.append(Summand(restriction / resultant_ratfn(others, [w]), roots + [w]))
    logger.debug(f"Phi_{{{n},{r}}} at p={p}: {len(summands)} nonzero fixed points")
    return RootForm(n, p, summands, label=f"Tp_Phi{n}{r}({n},{p})", codim=phi_codim(n, r, p - n))

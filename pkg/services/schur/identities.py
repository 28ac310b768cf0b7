"""Symbolic identity checks for Schur determinants in root alphabets."""
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from services.algebra.linform import LinForm
from services.algebra.mpoly import MPoly
from services.algebra.ratfn import RatFn, ratfn_sum, resultant_ratfn
from services.algebra.varids import alpha, beta
from services.errors import PreconditionError
from services.schur.delta import delta_alphabet, delta_quotient
from services.schur.partitions import Partition, conjugate, staircase
from services.thom.quotient import rho
from utils.logger import logger


def _alphas(indices: Sequence[int]):
    return [LinForm.of(alpha(i)) for i in indices]


def factorization_check(n: int, p: int, lam: Partition, mu: Partition) -> bool:
    """rho_{n,p}(Delta_{(p^n + lam, mu)}) = res(B_p|A_n) Delta_mu(B_p) Delta_{conj lam}(-A_n)."""
    if len(lam) > n or mu[0] > p:
        raise PreconditionError(f"need len(lam) <= {n} and mu_1 <= {p}")
    big = Partition(tuple(p + part for part in lam.padded(n)) + tuple(mu))
    lhs = rho(n, p, delta_quotient(big))
    betas = [LinForm.of(beta(j)) for j in range(1, p + 1)]
    alphas = _alphas(range(1, n + 1))
    rhs = (resultant_ratfn(betas, alphas).to_poly()
           * delta_alphabet(mu, betas)
           * delta_alphabet(conjugate(lam), [-a for a in alphas]))
    return lhs == rhs


def gustafson_milne_check(m: int, s: int, mu: Partition) -> bool:
    """Delta_mu(A_m) = sum_{|H|=s} Delta_{(s^{m-s}, mu)}(A_H) / res(A_H | A_{not H}), mu_1 <= s."""
    if not 0 < s <= m or mu[0] > s:
        raise PreconditionError(f"need 0 < s <= m and mu_1 <= s, got m={m}, s={s}, mu={mu}")
    indices = range(1, m + 1)
    shape = Partition((s,) * (m - s) + tuple(mu))
    terms = []
    for H in combinations(indices, s):
        rest = [i for i in indices if i not in H]
        top = RatFn.from_poly(delta_alphabet(shape, _alphas(H)))
        terms.append(top / resultant_ratfn(_alphas(H), _alphas(rest)))
    lhs = RatFn.from_poly(delta_alphabet(mu, _alphas(indices)))
    return ratfn_sum(terms) == lhs


def two_forms_sum(m: int, s: int) -> RatFn:
    """sum_{|H|=s} Delta_{rho_s}(A_H) / res(A_H|A_{not H}) * prod_{i in H, j not in H} (a_i + a_j)."""
    indices = range(1, m + 1)
    terms = []
    for H in combinations(indices, s):
        rest = [i for i in indices if i not in H]
        top = RatFn.from_poly(delta_alphabet(staircase(s), _alphas(H)))
        mixed = resultant_ratfn(_alphas(H), [-a for a in _alphas(rest)])
        terms.append(top * mixed / resultant_ratfn(_alphas(H), _alphas(rest)))
    return ratfn_sum(terms)


def two_forms_check(m: int, s: int, y: Fraction = Fraction(3, 2)) -> bool:
    """The sum equals Delta_{rho_s}(a_1..a_m, y, -y), the same at y = 0 and at the given y."""
    if not 0 < s <= m:
        raise PreconditionError(f"need 0 < s <= m, got m={m}, s={s}")
    alphas = [MPoly.var(alpha(i)) for i in range(1, m + 1)]

    def right(value: Fraction) -> MPoly:
        return delta_alphabet(staircase(s), alphas + [MPoly.constant(value), MPoly.constant(-value)])

    at_zero = right(Fraction(0))
    ok = two_forms_sum(m, s) == RatFn.from_poly(at_zero) and right(Fraction(y)) == at_zero
    logger.debug(f"two-forms identity m={m}, s={s}, y={y}: {'ok' if ok else 'MISMATCH'}")
    return ok

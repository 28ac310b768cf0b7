"""Fixed-point localization: Thom polynomials from Euler classes and back."""
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import List, Optional, Sequence

from services.algebra.linform import LinForm
from services.algebra.mpoly import MPoly
from services.algebra.ratfn import RatFn, ratfn_sum, resultant_ratfn, symmetrize
from services.algebra.varids import alpha, beta
from services.errors import PreconditionError
from services.euler.algebras import AlgebraId
from services.euler.reciprocity import complete_missing
from services.euler.tables import EXTRAPOLATED, EulerTable, lookup
from services.ideals.ideals import (MonomialGerm, MonomialIdeal, Representative, canonical_representatives,
                                    enumerate_ideals, germ_weights, ideal_of, min_generators, quotient_weights)
from services.thom.forms import QuotientForm, RootForm, Summand, ThomPolynomial
from services.thom.quotient import rho_at
from utils.logger import logger


def _alphas(indices: Sequence[int]) -> List[LinForm]:
    return [LinForm.of(alpha(i)) for i in indices]


def _fixed_point_summands(rep: Representative, value, n: int, p: int) -> List[Summand]:
    """The distinct permuted images of res(B_p|W)/(e * res(alpha_{k+1..n}|W)), each over |Stab|."""
    k = rep.n
    weights = list(quotient_weights(rep.ideal))
    inverse_e = value.reciprocal()
    summands: List[Summand] = []
    for image in permutations(range(1, n + 1), k):
        mapping = {alpha(i + 1): alpha(image[i]) for i in range(k)}
        moved = [w.rename(mapping) for w in weights]
        rest = [i for i in range(1, n + 1) if i not in image]
        weight = inverse_e.rename(mapping) / resultant_ratfn(_alphas(rest), moved) * Fraction(1, rep.stabilizer)
        summands.append(Summand(weight, moved))
    return summands


def localize_tp(Q: AlgebraId, n: int, p: int, table: EulerTable) -> RootForm:
    """Tp_Q(n, p) as a sum over the canonical fixed points with n(i) <= n.

    Infinite Euler classes contribute nothing.
    """
    if not 1 <= n <= p:
        raise PreconditionError(f"localization needs p >= n >= 1, got n={n}, p={p}")
    summands: List[Summand] = []
    for rep in canonical_representatives(Q.mu):
        if rep.n > n:
            continue
        value = table.get(Q, rep.ideal).value
        if value.is_infinite():
            continue
        summands.extend(_fixed_point_summands(rep, value, n, p))
    codim = Q.mu * (p - n) + Q.gamma
    logger.debug(f"Localization of {Q} at (n={n}, p={p}): {len(summands)} summands")
    return RootForm(n, p, summands, label=f"Tp_{Q.compact}({n},{p})", codim=codim)


def localize_by_lookup(Q: AlgebraId, n: int, p: int, table: EulerTable) -> RootForm:
    """The same sum taken over every codim-mu monomial ideal in n variables."""
    summands: List[Summand] = []
    for J in enumerate_ideals(n, Q.mu):
        value = lookup(table, Q, J)
        if value.is_infinite():
            continue
        summands.append(Summand(value.reciprocal(), quotient_weights(J)))
    return RootForm(n, p, summands, label=f"Tp_{Q.compact}({n},{p}) by lookup", codim=Q.mu * (p - n) + Q.gamma)


def localize_symmetrized(Q: AlgebraId, n: int, p: int, table: EulerTable) -> RatFn:
    """The same sum as symmetrizers of one fixed-point term per canonical ideal.

    Each term is averaged over all of S_n with weight 1/(|Stab| (n-k)!), so the sum is
    expanded in full; meant for small mu.
    """
    if not 1 <= n <= p:
        raise PreconditionError(f"localization needs p >= n >= 1, got n={n}, p={p}")
    betas = [LinForm.of(beta(j)) for j in range(1, p + 1)]
    pieces = []
    for rep in canonical_representatives(Q.mu):
        if rep.n > n:
            continue
        value = table.get(Q, rep.ideal).value
        if value.is_infinite():
            continue
        weights = list(quotient_weights(rep.ideal))
        term = resultant_ratfn(betas, weights) / (value * resultant_ratfn(_alphas(range(rep.n + 1, n + 1)), weights))
        pieces.append(symmetrize(term, n, rep.stabilizer * factorial(n - rep.n)))
    return ratfn_sum(pieces)


def restrict(tp: RootForm, f: MonomialGerm) -> MPoly:
    """Substitute beta_j by the weight of the j-th coordinate monomial of f."""
    if f.n != tp.n or f.p != tp.p:
        raise PreconditionError(f"germ is ({f.n},{f.p}) but the Thom polynomial is ({tp.n},{tp.p})")
    assignment = {beta(j + 1): w.to_mpoly() for j, w in enumerate(germ_weights(f))}
    return tp.poly.substitute(assignment, partial=True)


def restrict_quotient(tp: QuotientForm, f: MonomialGerm) -> MPoly:
    """rho(tp) at the germ f, computed without the root form: c_k goes to the degree-k part of
    prod(1 + W_f) / prod(1 + alpha)."""
    if f.p - f.n != tp.l:
        raise PreconditionError(f"germ is ({f.n},{f.p}) but the Thom polynomial has l={tp.l}")
    return rho_at(tp.chern, [MPoly.var(alpha(i)) for i in range(1, f.n + 1)],
                  [w.to_mpoly() for w in germ_weights(f)])


def euler_via_interpolation(tp: ThomPolynomial, f: MonomialGerm) -> RatFn:
    """e(Q, I_f) = res(W_f | W_{Q_f}) / Tp|_f; a vanishing restriction gives Infinite."""
    restricted = restrict_quotient(tp, f) if isinstance(tp, QuotientForm) else restrict(tp, f)
    if restricted.is_zero():
        return RatFn.INF()
    numerator = resultant_ratfn(germ_weights(f), quotient_weights(ideal_of(f)))
    return numerator / RatFn.from_poly(restricted)


def padded_germ(I: MonomialIdeal, p: int, pad: Optional[Sequence[int]] = None) -> MonomialGerm:
    """A germ with ideal I and p coordinates: the minimal generators, then copies of pad.

    pad defaults to the generator of largest (degree, exponent).
    """
    gens = min_generators(I)
    if len(gens) > p:
        raise PreconditionError(f"{len(gens)} generators do not fit into p={p} coordinates")
    if pad is None:
        pad = max(gens, key=lambda g: (sum(g), g))
    pad = tuple(pad)
    if pad not in gens:
        raise PreconditionError(f"padding monomial {pad} is not a minimal generator")
    return MonomialGerm(I.n, tuple(gens) + (pad,) * (p - len(gens)))


def extrapolate_entry(known: QuotientForm, I: MonomialIdeal, pad: Optional[Sequence[int]] = None) -> RatFn:
    return euler_via_interpolation(known, padded_germ(I, I.n + known.l, pad))


def extrapolate_table(Q: AlgebraId, known: QuotientForm, complete: bool = True) -> EulerTable:
    """Euler classes at every canonical ideal with n(i) <= mu-1 from a single tp_Q(l0).

    The M_mu^2 row is then filled in by reciprocity.
    """
    table = EulerTable(f"extrapolated from tp_{Q.compact}({known.l})")
    for rep in canonical_representatives(Q.mu):
        if rep.n > max(Q.mu - 1, 1):
            continue
        table.set(Q, rep.ideal, extrapolate_entry(known, rep.ideal), EXTRAPOLATED)
    if complete:
        complete_missing(table, [Q])
    logger.info(f"Extrapolated {len(table.rows())} Euler classes for {Q} from l={known.l}")
    return table

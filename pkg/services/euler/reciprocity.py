"""The reciprocity relation sum_I 1/e(Q, I) = 0 over the fixed points in mu variables."""
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence

from sympy.utilities.iterables import multiset_permutations

from config.loader import ConfigLoader
from services.algebra.mpoly import MPoly, mpoly_product, mpoly_sum
from services.algebra.poles import pole_orders, vanishes
from services.algebra.ratfn import RatFn, ratfn_sum
from services.algebra.sampling import SamplePoints, solve_exact
from services.algebra.varids import VarId, alpha
from services.errors import RankDeficient, TableError, TautologicalReciprocity
from services.euler.algebras import AlgebraId
from services.euler.tables import COMPLETED, EulerTable, lookup
from services.ideals.ideals import MonomialIdeal, enumerate_ideals
from services.schur.partitions import partitions_of
from utils.logger import logger

SOLVE_ROUNDS = 3


def _reciprocals(table: EulerTable, Q: AlgebraId, include_maximal: bool) -> List[RatFn]:
    mu = Q.mu
    terms = []
    for J in enumerate_ideals(mu, mu):
        if J.is_maximal_square() and not include_maximal:
            continue
        value = lookup(table, Q, J)
        if value.is_infinite():
            continue
        terms.append(value.reciprocal())
    return terms


def _materialize(mu: int) -> bool:
    return mu <= ConfigLoader.get("euler.materialize_max_mu", 3)


def _by_expansion(terms: List[RatFn]) -> RatFn:
    total = ratfn_sum(terms)
    return RatFn.INF() if total.is_zero() else -total.reciprocal()


def monomial_symmetric(parts: Sequence[int], variables: Sequence[VarId]) -> MPoly:
    padded = list(parts) + [0] * (len(variables) - len(parts))
    return mpoly_sum(MPoly.monomial({v: e for v, e in zip(variables, exps) if e})
                     for exps in multiset_permutations(padded))


def _character(R: MPoly, variables: Sequence[VarId]) -> Optional[int]:
    """+1 if R is symmetric, -1 if alternating, None otherwise."""
    signs = set()
    for u, v in zip(variables, variables[1:]):
        swapped = R.rename({u: v, v: u})
        if swapped == R:
            signs.add(1)
        elif swapped == -R:
            signs.add(-1)
        else:
            return None
    if len(signs) > 1:
        return None
    return signs.pop() if signs else 1


def _reconstruct(terms: List[RatFn], mu: int, label: str, sampler: Optional[SamplePoints] = None
                 ) -> Optional[RatFn]:
    """-1/S for S = sum(terms), from the pole orders of S and an interpolation of its numerator.

    S = -P/R with R the product of the polar hyperplanes. P is symmetric or
    alternating with R, so it is solved exactly in the monomial symmetric basis.
    The result is certified by the vanishing of S + P/R. None when the poles are
    out of reach.
    """
    orders = pole_orders(terms)
    if orders is None:
        return None
    if not orders:
        logger.debug(f"{label}: the reciprocity sum without M_{mu}^2 has no poles, so it vanishes")
        return RatFn.INF()
    variables = [alpha(i) for i in range(1, mu + 1)]
    forms = sorted(orders, key=MPoly.sort_key)
    R = mpoly_product(form ** orders[form] for form in forms)
    character = _character(R, variables)
    if character is None:
        return None
    V = MPoly.constant(1)
    if character < 0:
        V = mpoly_product(MPoly.var(u) - MPoly.var(v) for i, u in enumerate(variables) for v in variables[i + 1:])
    degree = R.degree() - V.degree() + terms[0].degree()
    if degree < 0:
        return None
    basis = [monomial_symmetric(lam.parts, variables) for lam in partitions_of(degree, max_parts=mu)]

    def total(pt: Dict[VarId, Fraction]) -> Fraction:
        return sum((t.evaluate(pt) for t in terms), Fraction(0))

    sampler = sampler or SamplePoints()
    count = len(basis) + ConfigLoader.get("engine.extra_samples", 4)
    for _ in range(SOLVE_ROUNDS):
        points = sampler.regular_points([total], variables, count)
        rows = [[b.evaluate(pt) for b in basis] for pt in points]
        rhs = [-total(pt) * R.evaluate(pt) / V.evaluate(pt) for pt in points]
        try:
            solution = solve_exact(rows, rhs)
            break
        except RankDeficient as e:
            logger.debug(f"{label}: {e}, resampling with {2 * count} points")
            count *= 2
    else:
        return None
    if solution is None:
        return None
    P = V * mpoly_sum(b * x for b, x in zip(basis, solution))
    if P.is_zero():
        return None
    value = RatFn.from_factors([form for form in forms for _ in range(orders[form])], [P])
    if vanishes(terms + [value.reciprocal()]) is not True:
        logger.debug(f"{label}: interpolated numerator not certified")
        return None
    logger.debug(f"{label}: reconstructed over {len(forms)} polar hyperplanes, numerator degree {P.degree()}")
    return value


def complete_by_reciprocity(table: EulerTable, Q: AlgebraId) -> RatFn:
    """e(Q, M_mu^2) solved from the reciprocity relation with n = mu.

    Expanded symbolically up to euler.materialize_max_mu; above that it is
    reconstructed from its poles and certified exactly. A shipped M_mu^2 row
    is compared against the solution.
    """
    mu = Q.mu
    if mu == 1:
        raise TautologicalReciprocity(f"{Q}: the only fixed point is M_1^2, the relation is a tautology")
    terms = _reciprocals(table, Q, include_maximal=False)
    label = f"e({Q}, M_{mu}^2)"
    value = None if _materialize(mu) else _reconstruct(terms, mu, label)
    if value is None:
        if not _materialize(mu):
            logger.warning(f"{label}: poles out of reach, expanding the reciprocity sum")
        value = _by_expansion(terms)
    rep = MonomialIdeal.maximal_square(mu)
    shipped = table.entries.get(Q, {}).get(rep)
    if shipped is not None and shipped.provenance != COMPLETED:
        if shipped.value != value:
            raise TableError(f"{Q}: shipped M_{mu}^2 row disagrees with reciprocity", shipped.line)
        logger.info(f"{Q}: shipped M_{mu}^2 row agrees with reciprocity")
    return value


def complete_missing(table: EulerTable, algebras: Optional[Iterable[AlgebraId]] = None) -> List[AlgebraId]:
    """Fill every absent M_mu^2 row whose other rows are present; returns the completed algebras."""
    completed = []
    for Q in list(algebras or table.algebras()):
        if Q.mu < 2:
            continue
        missing = table.missing(Q)
        rep = MonomialIdeal.maximal_square(Q.mu)
        if missing != [rep]:
            continue
        table.set(Q, rep, complete_by_reciprocity(table, Q), COMPLETED)
        logger.warning(f"{Q}: M_{Q.mu}^2 row completed by reciprocity")
        completed.append(Q)
    return completed


def reciprocity_terms(table: EulerTable, Q: AlgebraId) -> List[RatFn]:
    """1/e(Q, I) for every codim-mu ideal I in mu variables with a finite Euler class."""
    return _reciprocals(table, Q, include_maximal=True)


def reciprocity_sum(table: EulerTable, Q: AlgebraId) -> RatFn:
    """The sum of reciprocity_terms, expanded symbolically."""
    return ratfn_sum(reciprocity_terms(table, Q))


def reciprocity_holds(table: EulerTable, Q: AlgebraId) -> bool:
    """Exact check of the relation over rows that were not derived from it."""
    entry = table.entries.get(Q, {}).get(MonomialIdeal.maximal_square(Q.mu))
    if entry is not None and entry.provenance == COMPLETED:
        raise TautologicalReciprocity(f"{Q}: the M_{Q.mu}^2 row was completed from this relation")
    terms = reciprocity_terms(table, Q)
    if not _materialize(Q.mu):
        verdict = vanishes(terms)
        if verdict is not None:
            return verdict
    return ratfn_sum(terms).is_zero()

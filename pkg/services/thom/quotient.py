"""Quotient variables: the map rho_{n,p}, solving for tp(l), supersymmetry and lowering."""
from collections import Counter
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence

from config.loader import ConfigLoader
from services.algebra.linform import LinForm
from services.algebra.mpoly import MPoly, mpoly_sum
from services.algebra.poles import pole_free
from services.algebra.sampling import SamplePoints, solve_exact
from services.algebra.varids import T, VarId, alpha, beta, c
from services.errors import DegreeBoundError, NotSupersymmetric, PolynomialityError, PreconditionError, RankDeficient
from services.schur.delta import c_monomial
from services.schur.expansion import schur_expand
from services.schur.partitions import partitions_of
from services.thom.forms import QuotientForm, RootForm, Summand
from utils.logger import logger

SOLVE_ROUNDS = 3


def quotient_series(alphas: Sequence[Any], betas: Sequence[Any], upto: int, one: Any = 1) -> List[Any]:
    """Coefficients c_0..c_upto of prod(1 + t*beta) / prod(1 + t*alpha).

    Works for any ring elements supporting + and * (MPoly or Fraction).
    """
    zero = one - one
    s = [one] + [zero] * upto
    for b in betas:
        for k in range(upto, 0, -1):
            s[k] = s[k] + b * s[k - 1]
    for a in alphas:
        for k in range(1, upto + 1):
            s[k] = s[k] - a * s[k - 1]
    return s


def _max_c_index(h: MPoly) -> int:
    return max((v.index for v in h.variables() if v.namespace == "c"), default=0)


def rho_at(h: MPoly, alphas: Sequence[MPoly], betas: Sequence[MPoly]) -> MPoly:
    """Substitute c_k by the degree-k coefficient of prod(1+t beta_j)/prod(1+t alpha_i)."""
    series = quotient_series(alphas, betas, _max_c_index(h), one=MPoly.constant(1))
    return h.substitute({c(k): series[k] for k in range(len(series))})


def rho(n: int, p: int, h: MPoly) -> MPoly:
    return rho_at(h, [MPoly.var(alpha(i)) for i in range(1, n + 1)], [MPoly.var(beta(j)) for j in range(1, p + 1)])


def rho_values(point: Mapping[VarId, Fraction], n: int, p: int, upto: int) -> List[Fraction]:
    """Numeric c_0..c_upto at a point of the roots."""
    return quotient_series([point[alpha(i)] for i in range(1, n + 1)],
                           [point[beta(j)] for j in range(1, p + 1)],
                           upto, one=Fraction(1))


def _swaps(var, count: int) -> List[Dict[VarId, VarId]]:
    return [{var(i): var(i + 1), var(i + 1): var(i)} for i in range(1, count)]


def _symbolic_supersymmetric(poly: MPoly, n: int, p: int) -> bool:
    """Separate symmetry in alphas and betas plus t-independence after alpha_n = beta_p = t."""
    if any(poly.rename(swap) != poly for swap in _swaps(alpha, n) + _swaps(beta, p)):
        return False
    restricted = poly.rename({alpha(n): T, beta(p): T})
    return restricted.degree_in(T) <= 0


def _beta_free(s: Summand) -> bool:
    return not any(v.namespace == "beta" for v in s.weight.variables())


def _structurally_supersymmetric(tp: RootForm) -> bool:
    """A sufficient condition read off the summands.

    Alpha swaps permute the summands, and alpha_n = beta_p = t either kills a
    summand (alpha_n is one of its roots) or leaves it free of t.
    """
    n = tp.n
    live = [s for s in tp.summands if not s.is_zero()]
    if any(s.is_infinite() or not _beta_free(s) for s in live):
        return False
    signature = tp.signature()
    for swap in _swaps(alpha, n):
        if Counter(s.rename(swap).key() for s in live) != signature:
            return False
    last = LinForm.of(alpha(n))
    line = MPoly.var(T)
    for s in live:
        if last in s.roots:
            continue
        if any(alpha(n) in r.variables() for r in s.roots):
            return False
        on_line = s.weight.rename({alpha(n): T})
        for r in s.roots:
            on_line = on_line * (line - r.to_mpoly())
        if T in on_line.variables():
            return False
    return True


def certify(tp: RootForm) -> Optional[int]:
    """Exact proof that tp is a supersymmetric polynomial.

    Returns a bound on the number of parts of its quotient form, or None when
    no bound below the degree is proved. Raises PolynomialityError or
    NotSupersymmetric otherwise.
    """
    if tp.certified:
        return tp.parts_bound
    n, p = tp.n, tp.p
    name = tp.label or "root form"
    if tp.is_materialized() or not all(_beta_free(s) for s in tp.summands if not s.is_zero()):
        poly = tp.poly
        if not _symbolic_supersymmetric(poly, n, p):
            raise NotSupersymmetric(f"{name} is not supersymmetric")
        parts = max(poly.degree_in(beta(1)), 0)
    else:
        verdict = pole_free(tp.terms())
        if verdict is False:
            raise PolynomialityError(f"{name} has a pole")
        if verdict is None:
            logger.debug(f"Pole certificate for {name} inconclusive, expanding")
            tp.poly  # raises PolynomialityError
        if not _structurally_supersymmetric(tp) and not _symbolic_supersymmetric(tp.poly, n, p):
            raise NotSupersymmetric(f"{name} is not supersymmetric")
        parts = max((len(s.roots) for s in tp.summands if not s.is_zero()), default=0)
    tp.certified = True
    tp.parts_bound = parts if tp.codim - parts <= (n + 1) * p else None
    return tp.parts_bound


def to_quotient(tp: RootForm, width: Optional[int] = None, sampler: Optional[SamplePoints] = None,
                label: str = "") -> QuotientForm:
    """The unique c-polynomial h with rho_{n,p}(h) = tp, in the Delta basis.

    tp is certified first, so h lies in the span of the sampled basis and a
    full-rank system of exact evaluations pins it down.
    """
    n, p = tp.n, tp.p
    name = tp.label or "root form"
    degree = tp.codim
    if degree >= (n + 1) * (p + 1):
        raise DegreeBoundError(f"degree {degree} not below (n+1)(p+1) = {(n + 1) * (p + 1)}")
    parts = certify(tp)
    basis = partitions_of(degree, max_parts=parts)
    sampler = sampler or SamplePoints()
    count = len(basis) + ConfigLoader.get("engine.extra_samples", 4)
    for _ in range(SOLVE_ROUNDS):
        rows, rhs = [], []
        for pt in sampler.regular_points([tp.evaluate], tp.variables(), count):
            values = rho_values(pt, n, p, degree)
            rows.append([_product(values, lam.parts) for lam in basis])
            rhs.append(tp.evaluate(pt))
        try:
            solution = solve_exact(rows, rhs)
            break
        except RankDeficient as e:
            logger.debug(f"{name}: {e}, resampling with {2 * count} points")
            count *= 2
    else:
        raise RankDeficient(f"{name}: no full-rank sample system after {SOLVE_ROUNDS} rounds")
    if solution is None:
        raise NotSupersymmetric(f"{name} is not in the image of rho_{{{n},{p}}}")
    h = mpoly_sum(c_monomial(lam.parts) * x for lam, x in zip(basis, solution))
    if tp.is_materialized() and rho(n, p, h) != tp.poly:
        raise NotSupersymmetric(f"{name}: rho(h) differs from the root form")
    logger.debug(f"Solved quotient form of {name} over {len(basis)} partitions")
    return QuotientForm(p - n, schur_expand(h), width=width, label=label or tp.label)


def _product(values: List[Fraction], parts) -> Fraction:
    result = Fraction(1)
    for k in parts:
        result *= values[k]
    return result


def supersymmetry_check(tp: RootForm) -> bool:
    """Whether tp is a polynomial, symmetric in the alphas and in the betas, and free of t after alpha_n = beta_p = t."""
    try:
        certify(tp)
    except (PolynomialityError, NotSupersymmetric) as e:
        logger.debug(f"Supersymmetry fails: {e}")
        return False
    return True


def lower(h: MPoly, m: int) -> MPoly:
    """The lowering operator on width-m c-monomials: c^K -> c^{K-1}, c_0 = 1, c_{-1} = 0."""
    pieces = []
    for mono, coeff in h.terms():
        indices: List[int] = []
        for v, e in mono:
            if v.namespace != "c":
                raise PreconditionError(f"{v} is not a quotient variable")
            indices.extend([v.index] * e)
        if len(indices) > m:
            raise PreconditionError(f"monomial with {len(indices)} factors exceeds width {m}")
        indices.extend([0] * (m - len(indices)))
        pieces.append(c_monomial([k - 1 for k in indices]) * coeff)
    return mpoly_sum(pieces)


def lower_form(tp: QuotientForm, m: Optional[int] = None, times: int = 1) -> QuotientForm:
    m = m or tp.width
    h = tp.chern
    for _ in range(times):
        h = lower(h, m)
    return QuotientForm(tp.l - times, schur_expand(h), width=m, label=tp.label)

"""Iterated residues in the region |z_1| << ... << |z_mu| and their comparison with localization."""
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.combinatorics import Permutation

from config.loader import ConfigLoader
from services.algebra.linform import LinForm
from services.algebra.mpoly import MPoly, mpoly_sum
from services.algebra.poles import vanishes
from services.algebra.ratfn import RatFn, asymmetrize
from services.algebra.sampling import SamplePoints
from services.algebra.varids import alpha, z
from services.errors import IllPosedExpansion, PreconditionError
from services.euler.algebras import AlgebraId
from services.euler.tables import EulerTable
from services.ideals.ideals import MonomialIdeal
from services.residue.generating import GeneratingFunction, discriminant, generating_function
from services.schur.delta import c_monomial
from services.schur.expansion import schur_expand
from services.thom.engine import shared_engine
from services.thom.forms import QuotientForm
from utils.logger import logger

Exponents = Tuple[int, ...]


def _split(form: LinForm) -> Tuple[int, Fraction, MPoly]:
    """form = u * z_s + rest with z_s dominant: returns (s, u, -rest/u)."""
    if form.is_zero():
        raise IllPosedExpansion("zero form has no dominant variable")
    v, u = form.dominant()
    rest = form - LinForm.of(v, u)
    return v.index, u, rest.to_mpoly() * (-1 / u)


class LaurentSlice:
    """Truncated Laurent expansion: exponent vector over z_1..z_mu -> exact coefficient."""

    def __init__(self, mu: int, terms: Dict[Exponents, Fraction], truncation: int):
        self.mu = mu
        self.terms = {e: Fraction(a) for e, a in terms.items() if a}
        self.truncation = truncation

    def coefficient(self, exponents: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exponents), Fraction(0))

    def residue(self, l: int) -> MPoly:
        """Coefficient of prod z_i^{-1} after multiplying by prod z_i^l D_i, D_i = sum_k c_k z_i^{-k}."""
        return mpoly_sum(c_monomial([k + l + 1 for k in e]) * a for e, a in self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)


def laurent_expand(f: GeneratingFunction, truncation: int, prefactor: Optional[MPoly] = None) -> LaurentSlice:
    """Expand prefactor * f with every 1/omega a geometric series in its dominant variable.

    The geometric orders of all denominator factors together stay <= truncation.
    """
    mu = f.mu
    splits = [_split(form) for form in f.denominator]
    numerator = f.numerator * f.scalar
    if prefactor is not None:
        numerator = numerator * prefactor
    terms: Dict[Exponents, Fraction] = {}

    def accumulate(index: int, budget: int, poly: MPoly, shift: List[int]) -> None:
        if index == len(splits):
            for mono, coeff in poly.terms():
                exps = dict(mono)
                key = tuple(exps.get(z(i), 0) - shift[i - 1] for i in range(1, mu + 1))
                terms[key] = terms.get(key, 0) + coeff
            return
        s, u, x = splits[index]
        power = MPoly.constant(1 / u)
        for k in range(budget + 1):
            moved = list(shift)
            moved[s - 1] += k + 1
            accumulate(index + 1, budget - k, poly * power, moved)
            power = power * x

    accumulate(0, truncation, numerator, [0] * mu)
    return LaurentSlice(mu, terms, truncation)


def laurent_truncation(k: GeneratingFunction, l: int) -> int:
    """A geometric order that keeps every term reaching RES(k * dis_mu * prod z_i^l D_i).

    Each order unit lowers sum i*e_i by at least one, and a term survives only
    if every e_i >= -(l+1).
    """
    mu = k.mu
    top = k.numerator.degree() + mu * (mu - 1) // 2
    return (mu - 1) * top + ((l + 1) * mu * (mu - 1) + 1) // 2


def laurent_residue(k: GeneratingFunction, l: int) -> MPoly:
    """The residue read off one full Laurent slice, independent of the variable-by-variable extraction."""
    if l < 0:
        raise PreconditionError(f"l must be nonnegative, got {l}")
    return laurent_expand(k, laurent_truncation(k, l), prefactor=discriminant(k.mu)).residue(l)


def _complete_homogeneous(xs: Sequence[MPoly], top: int) -> List[MPoly]:
    h = [MPoly.constant(1)] + [MPoly()] * top
    for x in xs:
        for k in range(1, top + 1):
            h[k] = h[k] + x * h[k - 1]
    return h


def _raw_residue(k: GeneratingFunction, l: int, truncation: Optional[int]) -> MPoly:
    """Extract the residue one variable at a time, from z_mu down to z_1."""
    mu = k.mu
    state: Dict[Tuple[LinForm, ...], MPoly] = {
        tuple(sorted(k.denominator)): k.numerator * discriminant(mu) * k.scalar
    }
    for s in range(mu, 0, -1):
        v = z(s)
        following: Dict[Tuple[LinForm, ...], List[MPoly]] = {}
        for forms, numerator in state.items():
            if numerator.is_zero():
                continue
            own = [_split(form) for form in forms if form.dominant()[0] == v]
            rest = tuple(form for form in forms if form.dominant()[0] != v)
            pieces = numerator.coefficients_in(v)
            top = max(pieces) - len(own) + l + 1
            if truncation is not None:
                top = min(top, truncation)
            if top < 0:
                continue
            h = _complete_homogeneous([x for _, _, x in own], top)
            scale = Fraction(1)
            for _, u, _ in own:
                scale /= u
            for j, part in pieces.items():
                for K in range(min(top, j - len(own) + l + 1) + 1):
                    exponent = j - len(own) - K
                    following.setdefault(rest, []).append(part * h[K] * c_monomial([exponent + l + 1]) * scale)
        state = {forms: mpoly_sum(parts) for forms, parts in following.items()}
    leftover = [forms for forms, poly in state.items() if forms and not poly.is_zero()]
    if leftover:
        raise IllPosedExpansion(f"denominator forms {leftover} were never expanded")
    return state.get((), MPoly())


def iterated_residue(k: GeneratingFunction, l: int, truncation: Optional[int] = None) -> MPoly:
    """RES(k * dis_mu * prod z_i^l D_i), signed so the largest partition has a positive coefficient."""
    if l < 0:
        raise PreconditionError(f"l must be nonnegative, got {l}")
    if truncation is None:
        truncation = ConfigLoader.get("residue.truncation")
    h = _raw_residue(k, l, truncation)
    expansion = schur_expand(h)
    if not expansion.is_zero() and expansion.leading()[1] < 0:
        h = -h
    logger.debug(f"Residue of {k.label or 'k'} at l={l}: {len(h)} terms")
    return h


@lru_cache(maxsize=None)
def residue_tp(Q: AlgebraId, l: int) -> QuotientForm:
    h = iterated_residue(generating_function(Q), l)
    return QuotientForm(l, schur_expand(h), width=Q.mu, label=f"RES {Q.compact}")


def residue_differences(Q: AlgebraId, l_max: int, table: Optional[EulerTable] = None) -> List[str]:
    """One line per l where the residue and the localization disagree."""
    engine = shared_engine(table)
    diffs = []
    for l in range(l_max + 1):
        by_residue = residue_tp(Q, l).expansion
        by_localization = engine.localized_quotient_tp(Q, l).expansion
        if by_residue != by_localization:
            diffs.append(f"{Q} l={l}: residue {by_residue} != localization {by_localization}")
    return diffs


def residue_vs_localization(Q: AlgebraId, l_max: int, table: Optional[EulerTable] = None) -> bool:
    diffs = residue_differences(Q, l_max, table)
    for line in diffs:
        logger.warning(line)
    return not diffs


def asym_consistency(Q: AlgebraId, table: EulerTable, sampler: Optional[SamplePoints] = None) -> bool:
    """Asym_mu(k_Q) * e(Q, M_mu^2)|_{alpha := z} = +-dis_mu, exactly.

    Up to euler.materialize_max_mu the product is expanded. Above it the sign is
    read at one point and Asym_mu(k_Q) - sign * dis_mu / e is shown to vanish
    by its poles.
    """
    mu = Q.mu
    k = generating_function(Q)
    e = table.get(Q, MonomialIdeal.maximal_square(mu)).value
    if e.is_infinite():
        return False
    dis = discriminant(mu)
    f = k.as_ratfn()
    e_z = e.rename({alpha(i): z(i) for i in range(1, mu + 1)})
    target = RatFn.from_poly(dis)
    if mu <= ConfigLoader.get("euler.materialize_max_mu", 3):
        product = asymmetrize(f, mu) * e_z
        return product == target or product == -target
    terms = [f.rename({z(i + 1): z(j + 1) for i, j in enumerate(sigma)}) * Permutation(list(sigma)).signature()
             for sigma in permutations(range(mu))]

    def product(point) -> Fraction:
        return sum((t.evaluate(point) for t in terms), Fraction(0)) * e_z.evaluate(point)

    sampler = sampler or SamplePoints()
    point = sampler.regular_points([product], [z(i) for i in range(1, mu + 1)], 1)[0]
    value, expected = product(point), dis.evaluate(point)
    if value not in (expected, -expected) or not expected:
        return False
    sign = 1 if value == expected else -1
    verdict = vanishes(terms + [target / e_z * (-sign)])
    if verdict is None:
        logger.debug(f"Asymmetrization of {Q}: poles out of reach, expanding")
        return asymmetrize(f, mu) * e_z == target * sign
    return verdict

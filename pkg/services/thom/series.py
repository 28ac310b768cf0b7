"""Thom series: the l-independent generating form of tp_Q(l) in the d-variables."""
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from services.algebra.mpoly import mpoly_sum
from services.errors import DStabilityError, PreconditionError
from services.schur.delta import c_monomial
from services.schur.expansion import schur_expand
from services.thom.forms import QuotientForm
from services.thom.quotient import lower_form
from utils.logger import logger

DMonomial = Tuple[int, ...]


def _format_index(i: int) -> str:
    return f"d_{i}" if i >= 0 else f"d_{{{i}}}"


def format_d_monomial(K: DMonomial) -> str:
    """Factors in increasing index order, e.g. d_{-1}*d_1 or d_0^2."""
    factors: List[str] = []
    for i in sorted(set(K)):
        e = K.count(i)
        factors.append(_format_index(i) if e == 1 else f"{_format_index(i)}^{e}")
    return "*".join(factors)


class ThomSeries:
    """sum_K a_K d_{K_1} ... d_{K_mu}, keys stored in decreasing order, max index <= index_bound."""

    def __init__(self, mu: int, terms: Dict[DMonomial, Fraction], index_bound: int, label: str = ""):
        self.mu = mu
        self.terms = {tuple(sorted(K, reverse=True)): Fraction(a) for K, a in terms.items() if a}
        self.index_bound = index_bound
        self.label = label
        for K in self.terms:
            if len(K) != mu:
                raise PreconditionError(f"d-monomial {K} does not have {mu} factors")

    @property
    def degree(self) -> Optional[int]:
        """Sum of the indices, gamma - mu."""
        return sum(next(iter(self.terms))) if self.terms else None

    def coefficient(self, K: DMonomial) -> Fraction:
        return self.terms.get(tuple(sorted(K, reverse=True)), Fraction(0))

    def sorted_terms(self) -> List[Tuple[DMonomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: (item[0][0], item[0]))

    def specialize(self, l: int) -> QuotientForm:
        """tp_Q(l) from the series: d_i = c_{i+l+1}; exact when l is small enough for the bound."""
        h = mpoly_sum(c_monomial([k + l + 1 for k in K]) * a for K, a in self.terms.items())
        return QuotientForm(l, schur_expand(h), width=self.mu, label=self.label)

    def __eq__(self, other) -> bool:
        return isinstance(other, ThomSeries) and self.mu == other.mu and self.terms == other.terms

    __hash__ = None

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for K, a in self.sorted_terms():
            body = format_d_monomial(K)
            text = body if a == 1 else f"{a}*{body}"
            if pieces and text.startswith("-"):
                pieces.append(f"- {text[1:]}")
            elif pieces:
                pieces.append(f"+ {text}")
            else:
                pieces.append(text)
        return " ".join(pieces) + " + ..."

    def __repr__(self) -> str:
        return f"ThomSeries({self.label}, mu={self.mu}: {self})"


def _c_indices(mono, mu: int) -> List[int]:
    indices: List[int] = []
    for v, e in mono:
        indices.extend([v.index] * e)
    if len(indices) > mu:
        raise PreconditionError(f"c-monomial with {len(indices)} factors exceeds width {mu}")
    return sorted(indices + [0] * (mu - len(indices)), reverse=True)


def required_l(mu: int, gamma: int, index_bound: int) -> int:
    """The smallest l at which every d-monomial with indices <= index_bound is visible."""
    lowest = (gamma - mu) - (mu - 1) * index_bound
    return max(0, -1 - lowest)


def series_from_tp(tp: QuotientForm, mu: int, index_bound: int, label: str = "") -> ThomSeries:
    """Read off a_K from tp_Q(l): c^k with width-mu indices k gives K = k - l - 1."""
    shift = tp.l + 1
    terms: Dict[DMonomial, Fraction] = {}
    for mono, coeff in tp.chern.terms():
        K = tuple(k - shift for k in _c_indices(mono, mu))
        if K[0] <= index_bound:
            terms[K] = terms.get(K, 0) + coeff
    return ThomSeries(mu, terms, index_bound, label=label or tp.label)


def assemble_series(tp_of: Callable[[int], QuotientForm], mu: int, gamma: int, index_bound: int,
                    label: str = "") -> ThomSeries:
    """Build the series from tp_Q(l) at the required l, after checking that tp(l) lowers to tp(l-1)."""
    l = required_l(mu, gamma, index_bound)
    top = tp_of(l)
    if l > 0:
        lowered = lower_form(top, m=mu)
        below = tp_of(l - 1)
        if lowered.expansion != below.expansion:
            raise DStabilityError(f"{label}: tp({l}) lowered is {lowered.expansion}, tp({l - 1}) is {below.expansion}")
    logger.info(f"Assembled Thom series of {label or 'algebra'} from l={l} (index bound {index_bound})")
    return series_from_tp(top, mu, index_bound, label=label)

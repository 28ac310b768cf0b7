"""Thom polynomials in root form and in quotient variables."""
from collections import Counter
from fractions import Fraction
from typing import Any, List, Mapping, Optional, Sequence, Tuple, Union

from services.algebra.linform import LinForm
from services.algebra.mpoly import MPoly
from services.algebra.ratfn import RatFn, ratfn_sum, resultant_ratfn
from services.algebra.varids import VarId, alpha, beta
from services.errors import PolynomialityError
from services.schur.expansion import SchurExpansion
from utils.logger import logger


def betas(p: int) -> List[LinForm]:
    return [LinForm.of(beta(j)) for j in range(1, p + 1)]


class Summand:
    """weight * res(B_p | roots), with the weight free of the betas.

    A weight that does involve the betas (an expanded polynomial) comes with no roots.
    """

    __slots__ = ("weight", "roots")

    def __init__(self, weight: RatFn, roots: Sequence[LinForm] = ()):
        self.weight = weight
        self.roots: Tuple[LinForm, ...] = tuple(sorted(roots))

    def is_zero(self) -> bool:
        return self.weight.is_zero()

    def is_infinite(self) -> bool:
        return self.weight.is_infinite()

    def to_ratfn(self, p: int) -> RatFn:
        return self.weight * resultant_ratfn(betas(p), self.roots)

    def evaluate(self, point: Mapping[VarId, Fraction], p: int) -> Fraction:
        value = self.weight.evaluate(point)
        if not value:
            return value
        at = [r.evaluate(point) for r in self.roots]
        for j in range(1, p + 1):
            b = point[beta(j)]
            for x in at:
                value *= b - x
        return value

    def rename(self, mapping: Mapping[VarId, VarId]) -> "Summand":
        return Summand(self.weight.rename(mapping), [r.rename(mapping) for r in self.roots])

    def key(self) -> Tuple[Any, ...]:
        """Equal keys mean equal summands."""
        w = self.weight
        return w.coeff, frozenset(w.num.items()), frozenset(w.den.items()), self.roots

    def __repr__(self) -> str:
        return f"Summand({self.weight} | {', '.join(map(str, self.roots))})"


class RootForm:
    """Tp(n, p) as a sum of summands in the Chern roots.

    The polynomial is expanded lazily; evaluation at a point never needs it.
    """

    def __init__(self, n: int, p: int, summands: Sequence[Union[Summand, RatFn]], label: str = "",
                 codim: Optional[int] = None, poly: Optional[MPoly] = None):
        self.n = n
        self.p = p
        self.summands: List[Summand] = [s if isinstance(s, Summand) else Summand(s) for s in summands]
        self.label = label
        self._codim = codim
        self._poly = poly
        self.certified = False
        self.parts_bound: Optional[int] = None

    @classmethod
    def from_poly(cls, n: int, p: int, poly: MPoly, label: str = "") -> "RootForm":
        return cls(n, p, [RatFn.from_poly(poly)], label=label, poly=poly)

    def variables(self) -> List[VarId]:
        return [alpha(i) for i in range(1, self.n + 1)] + [beta(j) for j in range(1, self.p + 1)]

    def evaluate(self, point: Mapping[VarId, Fraction]) -> Fraction:
        if self._poly is not None:
            return self._poly.evaluate(point)
        return sum((s.evaluate(point, self.p) for s in self.summands if not s.is_infinite()), Fraction(0))

    def terms(self) -> List[Tuple[RatFn, Tuple[LinForm, ...]]]:
        return [(s.weight, s.roots) for s in self.summands if not s.is_infinite()]

    def signature(self) -> Counter:
        return Counter(s.key() for s in self.summands if not s.is_zero())

    def is_materialized(self) -> bool:
        return self._poly is not None

    @property
    def poly(self) -> MPoly:
        """The expanded polynomial, certified by exact division."""
        if self._poly is None:
            total = ratfn_sum(s.to_ratfn(self.p) for s in self.summands if not s.is_infinite())
            try:
                self._poly = total.to_poly()
            except PolynomialityError as e:
                raise PolynomialityError(f"{self.label or 'root form'}: {e}") from e
            logger.debug(f"Materialized {self.label or 'root form'} with {len(self._poly)} terms")
        return self._poly

    @property
    def codim(self) -> int:
        if self._codim is None:
            if self._poly is not None:
                self._codim = self._poly.degree()
            else:
                for s in self.summands:
                    if not s.is_zero() and not s.is_infinite():
                        self._codim = s.weight.degree() + self.p * len(s.roots)
                        break
                else:
                    self._codim = 0
        return self._codim

    def __repr__(self) -> str:
        return f"RootForm({self.label}, n={self.n}, p={self.p})"


class QuotientForm:
    """tp(l) in quotient variables, stored in the Delta basis."""

    def __init__(self, l: int, expansion: SchurExpansion, width: Optional[int] = None, label: str = ""):
        self.l = l
        self.expansion = expansion
        self.width = width if width is not None else expansion.width()
        self.label = label

    @property
    def codim(self) -> int:
        return self.expansion.weight() if not self.expansion.is_zero() else 0

    @property
    def chern(self) -> MPoly:
        return self.expansion.to_mpoly()

    def __eq__(self, other) -> bool:
        return isinstance(other, QuotientForm) and self.l == other.l and self.expansion == other.expansion

    __hash__ = None

    def __repr__(self) -> str:
        return f"QuotientForm({self.label}, l={self.l}: {self.expansion})"


ThomPolynomial = Union[RootForm, QuotientForm]

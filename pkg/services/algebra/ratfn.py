"""Rational functions with factored denominators, plus an Infinite value."""
from fractions import Fraction
from itertools import permutations
from typing import Any, Dict, Iterable, List, Mapping, Optional, Tuple

from sympy.combinatorics import Permutation

from services.algebra.linform import LinForm
from services.algebra.mpoly import MPoly, exact_divide, mpoly_product, mpoly_sum
from services.algebra.varids import VarId, alpha, z
from services.errors import IndeterminateForm, NotDivisible, PolynomialityError, PreconditionError

Factors = Dict[MPoly, int]


def primitive_part(poly: MPoly) -> Tuple[Fraction, MPoly]:
    """Split poly = scale * prim, prim with coprime integer coefficients and positive leading coefficient."""
    return poly.primitive()


class RatFn:
    """coeff * prod(num) / prod(den); factors are primitive, non-constant polynomials."""

    __slots__ = ("coeff", "num", "den", "infinite")

    def __init__(self, coeff: Any = 0, num: Optional[Mapping[MPoly, int]] = None,
                 den: Optional[Mapping[MPoly, int]] = None, infinite: bool = False):
        self.infinite = infinite
        self.coeff = Fraction(coeff)
        self.num: Factors = {}
        self.den: Factors = {}
        if infinite:
            return
        if not self.coeff:
            return
        for factors, sign in ((num or {}, 1), (den or {}, -1)):
            for f, m in factors.items():
                self._absorb(f, sign * m)

    def _absorb(self, poly: MPoly, multiplicity: int) -> None:
        if not self.coeff and not poly.is_zero():
            return
        if poly.is_zero():
            if multiplicity > 0:
                self.coeff = Fraction(0)
                self.num, self.den = {}, {}
                return
            raise ZeroDivisionError("zero denominator factor")
        if poly.is_constant():
            self.coeff *= poly.constant_value() ** multiplicity
            return
        scale, prim = primitive_part(poly)
        self.coeff *= scale ** multiplicity
        self._absorb_primitive(prim, multiplicity)

    # -- constructors -----------------------------------------------------
    @classmethod
    def INF(cls) -> "RatFn":
        return cls(infinite=True)

    @classmethod
    def constant(cls, value: Any) -> "RatFn":
        return cls(value)

    @classmethod
    def from_poly(cls, poly: MPoly) -> "RatFn":
        if poly.is_zero():
            return cls(0)
        return cls(1, num={poly: 1})

    @classmethod
    def from_factors(cls, num: Iterable[MPoly] = (), den: Iterable[MPoly] = (), coeff: Any = 1) -> "RatFn":
        result = cls(coeff)
        for f in num:
            if result.is_zero():
                return result
            result._absorb(f, 1)
        for f in den:
            result._absorb(f, -1)
        return result

    @classmethod
    def from_linear(cls, form: LinForm) -> "RatFn":
        return cls.from_poly(form.to_mpoly())

    def _copy(self) -> "RatFn":
        out = RatFn.__new__(RatFn)
        out.coeff, out.infinite = self.coeff, self.infinite
        out.num, out.den = dict(self.num), dict(self.den)
        return out

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.infinite and not self.coeff

    def is_infinite(self) -> bool:
        return self.infinite

    def is_polynomial(self) -> bool:
        return not self.infinite and not self.den

    def numerator(self) -> MPoly:
        if self.infinite:
            raise IndeterminateForm("Infinite has no numerator")
        return mpoly_product(f ** m for f, m in self._sorted(self.num)) * self.coeff

    def denominator(self) -> MPoly:
        return mpoly_product(f ** m for f, m in self._sorted(self.den))

    @staticmethod
    def _sorted(factors: Factors) -> List[Tuple[MPoly, int]]:
        return sorted(factors.items(), key=lambda item: item[0].sort_key())

    def degree(self) -> int:
        """Total degree of numerator minus denominator (factors assumed homogeneous)."""
        return (sum(f.degree() * m for f, m in self.num.items())
                - sum(f.degree() * m for f, m in self.den.items()))

    def is_homogeneous(self) -> bool:
        return all(f.is_homogeneous() for f in list(self.num) + list(self.den))

    def variables(self) -> set:
        found = set()
        for f in list(self.num) + list(self.den):
            found |= f.variables()
        return found

    # -- field operations -------------------------------------------------
    @staticmethod
    def _coerce(other: Any) -> Optional["RatFn"]:
        if isinstance(other, RatFn):
            return other
        if isinstance(other, MPoly):
            return RatFn.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return RatFn(other)
        return None

    def __mul__(self, other: Any) -> "RatFn":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.infinite or other.infinite:
            if self.is_zero() or other.is_zero():
                raise IndeterminateForm("Infinite times zero")
            return RatFn.INF()
        if self.is_zero() or other.is_zero():
            return RatFn(0)
        out = self._copy()
        out.coeff *= other.coeff
        for f, m in other.num.items():
            out._absorb_primitive(f, m)
        for f, m in other.den.items():
            out._absorb_primitive(f, -m)
        return out

    __rmul__ = __mul__

    def _absorb_primitive(self, prim: MPoly, multiplicity: int) -> None:
        balance = self.num.get(prim, 0) - self.den.get(prim, 0) + multiplicity
        self.num.pop(prim, None)
        self.den.pop(prim, None)
        if balance > 0:
            self.num[prim] = balance
        elif balance < 0:
            self.den[prim] = -balance

    def reciprocal(self) -> "RatFn":
        if self.infinite:
            return RatFn(0)
        if self.is_zero():
            return RatFn.INF()
        out = RatFn.__new__(RatFn)
        out.infinite = False
        out.coeff = 1 / self.coeff
        out.num, out.den = dict(self.den), dict(self.num)
        return out

    def __truediv__(self, other: Any) -> "RatFn":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() and other.is_zero():
            raise IndeterminateForm("0/0")
        return self * other.reciprocal()

    def __rtruediv__(self, other: Any) -> "RatFn":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int) -> "RatFn":
        if exponent < 0:
            return self.reciprocal() ** (-exponent)
        if exponent == 0:
            if self.infinite:
                raise IndeterminateForm("Infinite to the power 0")
            return RatFn(1)
        if self.infinite or self.is_zero():
            return self._copy()
        out = RatFn.__new__(RatFn)
        out.infinite = False
        out.coeff = self.coeff ** exponent
        out.num = {f: m * exponent for f, m in self.num.items()}
        out.den = {f: m * exponent for f, m in self.den.items()}
        return out

    def __neg__(self) -> "RatFn":
        out = self._copy()
        out.coeff = -out.coeff
        return out

    def __add__(self, other: Any) -> "RatFn":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ratfn_sum([self, other])

    __radd__ = __add__

    def __sub__(self, other: Any) -> "RatFn":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ratfn_sum([self, -other])

    def __rsub__(self, other: Any) -> "RatFn":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ratfn_sum([other, -self])

    def __eq__(self, other: Any) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.infinite or other.infinite:
            return self.infinite and other.infinite
        if self.den == other.den:
            return self.numerator() == other.numerator()
        return self.numerator() * other.denominator() == other.numerator() * self.denominator()

    __hash__ = None

    # -- evaluation, substitution ----------------------------------------
    def evaluate(self, point: Mapping[VarId, Any]) -> Fraction:
        if self.infinite:
            raise IndeterminateForm("cannot evaluate Infinite")
        value = self.coeff
        if not value:
            return value
        for f, m in self.num.items():
            value *= f.evaluate(point) ** m
        for f, m in self.den.items():
            value /= f.evaluate(point) ** m
        return value

    def substitute(self, assignment: Mapping[VarId, MPoly], partial: bool = True) -> "RatFn":
        if self.infinite:
            return RatFn.INF()
        num = [f.substitute(assignment, partial=partial) for f, m in self.num.items() for _ in range(m)]
        den = [f.substitute(assignment, partial=partial) for f, m in self.den.items() for _ in range(m)]
        vanishing = any(f.is_zero() for f in den)
        if vanishing:
            if any(f.is_zero() for f in num) or not self.coeff:
                raise IndeterminateForm("substitution gives 0/0")
            return RatFn.INF()
        return RatFn.from_factors(num, den, self.coeff)

    def rename(self, mapping: Mapping[VarId, VarId]) -> "RatFn":
        if self.infinite or self.is_zero():
            return self._copy()
        out = RatFn(self.coeff)
        for f, m in self.num.items():
            out._absorb(f.rename(mapping), m)
        for f, m in self.den.items():
            out._absorb(f.rename(mapping), -m)
        return out

    def to_poly(self) -> MPoly:
        """The polynomial this function equals; PolynomialityError when it is not one."""
        if self.infinite:
            raise PolynomialityError("Infinite is not a polynomial")
        if not self.den:
            return self.numerator()
        value = self.numerator()
        for f, m in self._sorted(self.den):
            for _ in range(m):
                try:
                    value = exact_divide(value, f)
                except NotDivisible as e:
                    raise PolynomialityError(f"denominator factor {f} does not divide") from e
        return value

    # -- display ----------------------------------------------------------
    def __str__(self) -> str:
        if self.infinite:
            return "INF"
        if not self.coeff:
            return "0"
        if not self.num and not self.den:
            c = self.coeff
            return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"

        def render(factors: Factors) -> List[str]:
            parts = []
            for f, m in self._sorted(factors):
                body = f"({f})" if len(f) > 1 else str(f)
                parts.append(body if m == 1 else f"{body}^{m}")
            return parts

        pieces = render(self.num)
        c = self.coeff
        if c != 1 or not pieces:
            if c == -1 and pieces:
                pieces[0] = "-" + pieces[0]
            else:
                text = str(c.numerator) if c.denominator == 1 else f"({c.numerator}/{c.denominator})"
                pieces.insert(0, text)
        text = "*".join(pieces)
        if self.den:
            text += "/(" + "*".join(render(self.den)) + ")"
        return text

    def __repr__(self) -> str:
        return f"RatFn({self})"


def _reduce(numerator: MPoly, denominator: Factors) -> RatFn:
    """Cancel denominator factors that divide the numerator exactly."""
    remaining: Factors = {}
    for f, m in RatFn._sorted(denominator):
        left = m
        while left and not numerator.is_zero():
            try:
                numerator = exact_divide(numerator, f)
            except NotDivisible:
                break
            left -= 1
        if left:
            remaining[f] = left
    if numerator.is_zero():
        return RatFn(0)
    result = RatFn.from_poly(numerator)
    for f, m in remaining.items():
        result._absorb_primitive(f, -m)
    return result


def ratfn_sum(terms: Iterable[Any]) -> RatFn:
    """Sum over a common denominator, then cancel factors by exact division."""
    finite: List[RatFn] = []
    infinite = 0
    for term in terms:
        term = RatFn._coerce(term)
        if term.infinite:
            infinite += 1
        elif not term.is_zero():
            finite.append(term)
    if infinite:
        if infinite > 1:
            raise IndeterminateForm("sum of two Infinite values")
        return RatFn.INF()
    if not finite:
        return RatFn(0)
    if len(finite) == 1:
        return finite[0]._copy()
    common: Factors = {}
    for term in finite:
        for f, m in term.den.items():
            common[f] = max(common.get(f, 0), m)
    pieces = []
    for term in finite:
        cofactor = [f ** (m - term.den.get(f, 0)) for f, m in common.items() if m > term.den.get(f, 0)]
        pieces.append(term.numerator() * mpoly_product(cofactor))
    return _reduce(mpoly_sum(pieces), common)


def resultant_ratfn(S: Iterable[LinForm], T: Iterable[LinForm]) -> RatFn:
    """res(S|T) kept as a product of linear factors."""
    T = list(T)
    return RatFn.from_factors((s - t).to_mpoly() for s in S for t in T)


def alpha_permutation(sigma: Tuple[int, ...]) -> Dict[VarId, VarId]:
    """Mapping alpha_i -> alpha_{sigma(i)} for a 1-based permutation tuple."""
    return {alpha(i + 1): alpha(j) for i, j in enumerate(sigma)}


def symmetrize(f: RatFn, n: int, stabilizer_order: int) -> RatFn:
    if stabilizer_order <= 0:
        raise PreconditionError("stabilizer order must be positive")
    terms = [f.rename(alpha_permutation(sigma)) for sigma in permutations(range(1, n + 1))]
    return ratfn_sum(terms) * Fraction(1, stabilizer_order)


def asymmetrize(f: RatFn, mu: int) -> RatFn:
    terms = []
    for sigma in permutations(range(mu)):
        sign = Permutation(list(sigma)).signature()
        mapping = {z(i + 1): z(j + 1) for i, j in enumerate(sigma)}
        terms.append(f.rename(mapping) * sign)
    return ratfn_sum(terms)

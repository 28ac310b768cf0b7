"""Multivariate polynomials with exact rational coefficients.

MPoly is a thin immutable wrapper around a sympy PolyElement over QQ. The ring
is chosen from the variables in play, so polynomials in different variable
sets combine by lifting both into the ring over the union.
"""
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Any, Dict, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Tuple

from sympy import Symbol
from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing, ring

from services.algebra.varids import NAMESPACE_RANK, VarId
from services.errors import MissingAssignment, NotDivisible

Monomial = Tuple[Tuple[VarId, int], ...]
ONE_MONOMIAL: Monomial = ()

_SENTINEL = (10, 0, 0)

# Generator of the ring that holds constants; never a real variable.
_PLACEHOLDER = VarId("t", 0)


class Frame(NamedTuple):
    """A sympy ring together with the VarId behind each generator."""
    ring: PolyRing
    gens: Tuple[VarId, ...]
    index: Dict[VarId, int]


@lru_cache(maxsize=None)
def frame(variables: Tuple[VarId, ...]) -> Frame:
    """QQ[variables] in graded-lex order; variables come sorted, earlier ones heavier.

    The constant ring still needs a generator, so it gets a placeholder.
    """
    gens = variables or (_PLACEHOLDER,)
    R = ring([Symbol(f"{v.namespace}_{v.index}") for v in gens], QQ, grlex)[0]
    return Frame(R, gens, {v: i for i, v in enumerate(gens)})


def _union(*frames: Frame) -> Frame:
    first = frames[0]
    if all(f.gens == first.gens for f in frames[1:]):
        return first
    return frame(tuple(sorted({v for f in frames for v in f.gens} - {_PLACEHOLDER})))


def mono_from_dict(exps: Mapping[VarId, int]) -> Monomial:
    return tuple(sorted((v, e) for v, e in exps.items() if e))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _descending_key(m: Monomial) -> tuple:
    body = tuple((NAMESPACE_RANK[v.namespace], v.index, -e) for v, e in m)
    return (-mono_degree(m), body + (_SENTINEL,))


def to_qq(value: Any):
    if isinstance(value, QQ.dtype):
        return value
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Rational):
        return QQ(int(value.numerator), int(value.denominator))
    raise TypeError(f"not an exact rational: {value!r}")


def to_fraction(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def _format_coeff(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_monomial(m: Monomial) -> str:
    return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in m)


class MPoly:
    """Immutable polynomial; never mutates the wrapped PolyElement."""

    __slots__ = ("_p", "_frame", "_hash")

    def __init__(self, terms: Optional[Mapping[Monomial, Any]] = None):
        terms = terms or {}
        fr = frame(tuple(sorted({v for m in terms for v, e in m if e})))
        collected: Dict[Tuple[int, ...], Any] = {}
        for m, coeff in terms.items():
            expv = [0] * len(fr.gens)
            for v, e in m:
                expv[fr.index[v]] += e
            key = tuple(expv)
            collected[key] = collected.get(key, QQ.zero) + to_qq(coeff)
        self._p = fr.ring.from_dict({k: c for k, c in collected.items() if c})
        self._frame = fr
        self._hash = None

    @classmethod
    def wrap(cls, p: PolyElement, fr: Frame) -> "MPoly":
        poly = cls.__new__(cls)
        poly._p = p
        poly._frame = fr
        poly._hash = None
        return poly

    @classmethod
    def constant(cls, value: Any) -> "MPoly":
        fr = frame(())
        return cls.wrap(fr.ring.ground_new(to_qq(value)), fr)

    @classmethod
    def var(cls, v: VarId, exponent: int = 1) -> "MPoly":
        return cls({((v, exponent),) if exponent else ONE_MONOMIAL: 1})

    @classmethod
    def monomial(cls, exps: Mapping[VarId, int], coeff: Any = 1) -> "MPoly":
        return cls({mono_from_dict(exps): coeff})

    def lift(self, fr: Frame) -> PolyElement:
        """The wrapped element moved into a larger ring."""
        if fr.ring == self._frame.ring:
            return self._p
        return self._p.set_ring(fr.ring)

    # -- inspection -------------------------------------------------------
    def _monomial(self, expv: Tuple[int, ...]) -> Monomial:
        return tuple((v, e) for v, e in zip(self._frame.gens, expv) if e)

    def terms(self) -> Iterator[Tuple[Monomial, Fraction]]:
        for expv, coeff in self._p.iterterms():
            yield self._monomial(expv), to_fraction(coeff)

    def sorted_terms(self) -> List[Tuple[Monomial, Fraction]]:
        """Terms in descending graded-lex order."""
        return sorted(self.terms(), key=lambda item: _descending_key(item[0]))

    def coefficient(self, m: Monomial) -> Fraction:
        expv = [0] * len(self._frame.gens)
        for v, e in m:
            if v not in self._frame.index:
                return Fraction(0)
            expv[self._frame.index[v]] = e
        return to_fraction(self._p.get(tuple(expv), QQ.zero))

    def __len__(self) -> int:
        return len(self._p)

    def is_zero(self) -> bool:
        return not self._p

    def is_constant(self) -> bool:
        return self._p.is_ground

    def constant_value(self) -> Fraction:
        return to_fraction(self._p.get(self._frame.ring.zero_monom, QQ.zero))

    def degree(self) -> int:
        if not self._p:
            return -1
        return max(sum(expv) for expv in self._p.itermonoms())

    def is_homogeneous(self) -> bool:
        return len({sum(expv) for expv in self._p.itermonoms()}) <= 1

    def variables(self) -> set:
        if not self._p:
            return set()
        return {v for v, d in zip(self._frame.gens, self._p.degrees()) if d > 0}

    def degree_in(self, v: VarId) -> int:
        if not self._p:
            return -1
        if v not in self._frame.index:
            return 0
        return self._p.degree(self._frame.index[v])

    def coefficients_in(self, v: VarId) -> Dict[int, "MPoly"]:
        """Split as sum over q of v^q * P_q, with P_q free of v."""
        if v not in self._frame.index:
            return {0: self} if self._p else {}
        i = self._frame.index[v]
        parts: Dict[int, Dict[Tuple[int, ...], Any]] = {}
        for expv, coeff in self._p.iterterms():
            parts.setdefault(expv[i], {})[expv[:i] + (0,) + expv[i + 1:]] = coeff
        R = self._frame.ring
        return {q: MPoly.wrap(R.from_dict(terms), self._frame) for q, terms in parts.items()}

    def diff(self, v: VarId) -> "MPoly":
        if v not in self._frame.index:
            return MPoly()
        x = self._frame.ring.gens[self._frame.index[v]]
        return MPoly.wrap(self._p.diff(x), self._frame)

    def leading_term(self) -> Tuple[Monomial, Fraction]:
        if not self._p:
            raise ValueError("zero polynomial has no leading term")
        expv, coeff = self._p.LT
        return self._monomial(expv), to_fraction(coeff)

    def primitive(self) -> Tuple[Fraction, "MPoly"]:
        """(content, primitive part) with integer coprime coefficients; the content carries the sign of LC."""
        if not self._p:
            return Fraction(0), self
        content, prim = self._p.primitive()
        if self._p.LC < 0:
            content, prim = -content, -prim
        return to_fraction(content), MPoly.wrap(prim, self._frame)

    def sort_key(self) -> tuple:
        return tuple((_descending_key(m), c) for m, c in self.sorted_terms())

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(other: Any) -> Optional["MPoly"]:
        if isinstance(other, MPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.constant(other)
        return None

    def _pair(self, other: "MPoly") -> Tuple[PolyElement, PolyElement, Frame]:
        fr = _union(self._frame, other._frame)
        return self.lift(fr), other.lift(fr), fr

    def __add__(self, other: Any) -> "MPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b, fr = self._pair(other)
        return MPoly.wrap(a + b, fr)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly.wrap(-self._p, self._frame)

    def __sub__(self, other: Any) -> "MPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b, fr = self._pair(other)
        return MPoly.wrap(a - b, fr)

    def __rsub__(self, other: Any) -> "MPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other: Any) -> "MPoly":
        if isinstance(other, (int, Fraction)):
            return MPoly.wrap(self._p.mul_ground(to_qq(other)), self._frame)
        if not isinstance(other, MPoly):
            return NotImplemented
        a, b, fr = self._pair(other)
        return MPoly.wrap(a * b, fr)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "MPoly":
        if isinstance(other, (int, Fraction)):
            return MPoly.wrap(self._p.quo_ground(to_qq(other)), self._frame)
        return NotImplemented

    def __pow__(self, exponent: int) -> "MPoly":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        return MPoly.wrap(self._p ** exponent, self._frame)

    def __eq__(self, other: Any) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b, _ = self._pair(other)
        return a == b

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms()))
        return self._hash

    # -- evaluation and substitution -------------------------------------
    def evaluate(self, point: Mapping[VarId, Any]) -> Fraction:
        values = [to_qq(point[v]) if v in point else None for v in self._frame.gens]
        total = QQ.zero
        for expv, coeff in self._p.iterterms():
            for x, e, v in zip(values, expv, self._frame.gens):
                if e:
                    if x is None:
                        raise MissingAssignment(f"no value for {v}")
                    coeff *= x ** e
            total += coeff
        return to_fraction(total)

    def substitute(self, assignment: Mapping[VarId, Any], partial: bool = False) -> "MPoly":
        """Replace variables by polynomials; unassigned variables are an error unless partial."""
        used = self.variables()
        if not partial:
            missing = [v for v in used if v not in assignment]
            if missing:
                raise MissingAssignment(f"no assignment for {missing[0]}")
        values = {v: MPoly._coerce(assignment[v]) for v in used if v in assignment}
        if not values:
            return self
        fr = _union(self._frame, *(q._frame for q in values.values()))
        positions = [(fr.index[v], q.lift(fr)) for v, q in values.items()]
        powers: Dict[Tuple[int, int], PolyElement] = {}
        total = fr.ring.zero
        for expv, coeff in self.lift(fr).iterterms():
            kept = list(expv)
            factor = fr.ring.one
            for i, g in positions:
                n, kept[i] = kept[i], 0
                if n:
                    if (i, n) not in powers:
                        powers[(i, n)] = g ** n
                    factor = factor * powers[(i, n)]
            total += factor.mul_term((tuple(kept), coeff))
        return MPoly.wrap(total, fr).trimmed()

    def trimmed(self) -> "MPoly":
        """The same polynomial over the ring of the variables it actually uses."""
        fr = frame(tuple(sorted(self.variables())))
        if fr.gens == self._frame.gens:
            return self
        return MPoly.wrap(self._p.set_ring(fr.ring), fr)

    def rename(self, mapping: Mapping[VarId, VarId]) -> "MPoly":
        """Rename variables; images may collide (alpha -> z, or a merge of two roots)."""
        used = self.variables()
        fr = frame(tuple(sorted({mapping.get(v, v) for v in used})))
        targets = [(i, fr.index[mapping.get(v, v)]) for i, v in enumerate(self._frame.gens) if v in used]
        collected: Dict[Tuple[int, ...], Any] = {}
        for expv, coeff in self._p.iterterms():
            moved = [0] * len(fr.gens)
            for i, j in targets:
                moved[j] += expv[i]
            key = tuple(moved)
            collected[key] = collected.get(key, QQ.zero) + coeff
        return MPoly.wrap(fr.ring.from_dict({k: c for k, c in collected.items() if c}), fr)

    # -- display ----------------------------------------------------------
    def __str__(self) -> str:
        if not self._p:
            return "0"
        pieces = []
        for m, coeff in self.sorted_terms():
            body = format_monomial(m)
            if not body:
                text = _format_coeff(coeff)
            elif coeff == 1:
                text = body
            elif coeff == -1:
                text = "-" + body
            else:
                text = f"{_format_coeff(coeff)}*{body}"
            if pieces:
                pieces.append(f" - {text[1:]}" if text.startswith("-") else f" + {text}")
            else:
                pieces.append(text)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"MPoly({self})"


def mpoly_sum(polys: Iterable[MPoly]) -> MPoly:
    polys = list(polys)
    if not polys:
        return MPoly()
    fr = _union(*(p._frame for p in polys))
    total = fr.ring.zero
    for p in polys:
        total += p.lift(fr)
    return MPoly.wrap(total, fr)


def mpoly_product(polys: Iterable[MPoly]) -> MPoly:
    polys = list(polys)
    if not polys:
        return MPoly.constant(1)
    fr = _union(*(p._frame for p in polys))
    result = fr.ring.one
    for p in polys:
        result *= p.lift(fr)
    return MPoly.wrap(result, fr)


def exact_divide(n: MPoly, d: MPoly) -> MPoly:
    """Return q with n = q*d, or raise NotDivisible carrying the remainder."""
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    a, b, fr = n._pair(d)
    q, r = a.div(b)
    if r:
        raise NotDivisible(MPoly.wrap(r, fr))
    return MPoly.wrap(q, fr)

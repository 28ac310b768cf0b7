"""Principal parts along hyperplanes, for sums whose denominators are linear forms.

A term (weight, roots) stands for weight * prod_j prod_{r in roots} (beta_j - r),
with the weight free of the betas; a term without roots is just its weight. When
every denominator factor is linear, the sum is a polynomial exactly when its
principal part along each of those hyperplanes vanishes.

Poles up to order two are expanded. Anything else leaves the verdict open (None),
and callers fall back to expanding the sum.
"""
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from services.algebra.linform import LinForm
from services.algebra.mpoly import MPoly
from services.algebra.ratfn import RatFn, ratfn_sum
from utils.logger import logger

Term = Tuple[RatFn, Sequence[LinForm]]
RootClass = Tuple[MPoly, ...]

MAX_ORDER = 2


class Hyperplane:
    """The zero set of a primitive linear form, with t = form as normal coordinate."""

    def __init__(self, form: MPoly):
        linear = LinForm.from_mpoly(form)
        self.form = form
        self.var, u = linear.dominant()
        self.slope = 1 / u
        rest = linear - LinForm.of(self.var, u)
        self._on = {self.var: rest.to_mpoly() * (-self.slope)}

    def restrict(self, poly: MPoly) -> MPoly:
        return poly.substitute(self._on, partial=True)

    def rate(self, poly: MPoly) -> MPoly:
        """d/dt at t = 0."""
        return self.restrict(poly.diff(self.var) * self.slope)

    def __str__(self) -> str:
        return f"{self.form} = 0"


def _head(weight: RatFn, plane: Hyperplane) -> Optional[Tuple[int, RatFn, Optional[RatFn]]]:
    """weight = t^-order * G(t); returns (order, G(0), G'(0)), the last only for double poles."""
    order = weight.den.get(plane.form, 0)
    if order > MAX_ORDER:
        return None
    num: List[MPoly] = []
    den: List[MPoly] = []
    logs: List[RatFn] = []
    for factors, sign, bucket in ((weight.num, 1, num), (weight.den, -1, den)):
        for f, m in factors.items():
            if f == plane.form:
                continue
            f0 = plane.restrict(f)
            if f0.is_zero():
                return None
            bucket.extend([f0] * m)
            if order == 2:
                f1 = plane.rate(f)
                if not f1.is_zero():
                    logs.append(RatFn.from_poly(f1) / RatFn.from_poly(f0) * (sign * m))
    value = RatFn.from_factors(num, den, weight.coeff)
    return order, value, (value * ratfn_sum(logs) if order == 2 else None)


def _restricted_roots(roots: Sequence[LinForm], plane: Hyperplane) -> Tuple[RootClass, Dict[MPoly, Fraction]]:
    """The roots on the hyperplane, and how fast they leave it at each restricted value."""
    values: List[MPoly] = []
    drift: Dict[MPoly, Fraction] = {}
    for r in roots:
        y = plane.restrict(r.to_mpoly())
        values.append(y)
        speed = r.coefficients().get(plane.var, Fraction(0)) * plane.slope
        if speed:
            drift[y] = drift.get(y, Fraction(0)) + speed
    return tuple(sorted(values, key=MPoly.sort_key)), drift


def principal_part(terms: Sequence[Term], plane: Hyperplane
                   ) -> Optional[Dict[RootClass, Tuple[RatFn, RatFn, Dict[MPoly, RatFn]]]]:
    """Per class of restricted roots: the t^-2 coefficient, the t^-1 coefficient, and the
    t^-1 corrections carried by sum_j 1/(beta_j - y) for each restricted root y."""
    groups: Dict[RootClass, Tuple[List[RatFn], List[RatFn], Dict[MPoly, List[RatFn]]]] = {}
    for weight, roots in terms:
        if plane.form not in weight.den:
            continue
        head = _head(weight, plane)
        if head is None:
            return None
        order, value, rate = head
        key, drift = _restricted_roots(roots, plane)
        top, first, shifts = groups.setdefault(key, ([], [], {}))
        if order == 1:
            first.append(value)
            continue
        top.append(value)
        first.append(rate)
        for y, speed in drift.items():
            shifts.setdefault(y, []).append(value * speed)
    return {key: (ratfn_sum(top), ratfn_sum(first), {y: ratfn_sum(v) for y, v in shifts.items()})
            for key, (top, first, shifts) in groups.items()}


def _denominator_forms(terms: Sequence[Term]) -> Optional[List[MPoly]]:
    forms = set()
    for weight, _ in terms:
        for f in weight.den:
            if f.degree() != 1 or not f.is_homogeneous():
                return None
            forms.add(f)
    return sorted(forms, key=MPoly.sort_key)


def pole_free(terms: Sequence[Term]) -> Optional[bool]:
    """True when the sum has no pole; False when some hyperplane keeps one; None when undecided."""
    terms = [(w, tuple(r)) for w, r in terms if not w.is_zero()]
    if any(w.is_infinite() for w, _ in terms):
        return None
    forms = _denominator_forms(terms)
    if forms is None:
        return None
    if any(roots for _, roots in terms) and any(v.namespace == "beta" for f in forms for v in f.variables()):
        return None
    for form in forms:
        plane = Hyperplane(form)
        part = principal_part(terms, plane)
        if part is None:
            return None
        for top, first, shifts in part.values():
            if top.is_zero() and first.is_zero() and all(s.is_zero() for s in shifts.values()):
                continue
            if len(part) > 1:
                logger.debug(f"Pole along {plane} not settled by root classes")
                return None
            logger.debug(f"Pole along {plane} survives")
            return False
    return True


def vanishes(terms: Sequence[RatFn]) -> Optional[bool]:
    """Exact test of sum(terms) == 0 for homogeneous terms of one negative degree.

    A pole-free sum is a polynomial, and a polynomial of negative degree is zero.
    """
    finite = [t for t in terms if not t.is_zero()]
    if not finite:
        return True
    if any(t.is_infinite() or not t.is_homogeneous() for t in finite):
        return None
    degrees = {t.degree() for t in finite}
    if len(degrees) != 1 or degrees.pop() >= 0:
        return None
    return pole_free([(t, ()) for t in finite])


def pole_orders(terms: Sequence[RatFn]) -> Optional[Dict[MPoly, int]]:
    """Order of the pole of sum(terms) along each denominator hyperplane; zero orders are left out."""
    finite = [(t, ()) for t in terms if not t.is_zero()]
    forms = _denominator_forms(finite)
    if forms is None:
        return None
    orders: Dict[MPoly, int] = {}
    for form in forms:
        part = principal_part(finite, Hyperplane(form))
        if part is None:
            return None
        top, first, _ = part[()]
        if not top.is_zero():
            orders[form] = 2
        elif not first.is_zero():
            orders[form] = 1
    return orders

"""Linear forms in the roots and multisets of them (torus weights)."""
import math
from fractions import Fraction
from typing import Any, Dict, Iterable, Iterator, Mapping, Tuple

from services.algebra.mpoly import MPoly, mpoly_product
from services.algebra.varids import VarId


class LinForm:
    """A homogeneous linear form sum(a_v * v)."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[VarId, Any]):
        self._coeffs: Tuple[Tuple[VarId, Fraction], ...] = tuple(
            sorted((v, Fraction(a)) for v, a in coeffs.items() if a)
        )

    @classmethod
    def of(cls, v: VarId, coeff: Any = 1) -> "LinForm":
        return cls({v: coeff})

    @classmethod
    def from_mpoly(cls, poly: MPoly) -> "LinForm":
        coeffs: Dict[VarId, Fraction] = {}
        for m, coeff in poly.terms():
            if len(m) != 1 or m[0][1] != 1:
                raise ValueError(f"{poly} is not a linear form")
            coeffs[m[0][0]] = coeff
        return cls(coeffs)

    def coefficients(self) -> Dict[VarId, Fraction]:
        return dict(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def variables(self) -> set:
        return {v for v, _ in self._coeffs}

    def leading(self) -> Tuple[VarId, Fraction]:
        return self._coeffs[0]

    def dominant(self) -> Tuple[VarId, Fraction]:
        """The variable with the largest index, which dominates in the region |z_1| << ... << |z_mu|."""
        return max(self._coeffs, key=lambda item: item[0])

    def canonical(self) -> Tuple[Fraction, "LinForm"]:
        """Split as scale * primitive, the primitive having coprime integer coefficients and positive leading one."""
        if not self._coeffs:
            raise ValueError("zero linear form has no canonical scale")
        den = math.lcm(*(a.denominator for _, a in self._coeffs))
        num = math.gcd(*(a.numerator for _, a in self._coeffs))
        scale = Fraction(num, den)
        if self._coeffs[0][1] < 0:
            scale = -scale
        return scale, LinForm({v: a / scale for v, a in self._coeffs})

    def to_mpoly(self) -> MPoly:
        return MPoly({((v, 1),): a for v, a in self._coeffs})

    def evaluate(self, point: Mapping[VarId, Any]) -> Fraction:
        return sum((a * Fraction(point[v]) for v, a in self._coeffs), Fraction(0))

    def rename(self, mapping: Mapping[VarId, VarId]) -> "LinForm":
        coeffs: Dict[VarId, Fraction] = {}
        for v, a in self._coeffs:
            w = mapping.get(v, v)
            coeffs[w] = coeffs.get(w, 0) + a
        return LinForm(coeffs)

    def __add__(self, other: "LinForm") -> "LinForm":
        coeffs = dict(self._coeffs)
        for v, a in other._coeffs:
            coeffs[v] = coeffs.get(v, 0) + a
        return LinForm(coeffs)

    def __neg__(self) -> "LinForm":
        return LinForm({v: -a for v, a in self._coeffs})

    def __sub__(self, other: "LinForm") -> "LinForm":
        return self + (-other)

    def __mul__(self, scalar: Any) -> "LinForm":
        return LinForm({v: a * Fraction(scalar) for v, a in self._coeffs})

    __rmul__ = __mul__

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, LinForm) and self._coeffs == other._coeffs

    def __lt__(self, other: "LinForm") -> bool:
        return self._coeffs < other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __str__(self) -> str:
        return str(self.to_mpoly())

    def __repr__(self) -> str:
        return f"LinForm({self})"


class WeightSet:
    """Multiset of weights; scale is kept, equivalence up to scale is separate."""

    __slots__ = ("elements",)

    def __init__(self, elements: Iterable[LinForm] = ()):
        self.elements: Tuple[LinForm, ...] = tuple(elements)

    def __iter__(self) -> Iterator[LinForm]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, WeightSet) and sorted(self.elements) == sorted(other.elements)

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.elements)))

    def equivalent(self, other: "WeightSet") -> bool:
        """Equality as multisets after canonical rescaling of every element."""
        mine = sorted(w.canonical()[1] for w in self.elements)
        theirs = sorted(w.canonical()[1] for w in other.elements)
        return mine == theirs

    def rename(self, mapping: Mapping[VarId, VarId]) -> "WeightSet":
        return WeightSet(w.rename(mapping) for w in self.elements)

    def __add__(self, other: "WeightSet") -> "WeightSet":
        return WeightSet(self.elements + other.elements)

    def __repr__(self) -> str:
        return "WeightSet{" + ", ".join(str(w) for w in self.elements) + "}"


def resultant(S: Iterable[LinForm], T: Iterable[LinForm]) -> MPoly:
    """Expanded product of (s - t) over s in S and t in T."""
    T = list(T)
    return mpoly_product((s - t).to_mpoly() for s in S for t in T)

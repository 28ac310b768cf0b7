"""Expansions in the Delta (Schur) basis."""
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Optional, Tuple

from services.algebra.mpoly import MPoly, mpoly_sum
from services.schur.delta import as_partition_dict, delta_alphabet, delta_quotient, delta_terms
from services.schur.partitions import Partition, format_partition, parse_partition


def _format_coeff(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class SchurExpansion:
    """Map Partition -> coefficient; context None means abstract quotient variables."""

    __slots__ = ("coeffs", "context")

    def __init__(self, coeffs: Optional[Mapping[Partition, Any]] = None, context: Optional[Tuple] = None):
        self.coeffs: Dict[Partition, Fraction] = {
            lam: Fraction(value) for lam, value in (coeffs or {}).items() if value
        }
        self.context = tuple(context) if context is not None else None

    def terms(self) -> List[Tuple[Partition, Fraction]]:
        return sorted(self.coeffs.items())

    def is_zero(self) -> bool:
        return not self.coeffs

    def weights(self) -> set:
        return {lam.weight for lam in self.coeffs}

    def weight(self) -> int:
        weights = self.weights()
        if len(weights) != 1:
            raise ValueError(f"expansion is not homogeneous: weights {sorted(weights)}")
        return weights.pop()

    def width(self) -> int:
        return max((len(lam) for lam in self.coeffs), default=0)

    def is_nonnegative_integral(self) -> bool:
        return all(value >= 0 and value.denominator == 1 for value in self.coeffs.values())

    def leading(self) -> Tuple[Partition, Fraction]:
        lam = max(self.coeffs)
        return lam, self.coeffs[lam]

    def to_mpoly(self) -> MPoly:
        if self.context is None:
            return mpoly_sum(delta_quotient(lam) * value for lam, value in self.terms())
        return mpoly_sum(delta_alphabet(lam, self.context) * value for lam, value in self.terms())

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        coeffs = dict(self.coeffs)
        for lam, value in other.coeffs.items():
            coeffs[lam] = coeffs.get(lam, 0) + value
        return SchurExpansion(coeffs, self.context)

    def __neg__(self) -> "SchurExpansion":
        return SchurExpansion({lam: -v for lam, v in self.coeffs.items()}, self.context)

    def __sub__(self, other: "SchurExpansion") -> "SchurExpansion":
        return self + (-other)

    def __mul__(self, scalar: Any) -> "SchurExpansion":
        return SchurExpansion({lam: v * Fraction(scalar) for lam, v in self.coeffs.items()}, self.context)

    __rmul__ = __mul__

    def __eq__(self, other: Any) -> bool:
        return (isinstance(other, SchurExpansion) and self.coeffs == other.coeffs
                and self.context == other.context)

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for lam, value in self.terms():
            magnitude = abs(value)
            prefix = "" if magnitude == 1 else (
                str(magnitude.numerator) if magnitude.denominator == 1 else f"({_format_coeff(magnitude)})")
            body = f"{prefix}Δ_{{{format_partition(lam)}}}"
            if not pieces:
                pieces.append(("-" if value < 0 else "") + body)
            else:
                pieces.append((" - " if value < 0 else " + ") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"SchurExpansion({self})"

    def to_records(self) -> List[Dict[str, str]]:
        """Serializable term list sorted by partition, exponent shorthand for long runs."""
        return [{"partition": format_partition(lam, shorthand=True), "coeff": _format_coeff(value)}
                for lam, value in self.terms()]

    @classmethod
    def from_records(cls, records: Iterable[Mapping[str, str]]) -> "SchurExpansion":
        return cls({parse_partition(r["partition"]): Fraction(r["coeff"]) for r in records})


def schur_expand(p: MPoly) -> SchurExpansion:
    """Expand a c-polynomial in the Delta basis by triangular elimination.

    Delta_lambda = c_lambda + (lex-larger c-monomials of the same weight), so
    the lex-smallest partition present always carries its final coefficient.
    """
    remaining = as_partition_dict(p)
    result: Dict[Partition, Fraction] = {}
    while remaining:
        lam = min(remaining)
        value = remaining[lam]
        result[lam] = value
        for mu, k in delta_terms(lam):
            updated = remaining.get(mu, 0) - value * k
            if updated:
                remaining[mu] = updated
            else:
                remaining.pop(mu, None)
    return SchurExpansion(result)

"""Generating functions k_Q in the z-variables and the shipped catalog."""
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence

from services.algebra.linform import LinForm
from services.algebra.mpoly import MPoly, mpoly_product
from services.algebra.parser import parse_expression
from services.algebra.ratfn import RatFn
from services.algebra.varids import z
from services.errors import MissingEntry, PreconditionError
from services.euler.algebras import AlgebraId, parse_algebra

# Closed forms for the algebras outside the Sigma^r and Phi_{m,r} families.
KQ_DEFINITIONS = {
    "A_1": "1",
    "A_2": "1/(2*z1-z2)",
    "A_3": "1/((2*z1-z2)*(2*z1-z3)*(z1+z2-z3))",
    "III_{2,4}": "1/((2*z1-z2)*(z1+z2-z3)*(2*z1-z4)*(z1+z2-z4))",
    "III_{3,3}": "1/(4*(2*z1-z3)*(z1+z2-z3)*(2*z2-z4)*(z1+z2-z4))",
    "I_{2,3}": "1/((2*z1-z4)*(2*z2-z3)*(2*z2-z4)*(z1+z2-z4)*(z2+z3-z4))",
    "Sigma^{2,1}": "1/((2*z1-z3)*(z1+z2-z3)*(2*z1-z4))",
}


def discriminant(mu: int) -> MPoly:
    """dis_mu = prod_{i<j} (z_i - z_j)."""
    return mpoly_product(MPoly.var(z(i)) - MPoly.var(z(j)) for i in range(1, mu + 1) for j in range(i + 1, mu + 1))


class GeneratingFunction:
    """scalar * numerator / prod(denominator) with linear denominator forms in z_1..z_mu."""

    def __init__(self, mu: int, numerator: MPoly, denominator: Sequence[LinForm] = (), scalar=1, label: str = ""):
        self.mu = mu
        self.numerator = numerator
        self.denominator: List[LinForm] = list(denominator)
        self.scalar = Fraction(scalar)
        self.label = label
        for form in self.denominator:
            if form.is_zero():
                raise PreconditionError("zero denominator form")
            if any(v.namespace != "z" or v.index > mu for v in form.variables()):
                raise PreconditionError(f"denominator form {form} is not in z_1..z_{mu}")

    @classmethod
    def from_ratfn(cls, mu: int, f: RatFn, label: str = "") -> "GeneratingFunction":
        forms: List[LinForm] = []
        for factor, multiplicity in f.den.items():
            try:
                form = LinForm.from_mpoly(factor)
            except ValueError:
                raise PreconditionError(f"denominator factor {factor} is not linear") from None
            forms.extend([form] * multiplicity)
        numerator = mpoly_product(g ** m for g, m in f.num.items())
        return cls(mu, numerator, forms, f.coeff, label)

    @classmethod
    def parse(cls, mu: int, text: str, label: str = "") -> "GeneratingFunction":
        return cls.from_ratfn(mu, parse_expression(text), label or text)

    @property
    def degree(self) -> int:
        return self.numerator.degree() - len(self.denominator)

    def as_ratfn(self) -> RatFn:
        return RatFn.from_factors([self.numerator], [form.to_mpoly() for form in self.denominator], self.scalar)

    def __repr__(self) -> str:
        return f"GeneratingFunction({self.label}: {self.as_ratfn()})"


def sigma_generating(r: int) -> GeneratingFunction:
    """k_{Sigma^r} = prod_{i=1}^{r-1} z_i^i."""
    numerator = MPoly.monomial({z(i): i for i in range(1, r)})
    return GeneratingFunction(r, numerator, label=f"Sigma{r}")


def phi_generating(m: int, r: int) -> GeneratingFunction:
    """k_{Phi_{m,r}} in z_1..z_{m+1}, with q = m - r:

    prod_{i=1}^{r-1} z_{q+1+i}^i / (2^{q-1} (2z_1 - z_{m+1}) prod_{i=1}^{q-1} (z_i + z_{i+1} - z_{m+1})).
    """
    if not 0 <= r < m:
        raise PreconditionError(f"Phi_{{m,r}} needs 0 <= r < m, got m={m}, r={r}")
    q = m - r
    top = LinForm.of(z(m + 1))
    numerator = MPoly.monomial({z(q + 1 + i): i for i in range(1, r)})
    forms = [LinForm.of(z(1), 2) - top]
    forms += [LinForm.of(z(i)) + LinForm.of(z(i + 1)) - top for i in range(1, q)]
    return GeneratingFunction(m + 1, numerator, forms, Fraction(1, 2 ** (q - 1)), label=f"Phi{m}{r}")


def generating_function(Q: AlgebraId) -> GeneratingFunction:
    if Q.family == "Sigma":
        return sigma_generating(Q.params[0])
    if Q.family == "Phi":
        return phi_generating(*Q.params)
    if Q == AlgebraId("I2", (2, 2)):
        return phi_generating(2, 0)
    if Q == AlgebraId("III", (2, 3)):
        return phi_generating(2, 1)
    for name, text in KQ_DEFINITIONS.items():
        if parse_algebra(name) == Q:
            return GeneratingFunction.parse(Q.mu, text, label=Q.compact)
    raise MissingEntry(f"no generating function is known for {Q}")


@lru_cache(maxsize=1)
def kq_catalog() -> Dict[AlgebraId, GeneratingFunction]:
    """Every shipped k_Q: the table above, Sigma^1..Sigma^4 and Phi_{m,r} for m <= 3."""
    algebras = [parse_algebra(name) for name in KQ_DEFINITIONS]
    algebras += [AlgebraId("I2", (2, 2)), AlgebraId("III", (2, 3))]
    algebras += [AlgebraId("Sigma", (r,)) for r in range(1, 5)]
    algebras += [AlgebraId("Phi", (m, r)) for m in range(1, 4) for r in range(m)]
    return {Q: generating_function(Q) for Q in algebras}

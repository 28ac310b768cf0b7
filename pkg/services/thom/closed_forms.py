"""Classical closed formulas: Porteous, Sigma^{n,...,n}, subgrassmannians, and two lowering identities."""
from itertools import combinations
from math import comb
from typing import List

from services.algebra.linform import LinForm
from services.algebra.ratfn import RatFn, resultant_ratfn
from services.algebra.varids import alpha
from services.errors import PreconditionError
from services.schur.expansion import SchurExpansion
from services.schur.partitions import Partition, rectangle
from services.thom.forms import QuotientForm, RootForm, Summand
from services.thom.quotient import lower_form
from utils.logger import logger


def porteous(n: int, l: int) -> QuotientForm:
    """tp_{Sigma^n}(l) = Delta_{(n+l)^n}."""
    if n < 1 or l < 0:
        raise PreconditionError(f"Porteous formula needs n >= 1 and l >= 0, got n={n}, l={l}")
    return QuotientForm(l, SchurExpansion({rectangle(n, n + l): 1}), width=n, label=f"Sigma{n}")


def porteous_root(n: int, p: int) -> RootForm:
    """res(B_p | A_n), the root form of the Porteous class."""
    roots = [LinForm.of(alpha(i)) for i in range(1, n + 1)]
    return RootForm(n, p, [Summand(RatFn(1), roots)], label=f"Tp_Sigma{n}({n},{p})", codim=n * p)


def _exponents(n: int, degree: int) -> List[tuple]:
    """Exponent vectors of the degree-d monomials in n variables."""
    if n == 1:
        return [(degree,)]
    return [(a,) + rest for a in range(degree, -1, -1) for rest in _exponents(n - 1, degree - a)]


def _weight(a: tuple) -> LinForm:
    return LinForm({alpha(j + 1): e for j, e in enumerate(a) if e})


def low_degree_weights(n: int, d: int) -> List[LinForm]:
    return [_weight(a) for degree in range(1, d) for a in _exponents(n, degree)]


def sigma_power_tp(n: int, d: int, p: int) -> RootForm:
    """Tp of the germs whose coordinates are all degree-d monomials: res(B_p | weights of degree < d)."""
    needed = comb(n + d - 1, d)
    if p < needed:
        raise PreconditionError(f"p={p} is smaller than the {needed} monomials of degree {d}")
    weights = low_degree_weights(n, d)
    return RootForm(n, p, [Summand(RatFn(1), weights)], label=f"Tp_Sigma{n}^{d}({n},{p})", codim=p * len(weights))


def subgrassmannian_tp(n: int, k: int, d: int, p: int) -> RootForm:
    """The class of the locus where a d-dimensional quotient of Sym^{k+1} survives.

    Sum over d-subsets S of the degree-(k+1) weights of [E_S]/e_S, times the
    Sigma^{n,...,n} class of depth k.
    """
    top = [_weight(a) for a in _exponents(n, k + 1)]
    if not 0 <= d < len(top):
        raise PreconditionError(f"d={d} must lie in [0, {len(top)})")
    if p < len(top):
        raise PreconditionError(f"p={p} is smaller than the {len(top)} monomials of degree {k + 1}")
    low = low_degree_weights(n, k + 1)
    summands = []
    for chosen in combinations(range(len(top)), d):
        S = [top[i] for i in chosen]
        rest = [top[i] for i in range(len(top)) if i not in chosen]
        summands.append(Summand(resultant_ratfn(S, rest).reciprocal(), low + S))
    codim = p * len(low) + d * (p - len(top) + d)
    logger.debug(f"Subgrassmannian class n={n}, k={k}, d={d}, p={p}: {len(summands)} subsets")
    return RootForm(n, p, summands, label=f"Gr_{d}(Sym^{k + 1})({n},{p})", codim=codim)


def subgrassmannian_mu(n: int, k: int, d: int) -> int:
    return sum(comb(n + i - 1, i) for i in range(1, k + 1)) + d


def iab_from_iiiab(tp_iii: QuotientForm, a: int, b: int) -> QuotientForm:
    """tp_{I_{a,b}}(0) as the (a+b-2)-lowering of tp_{III_{a,b}}(1)."""
    if tp_iii.l != 1:
        raise PreconditionError(f"expected tp_III(1), got l={tp_iii.l}")
    width = a + b - 2
    if tp_iii.expansion.width() > width:
        raise PreconditionError(f"width {tp_iii.expansion.width()} exceeds a+b-2 = {width}")
    lowered = lower_form(tp_iii, m=width)
    return QuotientForm(0, lowered.expansion, width=a + b - 1, label=f"I{a}{b}")


def veronese_check(n: int, l: int) -> bool:
    """Lowering tp_{Phi_{n,n-1}}(l) l+1 times by flat(n+1) leaves 2^{n-1} Delta_{(n-1)^n}."""
    from services.phi.schur import phi_tp_schur

    if n < 2:
        raise PreconditionError("the Veronese identity needs n >= 2")
    tp = phi_tp_schur(n, 1, l)
    lowered = lower_form(tp, m=n + 1, times=l + 1)
    expected = SchurExpansion({rectangle(n, n - 1): 2 ** (n - 1)})
    return lowered.expansion == expected


# The locus of nets of conics with infinitely many singular members.
NETS_OF_CONICS = SchurExpansion({Partition((3, 3, 3, 1)): 4, Partition((4, 3, 3)): 8})


def nets_of_conics() -> SchurExpansion:
    return NETS_OF_CONICS

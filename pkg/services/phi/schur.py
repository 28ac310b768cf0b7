"""Closed Schur-basis formulas for tp_{Phi_{m,r}}(l)."""
from fractions import Fraction
from typing import Dict, List, Tuple

from services.errors import PreconditionError
from services.phi.segre import segre_coeff, segre_indices
from services.schur.delta import straighten
from services.schur.expansion import SchurExpansion
from services.schur.partitions import Partition
from services.thom.forms import QuotientForm
from utils.logger import logger


def shifted_index(m: int, s: int, l: int, I: Tuple[int, ...]) -> List[int]:
    """I' = (l+1+i_1, ..., l+s+i_s, (l+m)^{m-s}, l+m+1-s-|I|)."""
    head = [l + k + 1 + i for k, i in enumerate(I)]
    return head + [l + m] * (m - s) + [l + m + 1 - s - sum(I)]


def phi_tp_schur(m: int, s: int, l: int) -> QuotientForm:
    """tp_{Phi_{m,m-s}}(l) = sum_I ((I)) Delta_{I'}.

    The sum runs over every strictly decreasing I >= 0 with |I| <= l+m-s+1;
    straightening removes the terms outside the geometric range.
    """
    if not 1 <= s <= m or l < 0:
        raise PreconditionError(f"phi_tp_schur needs 1 <= s <= m and l >= 0, got m={m}, s={s}, l={l}")
    coeffs: Dict[Partition, Fraction] = {}
    for I in segre_indices(s, l + m - s + 1):
        straight = straighten(shifted_index(m, s, l, I))
        if straight is None:
            continue
        sign, lam = straight
        coeffs[lam] = coeffs.get(lam, 0) + sign * segre_coeff(I)
    expansion = SchurExpansion(coeffs)
    logger.debug(f"Phi_{{{m},{m - s}}}({l}): {len(expansion.coeffs)} Schur terms")
    return QuotientForm(l, expansion, width=m + 1, label=f"Phi{m}{m - s}")


def phi_corank_one(n: int, l: int) -> QuotientForm:
    """tp_{Phi_{n,n-1}}(l) = 2^{n-1} sum_{i=0}^{l+1} 2^i Delta_{(n+l+i, (n+l)^{n-1}, l+1-i)}."""
    if n < 1 or l < 0:
        raise PreconditionError(f"needs n >= 1 and l >= 0, got n={n}, l={l}")
    coeffs = {}
    for i in range(l + 2):
        lam = Partition((n + l + i,) + (n + l,) * (n - 1) + (l + 1 - i,))
        coeffs[lam] = 2 ** (n - 1 + i)
    return QuotientForm(l, SchurExpansion(coeffs), width=n + 1, label=f"Phi{n}{n - 1}")

"""Finite-codimension monomial ideals stored as staircase complements."""
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from services.algebra.linform import LinForm, WeightSet
from services.algebra.mpoly import MPoly, mpoly_product
from services.algebra.varids import VarId, alpha
from services.errors import ExpressionError, PreconditionError
from utils.logger import logger

Exponent = Tuple[int, ...]

_SHORT_NAMES = ("x", "y", "z", "u")


def _unit(n: int, j: int) -> Exponent:
    return tuple(1 if i == j else 0 for i in range(n))


def _predecessors(a: Exponent) -> Iterable[Exponent]:
    for j, e in enumerate(a):
        if e:
            yield a[:j] + (e - 1,) + a[j + 1:]


def _is_degree_zero(a: Exponent) -> bool:
    return not any(a)


class MonomialIdeal:
    """An ideal I in the maximal ideal of C[[x_1..x_n]], kept as the set of
    standard monomials of degree >= 1 (the complement). codim = |complement|."""

    __slots__ = ("n", "complement")

    def __init__(self, n: int, complement: Iterable[Sequence[int]]):
        self.n = n
        comp = frozenset(tuple(a) for a in complement)
        for a in comp:
            if len(a) != n:
                raise PreconditionError(f"exponent {a} does not have {n} coordinates")
            if _is_degree_zero(a) or any(e < 0 for e in a):
                raise PreconditionError(f"{a} is not a monomial of degree >= 1")
            for b in _predecessors(a):
                if not _is_degree_zero(b) and b not in comp:
                    raise PreconditionError(f"complement is not divisor closed at {a}")
        self.complement: FrozenSet[Exponent] = comp

    @classmethod
    def maximal_square(cls, n: int) -> "MonomialIdeal":
        """M_n^2: the complement is the n variables."""
        return cls(n, [_unit(n, j) for j in range(n)])

    @property
    def codim(self) -> int:
        return len(self.complement)

    def key(self) -> Tuple:
        return (self.n, tuple(sorted(self.complement)))

    def support(self) -> List[int]:
        """0-based indices of variables not contained in the ideal."""
        return [j for j in range(self.n) if any(a[j] for a in self.complement)]

    def is_maximal_square(self) -> bool:
        return self.n == self.codim and all(sum(a) == 1 for a in self.complement)

    def weights(self) -> WeightSet:
        return quotient_weights(self)

    def descendant(self) -> "MonomialIdeal":
        return descendant(self)

    def embed(self, n: int) -> "MonomialIdeal":
        """The iterated descendant I + (x_{k+1}, ..., x_n)."""
        if n < self.n:
            raise PreconditionError(f"cannot embed {self.n} variables into {n}")
        pad = (0,) * (n - self.n)
        return MonomialIdeal(n, [a + pad for a in self.complement])

    def permute(self, perm: Sequence[int]) -> "MonomialIdeal":
        """Send variable j to variable perm[j] (0-based)."""
        comp = []
        for a in self.complement:
            b = [0] * self.n
            for j, e in enumerate(a):
                b[perm[j]] = e
            comp.append(tuple(b))
        return MonomialIdeal(self.n, comp)

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialIdeal) and self.n == other.n and self.complement == other.complement

    def __hash__(self) -> int:
        return hash((self.n, self.complement))

    def __lt__(self, other: "MonomialIdeal") -> bool:
        return self.key() < other.key()

    def __str__(self) -> str:
        return format_ideal(self)

    def __repr__(self) -> str:
        return f"MonomialIdeal({self})"


@dataclass(frozen=True)
class MonomialGerm:
    """A monomial map germ (C^n,0) -> (C^p,0); coordinates are exponent vectors."""

    n: int
    coordinates: Tuple[Exponent, ...]

    def __post_init__(self):
        if not self.coordinates:
            raise PreconditionError("a germ needs at least one coordinate")
        for a in self.coordinates:
            if len(a) != self.n or sum(a) < 1:
                raise PreconditionError(f"coordinate monomial {a} must have degree >= 1 in {self.n} variables")

    @property
    def p(self) -> int:
        return len(self.coordinates)


# -- weights --------------------------------------------------------------
def _weight(a: Exponent) -> LinForm:
    return LinForm({alpha(j + 1): e for j, e in enumerate(a) if e})


def quotient_weights(I: MonomialIdeal) -> WeightSet:
    """{sum a_j alpha_j : x^a in the complement}, the positive form of -W_{Q_I}."""
    return WeightSet(_weight(a) for a in sorted(I.complement))


def germ_weights(f: MonomialGerm) -> WeightSet:
    return WeightSet(_weight(a) for a in f.coordinates)


def ideal_of(f: MonomialGerm) -> MonomialIdeal:
    """The monomial ideal generated by the coordinates of f."""
    return ideal_from_generators(f.n, f.coordinates)


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def ideal_from_generators(n: int, generators: Iterable[Sequence[int]]) -> MonomialIdeal:
    gens = [tuple(g) for g in generators]
    for j in range(n):
        if not any(g[j] and sum(g) == g[j] for g in gens):
            raise PreconditionError(f"ideal has infinite codimension: no pure power of variable {j + 1}")
    complement = set()
    frontier = [_unit(n, j) for j in range(n)]
    while frontier:
        a = frontier.pop()
        if a in complement or any(_divides(g, a) for g in gens):
            continue
        complement.add(a)
        frontier.extend(tuple(e + (1 if i == j else 0) for i, e in enumerate(a)) for j in range(n))
    return MonomialIdeal(n, complement)


# -- descendants ----------------------------------------------------------
def descendant(I: MonomialIdeal) -> MonomialIdeal:
    """I + (x_{n+1}) in n+1 variables; the complement is unchanged."""
    return I.embed(I.n + 1)


def suspension_factor(I: MonomialIdeal, variable: Optional[int] = None) -> MPoly:
    """res(alpha_v | W_I) with v = n+1 by default (1-based)."""
    v = alpha(variable if variable is not None else I.n + 1)
    target = LinForm.of(v)
    return mpoly_product((target - w).to_mpoly() for w in quotient_weights(I))


def min_generators(I: MonomialIdeal) -> List[Exponent]:
    """Minimal monomial generators, in decreasing lexicographic order."""
    inside = set(I.complement) | {(0,) * I.n}
    candidates = {tuple(e + (1 if i == j else 0) for i, e in enumerate(a))
                  for a in inside for j in range(I.n)}
    gens = [b for b in candidates - inside if all(p in inside for p in _predecessors(b))]
    return sorted(gens, reverse=True)


# -- enumeration ----------------------------------------------------------
def _growths(n: int, comp: FrozenSet[Exponent]) -> Iterable[Exponent]:
    inside = set(comp) | {(0,) * n}
    for a in inside:
        for j in range(n):
            b = a[:j] + (a[j] + 1,) + a[j + 1:]
            if b not in inside and all(p in inside for p in _predecessors(b)):
                yield b


@lru_cache(maxsize=None)
def _enumerate(n: int, m: int) -> Tuple[MonomialIdeal, ...]:
    level = {frozenset()}
    for _ in range(m):
        level = {comp | {b} for comp in level for b in _growths(n, comp)}
    ideals = sorted(MonomialIdeal(n, comp) for comp in level)
    logger.debug(f"Enumerated {len(ideals)} monomial ideals of codimension {m} in {n} variables")
    return tuple(ideals)


def enumerate_ideals(n: int, m: int) -> List[MonomialIdeal]:
    """All codimension-m monomial ideals in n variables, sorted by complement."""
    if n < 1 or m < 1:
        raise PreconditionError("enumeration needs n >= 1 and m >= 1")
    return list(_enumerate(n, m))


# -- orbit representatives ------------------------------------------------
def canonicalize(I: MonomialIdeal) -> Tuple[MonomialIdeal, Dict[VarId, VarId]]:
    """The minimal-variable, lexicographically minimal representative of I's orbit.

    The renaming sends alpha_{r+1} of the representative to the alpha of the
    variable of I it came from, so lookup(I) = rename(value(rep)) * suspensions.
    """
    support = I.support()
    k = len(support)
    best = None
    for order in permutations(support):
        position = {orig: r for r, orig in enumerate(order)}
        comp = tuple(sorted(tuple(a[order[r]] for r in range(k)) for a in I.complement))
        if best is None or comp < best[0]:
            best = (comp, position)
    comp, position = best
    renaming = {alpha(r + 1): alpha(orig + 1) for orig, r in position.items()}
    return MonomialIdeal(k, comp), renaming


def stabilizer_order(I: MonomialIdeal) -> int:
    return sum(1 for perm in permutations(range(I.n)) if I.permute(perm) == I)


@dataclass(frozen=True)
class Representative:
    ideal: MonomialIdeal
    n: int
    stabilizer: int

    def orbit_size(self, n: int) -> int:
        """Size of the S_n orbit of the representative embedded in n variables."""
        return factorial(n) // (self.stabilizer * factorial(n - self.n))


@lru_cache(maxsize=None)
def _representatives(m: int) -> Tuple[Representative, ...]:
    reps = {canonicalize(I)[0] for I in _enumerate(m, m)}
    ordered = sorted(reps, key=lambda r: r.key())
    return tuple(Representative(r, r.n, stabilizer_order(r)) for r in ordered)


def canonical_representatives(m: int) -> List[Representative]:
    """One minimal-variable ideal per permutation orbit of codimension m, ordered by (n, complement)."""
    if m < 1:
        raise PreconditionError("codimension must be positive")
    return list(_representatives(m))


# -- text form ------------------------------------------------------------
def _variable_names(n: int) -> List[str]:
    return list(_SHORT_NAMES[:n]) if n <= len(_SHORT_NAMES) else [f"x{j + 1}" for j in range(n)]


def format_monomial_exponent(a: Exponent, names: Sequence[str]) -> str:
    pieces = []
    for name, e in zip(names, a):
        if e:
            pieces.append(name if e == 1 else f"{name}^{e}")
    separator = "*" if any(len(name) > 1 for name in names) else ""
    return separator.join(pieces) or "1"


def format_ideal(I: MonomialIdeal) -> str:
    names = _variable_names(I.n)
    return "(" + ",".join(format_monomial_exponent(g, names) for g in min_generators(I)) + ")"


_FACTOR = re.compile(r"\s*(x[1-9]|x|y|z|u)\s*(?:\^\s*(\d+))?\s*\*?")


def parse_ideal(text: str, n: Optional[int] = None) -> MonomialIdeal:
    """Parse "(x^2,xy,y^3)"; n defaults to the largest variable used."""
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ExpressionError("ideal must be a parenthesized generator list", 1)
    offset = text.index("(") + 1
    generators: List[Dict[int, int]] = []
    uses_indexed = uses_short = False
    position = offset
    for chunk in body[1:-1].split(","):
        exps: Dict[int, int] = {}
        i = 0
        stripped = chunk.rstrip()
        while i < len(stripped):
            match = _FACTOR.match(stripped, i)
            if not match or match.end() == i:
                raise ExpressionError(f"unexpected text {stripped[i:]!r} in ideal", position + i + 1)
            name = match.group(1)
            if len(name) > 1:
                uses_indexed = True
                j = int(name[1:]) - 1
            else:
                uses_short = True
                j = _SHORT_NAMES.index(name)
            exps[j] = exps.get(j, 0) + int(match.group(2) or 1)
            i = match.end()
        if not exps:
            raise ExpressionError("empty generator", position + 1)
        generators.append(exps)
        position += len(chunk) + 1
    if uses_indexed and uses_short:
        raise ExpressionError("mixes x,y,z,u with indexed variables", offset)
    used = max(j for g in generators for j in g) + 1
    n = n or used
    if used > n:
        raise PreconditionError(f"ideal uses {used} variables, more than {n}")
    vectors = [tuple(g.get(j, 0) for j in range(n)) for g in generators]
    return ideal_from_generators(n, vectors)

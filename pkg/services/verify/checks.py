"""Named verification checks; the manifest refers to them by name."""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Callable, Dict, List, Optional, Sequence

from services.algebra.parser import parse_expression, parse_polynomial
from services.euler.algebras import AlgebraId, parse_algebra
from services.algebra.ratfn import RatFn
from services.euler.reciprocity import complete_by_reciprocity, reciprocity_holds
from services.euler.tables import (COMPLETED, dump_table, load_shipped_tables, load_table, lookup, read_table_file,
                                   table_files)
from services.ideals.ideals import (MonomialGerm, MonomialIdeal, canonical_representatives, canonicalize,
                                    enumerate_ideals, format_ideal, min_generators, parse_ideal)
from services.phi.localized import phi_tp_localized
from services.phi.schur import phi_corank_one, phi_tp_schur
from services.phi.segre import segre_coeff, segre_series_check
from services.residue.generating import generating_function
from services.residue.residue import asym_consistency, iterated_residue, laurent_residue, residue_differences
from services.schur.delta import c_monomial
from services.schur.identities import factorization_check, gustafson_milne_check, two_forms_check
from services.schur.partitions import parse_partition
from services.thom.closed_forms import (iab_from_iiiab, nets_of_conics, porteous, porteous_root, subgrassmannian_mu,
                                        subgrassmannian_tp, veronese_check)
from services.thom.engine import shared_engine
from services.thom.localization import (euler_via_interpolation, extrapolate_table, localize_by_lookup,
                                        localize_symmetrized, localize_tp, padded_germ, restrict)
from services.thom.quotient import lower_form, supersymmetry_check, to_quotient


@dataclass
class CheckOutcome:
    passed: bool
    detail: str = ""


CHECKS: Dict[str, Callable[..., CheckOutcome]] = {}


def check(name: str):
    def register(fn: Callable[..., CheckOutcome]) -> Callable[..., CheckOutcome]:
        CHECKS[name] = fn
        return fn
    return register


def _algebras(names: Sequence[str]) -> List[AlgebraId]:
    return [parse_algebra(name) for name in names]


def _outcome(failures: List[str], done: str) -> CheckOutcome:
    if failures:
        return CheckOutcome(False, "; ".join(failures))
    return CheckOutcome(True, done)


def a2_expected(l: int):
    """c_{l+1}^2 + sum_{i=1}^{l+1} 2^{i-1} c_{l+1-i} c_{l+1+i}."""
    total = c_monomial([l + 1, l + 1])
    for i in range(1, l + 2):
        total = total + c_monomial([l + 1 - i, l + 1 + i]) * 2 ** (i - 1)
    return total


@check("a2_localization")
def a2_localization(l_max: int = 4) -> CheckOutcome:
    engine = shared_engine()
    A2 = AlgebraId("A", (2,))
    failures = [f"l={l}: {engine.quotient_tp(A2, l).chern}" for l in range(l_max + 1)
                if engine.quotient_tp(A2, l).chern != a2_expected(l)]
    return _outcome(failures, f"tp_A2(l) matches the closed series for l <= {l_max}")


@check("a3_l0")
def a3_l0() -> CheckOutcome:
    got = shared_engine().quotient_tp(AlgebraId("A", (3,)), 0).chern
    ok = got == parse_polynomial("c1^3+3*c1*c2+2*c3")
    return CheckOutcome(ok, f"tp_A3(0) = {got}")


@check("porteous")
def porteous_check(n_max: int = 3, l_max: int = 3) -> CheckOutcome:
    failures = []
    for n in range(1, n_max + 1):
        for l in range(l_max + 1):
            solved = to_quotient(porteous_root(n, n + l), width=n)
            if solved.expansion != porteous(n, l).expansion:
                failures.append(f"n={n}, l={l}: {solved.expansion}")
    return _outcome(failures, f"res(B|A) solves to Delta_(n+l)^n for n <= {n_max}, l <= {l_max}")


@check("reciprocity")
def reciprocity_check(mu_max: int = 4, interpolate_max_mu: int = 3) -> CheckOutcome:
    """Shipped M^2 rows satisfy the relation; completed ones match an interpolation that never uses them."""
    table = load_shipped_tables()
    engine = shared_engine(table)
    A2 = AlgebraId("A", (2,))
    failures = []
    if complete_by_reciprocity(table, A2) != parse_expression("(1/3)*(a1-2*a2)*(a2-2*a1)"):
        failures.append("e(A_2, M_2^2) differs from (1/3)(a1-2a2)(a2-2a1)")
    related, interpolated = [], []
    for Q in table.algebras():
        if not 2 <= Q.mu <= mu_max or not table.covers(Q):
            continue
        rep = MonomialIdeal.maximal_square(Q.mu)
        entry = table.get(Q, rep)
        if entry.provenance != COMPLETED:
            related.append(str(Q))
            if not reciprocity_holds(table, Q):
                failures.append(f"{Q}: sum of 1/e is not zero")
        elif Q.mu <= interpolate_max_mu:
            interpolated.append(str(Q))
            p = len(min_generators(rep))
            value = euler_via_interpolation(engine.quotient_tp(Q, p - Q.mu), padded_germ(rep, p))
            if value != entry.value:
                failures.append(f"{Q}: completed M^2 row {entry.value} but interpolation gives {value}")
    return _outcome(failures, f"relation holds for {', '.join(related)}; "
                              f"completed rows match interpolation for {', '.join(interpolated)}")


@check("extrapolation")
def extrapolation_check() -> CheckOutcome:
    A3 = AlgebraId("A", (3,))
    table = load_shipped_tables()
    extrapolated = extrapolate_table(A3, shared_engine(table).quotient_tp(A3, 1), complete=False)
    expected = {
        "(x^2,xy,y^3)": "(1/2)*(3*a2-a1)*(a1-a2)^2",
        "(x^2,y^2)": "(a1-a2)^2*(2*a1-a2)*(a1-2*a2)/(a1+a2)",
    }
    failures = []
    for ideal, text in expected.items():
        if lookup(extrapolated, A3, parse_ideal(ideal)) != parse_expression(text):
            failures.append(f"e(A_3, {ideal}) = {lookup(extrapolated, A3, parse_ideal(ideal))}")
    for Q, rep, entry in extrapolated.rows():
        if entry.value != table.get(Q, rep).value:
            failures.append(f"{format_ideal(rep)} differs from the shipped row")
    return _outcome(failures, f"{len(extrapolated.rows())} Euler classes of A_3 recovered from tp_A3(1)")


@check("residue_vs_localization")
def residue_check(algebras: Sequence[str], l_max: int = 2) -> CheckOutcome:
    table = load_shipped_tables()
    failures = []
    for Q in _algebras(algebras):
        failures.extend(residue_differences(Q, l_max, table))
    return _outcome(failures, f"residues agree with localization for {len(algebras)} algebras, l <= {l_max}")


@check("asym_consistency")
def asym_check(algebras: Sequence[str]) -> CheckOutcome:
    table = load_shipped_tables()
    failures = [str(Q) for Q in _algebras(algebras) if not asym_consistency(Q, table)]
    return _outcome(failures, f"Asym(k_Q) * e(Q, M^2) = +-dis for {len(algebras)} algebras")


@check("phi_cross_pipeline")
def phi_cross_pipeline(pairs: Sequence[Sequence[int]], l_max: int = 2) -> CheckOutcome:
    failures = []
    for n, r in pairs:
        for l in range(l_max + 1):
            localized = to_quotient(phi_tp_localized(n, r, n + l), width=n + 1).expansion
            closed = phi_tp_schur(n, n - r, l).expansion
            if localized != closed:
                failures.append(f"Phi_{{{n},{r}}} l={l}: {localized} vs {closed}")
    return _outcome(failures, f"localized and Schur forms agree for {len(pairs)} pairs, l <= {l_max}")


@check("d_stability")
def d_stability(algebras: Optional[Sequence[str]] = None, mu_max: int = 3, l_max: int = 2) -> CheckOutcome:
    """tp(l+1) lowers to tp(l); without a list, every algebra the shipped tables cover up to mu_max."""
    table = load_shipped_tables()
    engine = shared_engine(table)
    if algebras is None:
        chosen = [Q for Q in table.algebras() if 1 <= Q.mu <= mu_max and table.covers(Q)]
    else:
        chosen = _algebras(algebras)
    failures = []
    for Q in chosen:
        for l in range(l_max + 1):
            lowered = lower_form(engine.quotient_tp(Q, l + 1), m=Q.mu)
            if lowered.expansion != engine.quotient_tp(Q, l).expansion:
                failures.append(f"{Q} l={l}")
    return _outcome(failures, f"tp(l+1) lowers to tp(l) for {len(chosen)} algebras, l <= {l_max}")


@check("supersymmetry_stability")
def supersymmetry_stability(mu_max: int = 3, l_max: int = 1) -> CheckOutcome:
    """Every table algebra: the localized root form is supersymmetric and stable under (n,p) -> (n+1,p+1)."""
    table = load_shipped_tables()
    engine = shared_engine(table)
    failures = []
    count = 0
    for Q in table.algebras():
        if not 1 <= Q.mu <= mu_max or not table.covers(Q):
            continue
        for l in range(l_max + 1):
            n = engine.localization_dimension(Q, l)
            count += 1
            if not supersymmetry_check(engine.root_tp(Q, n, n + l)):
                failures.append(f"{Q} ({n},{n + l}) is not supersymmetric")
                continue
            here = engine.quotient_tp(Q, l).expansion
            there = to_quotient(engine.root_tp(Q, n + 1, n + 1 + l), width=Q.mu).expansion
            if here != there:
                failures.append(f"{Q} ({n},{n + l}) and ({n + 1},{n + 1 + l}) differ")
    return _outcome(failures, f"{count} root forms are supersymmetric and stable")


@check("positivity")
def positivity(algebras: Sequence[str], l_max: int = 2) -> CheckOutcome:
    engine = shared_engine()
    failures = []
    for Q in _algebras(algebras):
        for l in range(l_max + 1):
            expansion = engine.quotient_tp(Q, l).expansion
            if not expansion.is_nonnegative_integral():
                failures.append(f"{Q} l={l}: {expansion}")
    return _outcome(failures, "all Schur coefficients are nonnegative integers")


@check("chern_nonnegativity")
def chern_nonnegativity(algebras: Sequence[str], l_max: int = 2) -> CheckOutcome:
    engine = shared_engine()
    failures = []
    for Q in _algebras(algebras):
        for l in range(l_max + 1):
            if any(coeff < 0 for _, coeff in engine.quotient_tp(Q, l).chern.terms()):
                failures.append(f"{Q} l={l}")
    return _outcome(failures, "all Chern monomial coefficients are nonnegative")


@check("small_p_lowerings")
def small_p_lowerings(veronese: Sequence[Sequence[int]]) -> CheckOutcome:
    engine = shared_engine()
    failures = []
    III23, I23 = AlgebraId("III", (2, 3)), AlgebraId("I2", (2, 3))
    if iab_from_iiiab(engine.quotient_tp(III23, 1), 2, 3).expansion != engine.quotient_tp(I23, 0).expansion:
        failures.append("tp_I23(0) is not the lowering of tp_III23(1)")
    for n, l in veronese:
        if not veronese_check(n, l):
            failures.append(f"Veronese identity fails at n={n}, l={l}")
    return _outcome(failures, f"I/III lowering and {len(veronese)} Veronese identities hold")


@check("segre_data")
def segre_data(series_n: int = 3, series_degree: int = 4) -> CheckOutcome:
    failures = []
    failures += [f"(({i})) != 2^{i}" for i in range(11) if segre_coeff((i,)) != 2 ** i]
    failures += [f"(({i},0)) != 2^{i}-1" for i in range(1, 9) if segre_coeff((i, 0)) != 2 ** i - 1]
    if segre_coeff((2, 1)) != 3 or segre_coeff((3, 1)) != 10:
        failures.append("((2,1)) or ((3,1)) wrong")
    failures += [f"series n={n}" for n in range(1, series_n + 1) if not segre_series_check(n, series_degree)]
    return _outcome(failures, f"Segre values and expansion through degree {series_degree}")


def brute_force_ideals(n: int, m: int) -> set:
    """Divisor-closed sets of m nonconstant monomials, found by trying every m-subset."""
    box = [a for a in product(range(m + 1), repeat=n) if 1 <= sum(a) <= m]
    found = set()
    for chosen in combinations(box, m):
        comp = set(chosen)
        closed = all(sum(a) == 1 or tuple(a[:j] + (a[j] - 1,) + a[j + 1:]) in comp
                     for a in comp for j in range(n) if a[j])
        if closed:
            found.add(frozenset(comp))
    return found


REPRESENTATIVES = {
    2: ["(x^3)", "(x^2,xy,y^2)"],
    3: ["(x^4)", "(x^2,xy,y^3)", "(x^2,y^2)", "(x^2,y^2,z^2,xy,xz,yz)"],
    4: ["(x^5)", "(x^2,xy,y^4)", "(x^2,xy^2,y^3)", "(x^3,xy,y^3)", "(x^2,y^2,z^3,xy,yz,xz)",
        "(x^2,y^2,z^2,xy,xz)", "(x^2,y^2,z^2,u^2,xy,xz,xu,yz,yu,zu)"],
}


@check("fixed_point_census")
def fixed_point_census(n_max: int = 4, m_max: int = 5, mu_max: int = 4) -> CheckOutcome:
    failures = []
    for n in range(1, n_max + 1):
        for m in range(1, m_max + 1):
            mine = {frozenset(I.complement) for I in enumerate_ideals(n, m)}
            if mine != brute_force_ideals(n, m):
                failures.append(f"n={n}, m={m}: {len(mine)} ideals")
    for mu in range(2, mu_max + 1):
        expected = {canonicalize(parse_ideal(text))[0] for text in REPRESENTATIVES.get(mu, [])}
        got = [rep.ideal for rep in canonical_representatives(mu)]
        if len(got) != len(expected) or set(got) != expected:
            failures.append(f"representatives for mu={mu}: {[format_ideal(I) for I in got]}")
    return _outcome(failures, f"ideal enumeration matches brute force for n <= {n_max}, m <= {m_max}")


@check("restriction_equations")
def restriction_equations() -> CheckOutcome:
    engine = shared_engine()
    failures = []
    if not restrict(engine.root_tp(AlgebraId("A", (2,)), 1, 1), MonomialGerm(1, ((2,),))).is_zero():
        failures.append("Tp_A2(1,1) does not vanish at (x^2)")
    restricted = restrict(engine.root_tp(AlgebraId("A", (3,)), 2, 2), MonomialGerm(2, ((2, 0), (0, 2))))
    if restricted != parse_polynomial("(a1+a2)*a1*a2"):
        failures.append(f"Tp_A3(2,2) at (x^2,y^2) is {restricted}")
    return _outcome(failures, "restriction equations hold")


@check("lookup_localization")
def lookup_localization(cases: Sequence[Sequence]) -> CheckOutcome:
    table = load_shipped_tables()
    failures = []
    for name, n, p in cases:
        Q = parse_algebra(name)
        if localize_by_lookup(Q, n, p, table).poly != localize_tp(Q, n, p, table).poly:
            failures.append(f"{Q} ({n},{p})")
    return _outcome(failures, f"{len(cases)} lookup sums equal the orbit sums")


@check("schur_identities")
def schur_identities(factorization: Sequence[Sequence], gustafson_milne: Sequence[Sequence],
                     two_forms: Sequence[Sequence[int]]) -> CheckOutcome:
    failures = []
    for n, p, lam, mu in factorization:
        if not factorization_check(n, p, parse_partition(lam), parse_partition(mu)):
            failures.append(f"factorization n={n}, p={p}, {lam}, {mu}")
    for m, s, mu in gustafson_milne:
        if not gustafson_milne_check(m, s, parse_partition(mu)):
            failures.append(f"Gustafson-Milne m={m}, s={s}, {mu}")
    for m, s in two_forms:
        if not two_forms_check(m, s, Fraction(3, 2)):
            failures.append(f"two-forms m={m}, s={s}")
    count = len(factorization) + len(gustafson_milne) + len(two_forms)
    return _outcome(failures, f"{count} Schur identities verified")


@check("nets_of_conics")
def nets_of_conics_check() -> CheckOutcome:
    expansion = nets_of_conics()
    weights = expansion.weights()
    ok = weights == {10} and expansion.is_nonnegative_integral()
    ok = ok and all(lam[2] >= 3 for lam, _ in expansion.terms())
    return CheckOutcome(ok, f"{expansion} has weight {sorted(weights)}")


@check("subgrassmannian_phi")
def subgrassmannian_phi() -> CheckOutcome:
    width = subgrassmannian_mu(2, 1, 1)
    solved = to_quotient(subgrassmannian_tp(2, 1, 1, width), width=width).expansion
    expected = phi_tp_schur(2, 2, 1).expansion
    return CheckOutcome(solved == expected, f"subgrassmannian class {solved}")


@check("table_roundtrip")
def table_roundtrip() -> CheckOutcome:
    failures = []
    for path in table_files():
        table = read_table_file(path)
        if load_table(dump_table(table), origin=path) != table:
            failures.append(path)
    return _outcome(failures, "shipped tables survive dump and reload")


@check("thom_series")
def thom_series_check(index_bound: int = 3) -> CheckOutcome:
    series = shared_engine().series(AlgebraId("A", (2,)), index_bound)
    expected = {(0, 0): 1}
    expected.update({(i, -i): 2 ** (i - 1) for i in range(1, index_bound + 1)})
    ok = series.terms == {K: Fraction(a) for K, a in expected.items()}
    return CheckOutcome(ok, str(series))


@check("laurent_residue")
def laurent_residue_check(algebras: Sequence[str], l_max: int = 1) -> CheckOutcome:
    failures = []
    for Q in _algebras(algebras):
        k = generating_function(Q)
        for l in range(l_max + 1):
            sliced, iterated = laurent_residue(k, l), iterated_residue(k, l)
            if sliced != iterated and sliced != -iterated:
                failures.append(f"{Q} l={l}: {sliced} vs {iterated}")
    return _outcome(failures, f"full Laurent slices give the iterated residue for {len(algebras)} algebras")


@check("phi_corank_one")
def phi_corank_one_check(n_max: int = 3, l_max: int = 2) -> CheckOutcome:
    failures = []
    for n in range(1, n_max + 1):
        for l in range(l_max + 1):
            closed, general = phi_corank_one(n, l).expansion, phi_tp_schur(n, 1, l).expansion
            if closed != general:
                failures.append(f"Phi_{{{n},{n - 1}}} l={l}: {closed} vs {general}")
    return _outcome(failures, f"corank-one Phi closed form agrees for n <= {n_max}, l <= {l_max}")


@check("symmetrized_localization")
def symmetrized_localization(cases: Sequence[Sequence]) -> CheckOutcome:
    table = load_shipped_tables()
    failures = []
    for name, n, p in cases:
        Q = parse_algebra(name)
        if localize_symmetrized(Q, n, p, table) != RatFn.from_poly(localize_tp(Q, n, p, table).poly):
            failures.append(f"{Q} ({n},{p})")
    return _outcome(failures, f"{len(cases)} symmetrized sums equal the orbit sums")

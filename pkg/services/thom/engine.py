"""Dispatch from an algebra name to its Thom polynomials and Thom series."""
from typing import Dict, Optional, Tuple

from config.loader import ConfigLoader
from services.errors import PreconditionError
from services.euler.algebras import AlgebraId
from services.euler.tables import EulerTable, load_shipped_tables
from services.phi.localized import phi_tp_localized
from services.phi.schur import phi_tp_schur
from services.thom.closed_forms import porteous, porteous_root
from services.thom.forms import QuotientForm, RootForm
from services.thom.localization import localize_tp
from services.thom.quotient import certify, rho, to_quotient
from services.thom.series import ThomSeries, assemble_series
from utils.logger import logger


class ThomEngine:
    """Caches Thom polynomials per (algebra, l) over one Euler table."""

    def __init__(self, table: Optional[EulerTable] = None):
        self._table = table
        self._quotient: Dict[Tuple[AlgebraId, int], QuotientForm] = {}
        self._root: Dict[Tuple[AlgebraId, int, int], RootForm] = {}

    @property
    def table(self) -> EulerTable:
        if self._table is None:
            self._table = load_shipped_tables()
        return self._table

    def localization_dimension(self, Q: AlgebraId, l: int) -> int:
        """n = max(1, mu-1), raised until the degree lies below the uniqueness bound."""
        n = max(1, Q.mu - 1)
        while Q.mu * l + Q.gamma >= (n + 1) * (n + l + 1):
            n += 1
        return n

    def root_tp(self, Q: AlgebraId, n: int, p: int) -> RootForm:
        if not 1 <= n <= p:
            raise PreconditionError(f"Thom polynomials need p >= n >= 1, got n={n}, p={p}")
        key = (Q, n, p)
        if key not in self._root:
            tp = self._compute_root(Q, n, p)
            certify(tp)
            logger.debug(f"Certified {tp.label}")
            self._root[key] = tp
        return self._root[key]

    def _compute_root(self, Q: AlgebraId, n: int, p: int) -> RootForm:
        family = Q.family
        if family == "Sigma" and n == Q.params[0]:
            return porteous_root(n, p)
        if family == "Phi" and n == Q.params[0]:
            return phi_tp_localized(n, Q.params[1], p)
        if Q.is_table_driven():
            return localize_tp(Q, n, p, self.table)
        tp = self.quotient_tp(Q, p - n)
        return RootForm.from_poly(n, p, rho(n, p, tp.chern), label=f"Tp_{Q.compact}({n},{p})")

    def quotient_tp(self, Q: AlgebraId, l: int) -> QuotientForm:
        """tp_Q(l) in the Delta basis."""
        if l < 0:
            raise PreconditionError(f"l must be nonnegative, got {l}")
        key = (Q, l)
        if key not in self._quotient:
            self._quotient[key] = self._compute_quotient(Q, l)
        return self._quotient[key]

    def _compute_quotient(self, Q: AlgebraId, l: int) -> QuotientForm:
        if Q.family == "Sigma":
            return porteous(Q.params[0], l)
        if Q.family == "Phi":
            m, r = Q.params
            return phi_tp_schur(m, m - r, l)
        n = self.localization_dimension(Q, l)
        tp = self.root_tp(Q, n, n + l)
        logger.info(f"Solving tp_{Q.compact}({l}) from the localization at n={n}, p={n + l}")
        return to_quotient(tp, width=Q.mu, label=Q.compact)

    def localized_quotient_tp(self, Q: AlgebraId, l: int) -> QuotientForm:
        """tp_Q(l) always through a root form, including the closed-form families."""
        if Q.is_table_driven():
            return self.quotient_tp(Q, l)
        n = Q.params[0]
        return to_quotient(self.root_tp(Q, n, n + l), width=Q.mu, label=Q.compact)

    def series(self, Q: AlgebraId, index_bound: Optional[int] = None) -> ThomSeries:
        bound = index_bound if index_bound is not None else ConfigLoader.get("series.index_bound", 3)
        return assemble_series(lambda l: self.quotient_tp(Q, l), Q.mu, Q.gamma, bound, label=Q.compact)


_SHARED: Dict[int, ThomEngine] = {}


def shared_engine(table: Optional[EulerTable] = None) -> ThomEngine:
    """One engine per table, so that checks and commands reuse solved Thom polynomials.

    Without a table the shipped tables are used.
    """
    table = table if table is not None else load_shipped_tables()
    engine = _SHARED.get(id(table))
    if engine is None or engine.table is not table:
        engine = _SHARED[id(table)] = ThomEngine(table)
    return engine


def thom_series(Q: AlgebraId, table: EulerTable, index_bound: Optional[int] = None) -> ThomSeries:
    return shared_engine(table).series(Q, index_bound)

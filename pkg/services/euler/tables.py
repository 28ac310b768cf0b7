"""Tables of virtual tangent Euler classes e(Q, I) keyed by canonical ideals.

Table files are line oriented::

    # comment
    @algebra Q7 mu=3 gamma=5
    A_2 | (x^2,xy,y^2) | (1/3)*(a1-2*a2)*(a2-2*a1)
    I_{2,2} | (x^4) | INF

Expressions use the alpha roots a1, a2, ... and the macros CLUB and SPADE.
"""
import os
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from config.loader import ConfigLoader
from services.algebra.parser import macro_table, parse_expression
from services.algebra.ratfn import RatFn
from services.errors import ExpressionError, MissingEntry, PreconditionError, TableError, ThomError, UsageError
from services.euler.algebras import AlgebraId, custom_algebra, parse_algebra
from services.ideals.ideals import MonomialIdeal, canonical_representatives, canonicalize, format_ideal, parse_ideal, suspension_factor
from utils.logger import logger

EulerValue = RatFn

SHIPPED = "shipped"
EXTRAPOLATED = "extrapolated"
COMPLETED = "reciprocity-completed"
CUSTOM = "custom"

MACRO_DEFINITIONS = {
    "CLUB": "(a1-a2)*(a1-a3)*(a1-2*a2)*(a1-2*a3)*(a2-a3)^2",
    "SPADE": "(a1-a3)^2*(a2-a3)^2*(a1-a2-a3)*(a2-a1-a3)",
}

_DIRECTIVE = re.compile(r"^@algebra\s+(\S+)\s+mu=(\d+)\s+gamma=(\d+)\s*$")


@lru_cache(maxsize=1)
def builtin_macros() -> Dict[str, RatFn]:
    return macro_table(MACRO_DEFINITIONS)


@dataclass
class EulerEntry:
    value: EulerValue
    provenance: str = SHIPPED
    line: Optional[int] = None


def expected_degree(Q: AlgebraId, I: MonomialIdeal) -> int:
    """deg e(Q, I) for I in n(I) variables: n(I)*mu - gamma."""
    return I.n * Q.mu - Q.gamma


class EulerTable:
    """(AlgebraId, canonical MonomialIdeal) -> Euler class, with provenance."""

    def __init__(self, source: str = ""):
        self.source = source
        self.entries: Dict[AlgebraId, Dict[MonomialIdeal, EulerEntry]] = {}
        self.custom: Dict[str, AlgebraId] = {}
        self.report: List[Tuple[str, str, str]] = []

    def algebras(self) -> List[AlgebraId]:
        return list(self.entries)

    def covers(self, Q: AlgebraId) -> bool:
        return Q in self.entries and not self.missing(Q)

    def missing(self, Q: AlgebraId) -> List[MonomialIdeal]:
        have = self.entries.get(Q, {})
        return [rep.ideal for rep in canonical_representatives(Q.mu) if rep.ideal not in have]

    def get(self, Q: AlgebraId, rep: MonomialIdeal) -> EulerEntry:
        try:
            return self.entries[Q][rep]
        except KeyError:
            raise MissingEntry(f"no Euler class for {Q} at {format_ideal(rep)}") from None

    def set(self, Q: AlgebraId, rep: MonomialIdeal, value: EulerValue, provenance: str = SHIPPED,
            line: Optional[int] = None) -> None:
        self.entries.setdefault(Q, {})[rep] = EulerEntry(value, provenance, line)

    def merge(self, other: "EulerTable") -> "EulerTable":
        for Q, rows in other.entries.items():
            for rep, entry in rows.items():
                if rep in self.entries.get(Q, {}):
                    raise TableError(f"duplicate row for {Q} at {format_ideal(rep)}", entry.line)
                self.entries.setdefault(Q, {})[rep] = entry
        self.custom.update(other.custom)
        self.report.extend(other.report)
        return self

    def rows(self) -> List[Tuple[AlgebraId, MonomialIdeal, EulerEntry]]:
        return [(Q, rep, entry) for Q, rows in self.entries.items() for rep, entry in sorted(rows.items())]

    def __eq__(self, other) -> bool:
        if not isinstance(other, EulerTable) or set(self.entries) != set(other.entries):
            return False
        for Q, rows in self.entries.items():
            theirs = other.entries[Q]
            if set(rows) != set(theirs):
                return False
            for rep, entry in rows.items():
                if entry.value != theirs[rep].value:
                    return False
        return True

    __hash__ = None

    def lookup(self, Q: AlgebraId, I: MonomialIdeal) -> EulerValue:
        return lookup(self, Q, I)


def lookup(table: EulerTable, Q: AlgebraId, I: MonomialIdeal) -> EulerValue:
    """e(Q, I) for any codim-mu monomial ideal: permuted representative times suspension factors."""
    if I.codim != Q.mu:
        raise PreconditionError(f"ideal {format_ideal(I)} has codimension {I.codim}, algebra {Q} has mu={Q.mu}")
    rep, renaming = canonicalize(I)
    value = table.get(Q, rep).value.rename(renaming)
    support = set(I.support())
    for j in range(I.n):
        if j not in support:
            value = value * RatFn.from_poly(suspension_factor(I, j + 1))
    return value


# -- parsing --------------------------------------------------------------
def _column(line: str, field: int) -> int:
    """1-based column where the given |-separated field starts."""
    position = 0
    for _ in range(field):
        position = line.index("|", position) + 1
    return position + 1


def load_table(source: str, origin: str = "<string>", provenance: str = SHIPPED,
               custom: Optional[Dict[str, AlgebraId]] = None) -> EulerTable:
    """Parse table text; every row is validated for codimension, degree and duplicates."""
    table = EulerTable(origin)
    table.custom.update(custom or {})
    macros = builtin_macros()
    for number, raw in enumerate(source.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if line.lstrip().startswith("@"):
            match = _DIRECTIVE.match(line.strip())
            if not match:
                raise TableError("malformed directive, expected '@algebra NAME mu=M gamma=G'", number, 1)
            name, mu, gamma = match.group(1), int(match.group(2)), int(match.group(3))
            table.custom[name] = custom_algebra(name, mu, gamma)
            continue
        fields = line.split("|")
        if len(fields) != 3:
            raise TableError(f"expected 3 fields separated by '|', found {len(fields)}", number, 1)
        try:
            Q = parse_algebra(fields[0], table.custom)
        except UsageError as e:
            raise TableError(str(e), number, 1) from None
        try:
            ideal = parse_ideal(fields[1])
        except (ExpressionError, PreconditionError) as e:
            raise TableError(str(e), number, _column(line, 1) + (getattr(e, "column", None) or 1) - 1) from None
        try:
            value = parse_expression(fields[2], macros)
        except ExpressionError as e:
            raise TableError(str(e), number, _column(line, 2) + (e.column or 1) - 1) from None
        rep, renaming = canonicalize(ideal)
        if rep.n != ideal.n:
            raise TableError(f"ideal {fields[1].strip()} is not written in its minimal variables", number,
                             _column(line, 1))
        inverse = {w: v for v, w in renaming.items()}
        value = value.rename(inverse)
        _validate(Q, rep, value, number)
        if rep in table.entries.get(Q, {}):
            raise TableError(f"duplicate row for {Q} at {format_ideal(rep)}", number, 1)
        table.set(Q, rep, value, provenance, number)
    logger.info(f"Loaded {sum(len(r) for r in table.entries.values())} Euler classes from {origin}")
    return table


def _validate(Q: AlgebraId, rep: MonomialIdeal, value: RatFn, line: int) -> None:
    if rep.codim != Q.mu:
        raise TableError(f"ideal {format_ideal(rep)} has codimension {rep.codim}, but mu({Q}) = {Q.mu}", line)
    if value.is_infinite():
        return
    if value.is_zero():
        raise TableError(f"zero Euler class for {Q} at {format_ideal(rep)}", line)
    if not value.is_homogeneous():
        raise TableError(f"Euler class for {Q} at {format_ideal(rep)} is not homogeneous", line)
    expected = expected_degree(Q, rep)
    if value.degree() != expected:
        raise TableError(f"Euler class for {Q} at {format_ideal(rep)} has degree {value.degree()}, "
                         f"expected {expected}", line)


def dump_table(table: EulerTable) -> str:
    """Canonical text form; completed rows are written as comments so reloading recomputes them."""
    lines = [f"# Euler classes ({table.source})" if table.source else "# Euler classes"]
    for name, Q in sorted(table.custom.items()):
        lines.append(f"@algebra {name} mu={Q.mu} gamma={Q.gamma}")
    for Q, rep, entry in table.rows():
        row = f"{Q} | {format_ideal(rep)} | {entry.value}"
        if entry.provenance == COMPLETED:
            lines.append(f"# {entry.provenance}: {row}")
        else:
            lines.append(row)
    return "\n".join(lines) + "\n"


def read_table_file(path: str, provenance: str = SHIPPED) -> EulerTable:
    with open(path, "r", encoding="utf-8") as f:
        return load_table(f.read(), origin=os.path.basename(path), provenance=provenance)


def table_files(directory: Optional[str] = None) -> List[str]:
    directory = ConfigLoader.resolve_path(directory or ConfigLoader.get("euler.table_dir", "data/euler"))
    if not os.path.isdir(directory):
        raise ThomError(f"Euler table directory {directory} does not exist")
    return sorted(os.path.join(directory, name) for name in os.listdir(directory) if name.endswith(".table"))


_SHIPPED_CACHE: Dict[str, EulerTable] = {}


def load_shipped_tables(directory: Optional[str] = None, complete: bool = True) -> EulerTable:
    """All shipped tables merged; missing M_mu^2 rows are completed by reciprocity once and cached."""
    from services.euler.reciprocity import complete_missing

    key = f"{directory}:{complete}"
    if key not in _SHIPPED_CACHE:
        table = EulerTable("shipped")
        for path in table_files(directory):
            table.merge(read_table_file(path))
        if complete:
            complete_missing(table)
        _SHIPPED_CACHE[key] = table
    return _SHIPPED_CACHE[key]


def ingest_custom_table(path: str) -> EulerTable:
    """Load a user table, validate it, and complete missing M_mu^2 rows.

    Structural checks are collected in ``table.report`` as (check, status, detail).
    """
    from services.euler.reciprocity import complete_missing, reciprocity_holds

    table = read_table_file(path, provenance=CUSTOM)
    table.report.append(("parse", "pass", f"{len(table.rows())} rows, degrees consistent"))
    completed = complete_missing(table)
    for Q in completed:
        table.report.append(("reciprocity", "completed", f"{Q}: M_{Q.mu}^2 row filled in"))
    for Q in table.algebras():
        if table.missing(Q):
            names = ", ".join(format_ideal(I) for I in table.missing(Q))
            table.report.append(("coverage", "fail", f"{Q}: missing {names}"))
            continue
        if Q.mu > 1 and Q not in completed:
            status = "pass" if reciprocity_holds(table, Q) else "fail"
            table.report.append(("reciprocity", status, f"{Q}: sum of 1/e over fixed points"))
    logger.info(f"Ingested custom table {path} with algebras {', '.join(str(Q) for Q in table.algebras())}")
    return table

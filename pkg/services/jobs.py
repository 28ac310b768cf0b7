"""JobSpec: one validated CLI invocation."""
from argparse import Namespace
from dataclasses import dataclass
from typing import Optional, Tuple

from config.loader import ConfigLoader
from services.errors import UsageError
from services.euler.algebras import AlgebraId, parse_algebra
from services.euler.tables import EulerTable, ingest_custom_table, load_shipped_tables
from utils.logger import logger

COMMANDS = ("tp", "series", "euler", "residue", "verify", "help")
BASES = ("roots", "chern", "schur")
NEEDS_ALGEBRA = ("tp", "series", "residue")


@dataclass
class JobSpec:
    command: str
    algebra: Optional[str] = None
    n: Optional[int] = None
    p: Optional[int] = None
    l: Optional[int] = None
    basis: str = "schur"
    format: str = "text"
    table: Optional[str] = None
    suite: str = "fast"
    index_bound: Optional[int] = None
    workers: Optional[int] = None

    @classmethod
    def from_args(cls, args: Namespace) -> "JobSpec":
        return cls(
            command=args.command,
            algebra=getattr(args, "algebra", None),
            n=getattr(args, "n", None),
            p=getattr(args, "p", None),
            l=getattr(args, "l", None),
            basis=getattr(args, "basis", None) or "schur",
            format=getattr(args, "format", None) or ConfigLoader.get("output.format", "text"),
            table=getattr(args, "table", None),
            suite=getattr(args, "suite", None) or ConfigLoader.get("verify.default_suite", "fast"),
            index_bound=getattr(args, "index_bound", None),
            workers=getattr(args, "workers", None),
        )

    def label(self) -> str:
        """Short tag for log records, e.g. "tp A2 l=1" or "verify fast"."""
        if self.command == "verify":
            return f"verify {self.suite}"
        parts = [self.command] + ([self.algebra] if self.algebra else [])
        if self.n is not None:
            parts.append(f"n={self.n} p={self.p}")
        elif self.l is not None:
            parts.append(f"l={self.l}")
        return " ".join(parts)

    def validate(self) -> "JobSpec":
        """Check parameter combinations and fill in the implied one of n, p, l."""
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.basis not in BASES:
            raise UsageError(f"unknown basis {self.basis!r}, expected one of {', '.join(BASES)}")
        if self.command in NEEDS_ALGEBRA and not self.algebra:
            raise UsageError(f"{self.command} needs --algebra")
        for flag in ("n", "p", "l", "index_bound", "workers"):
            value = getattr(self, flag)
            if value is not None and value < 0:
                raise UsageError(f"--{flag.replace('_', '-')} must be nonnegative, got {value}")

        if self.command == "tp":
            self._settle_dimensions()
        elif self.command == "residue":
            if self.l is None:
                raise UsageError("residue needs --l")
            if self.basis == "roots":
                raise UsageError("residue results are in the quotient variables; use --basis chern or schur")
        return self

    def _settle_dimensions(self) -> None:
        if self.n is None:
            if self.p is not None:
                raise UsageError("--p needs --n")
            if self.l is None:
                raise UsageError("tp needs --l, or --n with --p or --l")
            if self.basis == "roots":
                raise UsageError("--basis roots needs --n")
            return
        if self.n < 1:
            raise UsageError(f"--n must be positive, got {self.n}")
        if self.p is None:
            if self.l is None:
                raise UsageError("--n needs --p or --l")
            self.p = self.n + self.l
        if self.p < self.n:
            raise UsageError(f"need p >= n, got n={self.n}, p={self.p}")
        if self.l is not None and self.l != self.p - self.n:
            raise UsageError(f"--l {self.l} contradicts p - n = {self.p - self.n}")
        self.l = self.p - self.n

    def euler_table(self) -> EulerTable:
        """The custom table when --table is given, otherwise the shipped tables."""
        if self.table:
            return ingest_custom_table(ConfigLoader.resolve_path(self.table))
        return load_shipped_tables()

    def resolve(self) -> Tuple[AlgebraId, EulerTable]:
        table = self.euler_table()
        Q = parse_algebra(self.algebra, custom=table.custom)
        logger.debug(f"Job {self.command}: {Q} with {table.source or 'unnamed'} table")
        return Q, table

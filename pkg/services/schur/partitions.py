"""Integer partitions."""
from functools import lru_cache
from itertools import groupby
from typing import Iterable, Iterator, List, Optional, Tuple

from services.errors import ExpressionError


class Partition:
    """A weakly decreasing tuple of positive integers (trailing zeros dropped)."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts) or any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"not a partition: {parts}")
        self.parts: Tuple[int, ...] = parts

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i] if i < len(self.parts) else 0

    def __hash__(self) -> int:
        return hash(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __lt__(self, other: "Partition") -> bool:
        return self.parts < other.parts

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"

    def __str__(self) -> str:
        return format_partition(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def padded(self, length: int) -> Tuple[int, ...]:
        return self.parts + (0,) * (length - len(self.parts))


def conjugate(lam: Partition) -> Partition:
    if not lam.parts:
        return Partition()
    return Partition(sum(1 for p in lam.parts if p > j) for j in range(lam.parts[0]))


def staircase(s: int) -> Partition:
    """rho_s = (s, s-1, ..., 1)."""
    return Partition(range(s, 0, -1))


def rectangle(rows: int, width: int) -> Partition:
    return Partition((width,) * rows)


@lru_cache(maxsize=None)
def _partitions(d: int, max_parts: int, max_part: int) -> Tuple[Tuple[int, ...], ...]:
    if d == 0:
        return ((),)
    if max_parts == 0:
        return ()
    out = []
    for first in range(min(d, max_part), 0, -1):
        for rest in _partitions(d - first, max_parts - 1, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(d: int, max_parts: Optional[int] = None, max_part: Optional[int] = None) -> List[Partition]:
    """Partitions of d in reverse-lexicographic order."""
    if d < 0:
        return []
    return [Partition(p) for p in _partitions(d, d if max_parts is None else max_parts,
                                              d if max_part is None else max_part)]


def format_partition(lam: Partition, shorthand: bool = False) -> str:
    """Comma-separated parts; runs of three or more equal parts use p^k when shorthand is set."""
    pieces = []
    for value, run in groupby(lam.parts):
        count = len(list(run))
        if shorthand and count >= 3:
            pieces.append(f"{value}^{count}")
        else:
            pieces.extend([str(value)] * count)
    return ",".join(pieces)


def parse_partition(text: str) -> Partition:
    """Accepts "3,3,3,1", "3^3,1" and an empty string for the empty partition."""
    text = text.strip().strip("()")
    if not text:
        return Partition()
    parts: List[int] = []
    for position, token in enumerate(text.split(",")):
        token = token.strip()
        try:
            if "^" in token:
                value, count = token.split("^")
                parts.extend([int(value)] * int(count))
            else:
                parts.append(int(token))
        except ValueError:
            raise ExpressionError(f"bad partition part {token!r}", position + 1) from None
    try:
        return Partition(parts)
    except ValueError as e:
        raise ExpressionError(str(e)) from None

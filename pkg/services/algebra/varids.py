"""Variable identifiers for every polynomial in the package."""
from typing import NamedTuple

NAMESPACES = ("alpha", "beta", "c", "d", "t", "z")
NAMESPACE_RANK = {name: rank for rank, name in enumerate(NAMESPACES)}

_PREFIX = {"alpha": "a", "beta": "b", "c": "c", "z": "z"}


class VarId(NamedTuple):
    namespace: str
    index: int

    def __str__(self) -> str:
        if self.namespace == "t":
            return "t"
        if self.namespace == "d":
            return f"d_{{{self.index}}}"
        return f"{_PREFIX[self.namespace]}{self.index}"


def alpha(i: int) -> VarId:
    return VarId("alpha", i)


def beta(i: int) -> VarId:
    return VarId("beta", i)


def c(i: int) -> VarId:
    return VarId("c", i)


def d(i: int) -> VarId:
    return VarId("d", i)


def z(i: int) -> VarId:
    return VarId("z", i)


T = VarId("t", 1)

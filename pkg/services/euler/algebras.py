"""Names of the nilpotent algebras Q and their numerical invariants mu, gamma."""
import re
from dataclasses import dataclass
from math import comb
from typing import Optional, Tuple

from services.errors import UsageError

FAMILIES = ("A", "Sigma", "I2", "III", "SigmaTB21", "Phi", "Custom")

_PATTERNS = (
    ("SigmaTB21", re.compile(r"^Sigma\^?\{?2,1\}?$|^Sigma21$")),
    ("Sigma", re.compile(r"^Sigma\^?\{?(\d+)\}?$")),
    ("III", re.compile(r"^III_?\{?(\d),?(\d)\}?$")),
    ("I2", re.compile(r"^I_?\{?(\d),?(\d)\}?$")),
    ("Phi", re.compile(r"^Phi_?\{?(\d),?(\d)\}?$")),
    ("A", re.compile(r"^A_?\{?(\d+)\}?$")),
)


@dataclass(frozen=True, order=True)
class AlgebraId:
    """A contact class, named by its local algebra.

    Custom algebras carry their name and (mu, gamma) in ``params``/``name``.
    """

    family: str
    params: Tuple[int, ...] = ()
    name: str = ""

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise UsageError(f"unknown algebra family {self.family!r}")
        if self.family == "Phi" and not 0 <= self.params[1] < self.params[0]:
            raise UsageError(f"Phi_{{m,r}} needs 0 <= r < m, got {self.params}")
        if self.family in ("I2", "III") and min(self.params) < 2:
            raise UsageError(f"{self.family} needs both parameters >= 2")
        if self.family in ("A", "Sigma") and self.params[0] < 1:
            raise UsageError(f"{self.family} needs a positive index")

    @property
    def mu(self) -> int:
        f, ps = self.family, self.params
        if f in ("A", "Sigma"):
            return ps[0]
        if f == "I2":
            return ps[0] + ps[1] - 1
        if f == "III":
            return ps[0] + ps[1] - 2
        if f == "SigmaTB21":
            return 4
        if f == "Phi":
            return ps[0] + 1
        return ps[0]

    @property
    def gamma(self) -> int:
        """Codimension of the class at l = 0; tp_Q(l) has degree mu*l + gamma."""
        f, ps = self.family, self.params
        if f == "A":
            return ps[0]
        if f == "Sigma":
            return ps[0] ** 2
        if f in ("I2", "III"):
            return ps[0] + ps[1]
        if f == "SigmaTB21":
            return 7
        if f == "Phi":
            m, r = ps
            return comb(m + 1, 2) + comb(r + 1, 2) + 1
        return ps[1]

    def __str__(self) -> str:
        f, ps = self.family, self.params
        if f == "A":
            return f"A_{ps[0]}"
        if f == "Sigma":
            return f"Sigma^{ps[0]}"
        if f == "I2":
            return f"I_{{{ps[0]},{ps[1]}}}"
        if f == "III":
            return f"III_{{{ps[0]},{ps[1]}}}"
        if f == "SigmaTB21":
            return "Sigma^{2,1}"
        if f == "Phi":
            return f"Phi_{{{ps[0]},{ps[1]}}}"
        return self.name

    @property
    def compact(self) -> str:
        """Flag form, e.g. A2, I23, Sigma21."""
        if self.family == "Custom":
            return self.name
        prefix = {"A": "A", "Sigma": "Sigma", "I2": "I", "III": "III", "SigmaTB21": "Sigma", "Phi": "Phi"}
        digits = "21" if self.family == "SigmaTB21" else "".join(str(x) for x in self.params)
        return prefix[self.family] + digits

    def is_table_driven(self) -> bool:
        return self.family not in ("Sigma", "Phi")


def custom_algebra(name: str, mu: int, gamma: int) -> AlgebraId:
    return AlgebraId("Custom", (mu, gamma), name)


def parse_algebra(text: str, custom: Optional[dict] = None) -> AlgebraId:
    """Parse A_3 / A3, I_{2,3} / I23, III_{2,4}, Sigma^{2,1} / Sigma21, Sigma^2, Phi_{3,1}."""
    token = text.strip().replace(" ", "")
    if custom and token in custom:
        return custom[token]
    for family, pattern in _PATTERNS:
        match = pattern.match(token)
        if match:
            if family == "SigmaTB21":
                return AlgebraId("SigmaTB21")
            return AlgebraId(family, tuple(int(g) for g in match.groups()))
    raise UsageError(f"cannot parse algebra name {text!r}")


# Aliases inside the Phi family.
PHI_ALIASES = {
    AlgebraId("Phi", (1, 0)): AlgebraId("A", (2,)),
    AlgebraId("Phi", (2, 0)): AlgebraId("I2", (2, 2)),
    AlgebraId("Phi", (2, 1)): AlgebraId("III", (2, 3)),
}

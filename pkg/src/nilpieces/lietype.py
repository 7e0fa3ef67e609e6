from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import NilpiecesError
from .partitions import ParityFamily

CLASSICAL = ("A", "B", "C", "D")
EXCEPTIONAL_RANKS = {"F4": 4, "E8": 8}
_DUAL_FAMILY = {"A": "A", "B": "C", "C": "B", "D": "D"}


@dataclass(frozen=True, order=True)
class LieType:
    """A simple Lie type such as ``B2`` or ``F4``.

    For exceptional types ``family`` carries the full name ("F4", "E8").
    """

    family: str
    rank: int

    def __post_init__(self):
        if self.family in CLASSICAL:
            minimum = {"A": 1, "B": 1, "C": 1, "D": 2}[self.family]
            if self.rank < minimum:
                raise NilpiecesError(f"rank {self.rank} too small for type {self.family}")
        elif self.family in EXCEPTIONAL_RANKS:
            if self.rank != EXCEPTIONAL_RANKS[self.family]:
                raise NilpiecesError(f"{self.family} has rank {EXCEPTIONAL_RANKS[self.family]}")
        else:
            raise NilpiecesError(f"unsupported Lie type family {self.family!r}")

    @classmethod
    def parse(cls, text: str) -> "LieType":
        text = text.strip().upper()
        if text in EXCEPTIONAL_RANKS:
            return cls(text, EXCEPTIONAL_RANKS[text])
        m = re.fullmatch(r"([ABCD])(\d+)", text)
        if not m:
            raise NilpiecesError(f"cannot parse Lie type {text!r}")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self):
        if self.is_exceptional:
            return self.family
        return f"{self.family}{self.rank}"

    @property
    def is_classical(self) -> bool:
        return self.family in CLASSICAL

    @property
    def is_exceptional(self) -> bool:
        return not self.is_classical

    @property
    def parity(self) -> ParityFamily:
        return ParityFamily(self.family)

    @property
    def ambient_size(self) -> int:
        """Size of the defining matrix representation (classical only)."""
        n = self.rank
        return {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}[self.family]

    def langlands_dual(self) -> "LieType":
        if self.is_exceptional:
            return self
        return LieType(_DUAL_FAMILY[self.family], self.rank)

"""K-orbits on O ∩ s for classical symmetric pairs, via signed tableaux.

A signed tableau is a multiset of rows; each row is a length and a leading
sign, with signs alternating along the row.  Rules per kind of pair:

``orthogonal_split(p, q)``  (so(p+q), o(p) x o(q)), signature (p, q):
    for every even length, as many rows start with + as with -.
``symplectic_linear``  (sp(2n), gl(n)), signature (n, n):
    for every odd length, as many rows start with + as with -.
``symplectic_quaternionic(p, q)``  (sp(2n), sp(p) x sp(q)), signature (2p, 2q):
    rows come in equal pairs; odd-length pairs share their leading sign,
    even-length pairs have opposite leading signs.
"""
from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator

from . import exceptional_data
from .errors import HypothesisError, NilpiecesError
from .lietype import LieType
from .orbits import NilpotentOrbit, is_even, is_special, special_piece

KINDS = ("orthogonal_split", "symplectic_quaternionic", "symplectic_linear", "exceptional")


@dataclass(frozen=True)
class SymmetricPair:
    name: str
    ambient: LieType
    kind: str
    p: int = 0
    q: int = 0
    allow_d: bool = False

    def __post_init__(self):
        if self.kind not in KINDS:
            raise NilpiecesError(f"unknown symmetric pair kind {self.kind!r}")
        lt = self.ambient
        if self.kind == "exceptional":
            if lt.is_classical:
                raise NilpiecesError("exceptional pairs need an exceptional ambient type")
            return
        if min(self.p, self.q) < 0:
            raise NilpiecesError("negative signature")
        if self.kind == "orthogonal_split":
            if lt.family not in ("B", "D") or self.p + self.q != lt.ambient_size:
                raise NilpiecesError(f"so({self.p},{self.q}) does not fit {lt}")
            if lt.family == "D" and not self.allow_d:
                raise NilpiecesError(
                    "type D orthogonal pairs need allow_d=True (provisional splitting rule)")
        elif lt.family != "C":
            raise NilpiecesError(f"{self.kind} needs a type C ambient, got {lt}")
        elif self.kind == "symplectic_quaternionic" and self.p + self.q != lt.rank:
            raise NilpiecesError(f"sp({self.p},{self.q}) does not fit {lt}")

    @property
    def signature(self) -> tuple:
        if self.kind == "orthogonal_split":
            return self.p, self.q
        if self.kind == "symplectic_quaternionic":
            return 2 * self.p, 2 * self.q
        if self.kind == "symplectic_linear":
            return self.ambient.rank, self.ambient.rank
        raise NilpiecesError("exceptional pairs have no tableau signature")

    def __str__(self):
        return self.name


def orthogonal_split(p: int, q: int, *, allow_d: bool = False) -> SymmetricPair:
    n, odd = divmod(p + q, 2)
    lt = LieType("B", n) if odd else LieType("D", n)
    return SymmetricPair(f"so({p},{q})", lt, "orthogonal_split", p, q, allow_d)


def symplectic_quaternionic(p: int, q: int) -> SymmetricPair:
    return SymmetricPair(f"sp({p},{q})", LieType("C", p + q), "symplectic_quaternionic", p, q)


def symplectic_linear(n: int) -> SymmetricPair:
    return SymmetricPair(f"sp({2 * n},R)", LieType("C", n), "symplectic_linear")


@dataclass(frozen=True, order=True)
class SignedTableau:
    """Rows as (length, leading sign) with sign +1 or -1, in canonical order."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(sorted(((int(l), int(s)) for l, s in self.rows), key=lambda r: (-r[0], -r[1])))
        if any(l <= 0 or s not in (1, -1) for l, s in rows):
            raise NilpiecesError(f"bad tableau rows {rows}")
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> tuple:
        return tuple(l for l, _ in self.rows)

    @property
    def signature(self) -> tuple:
        plus = sum((l + 1) // 2 if s > 0 else l // 2 for l, s in self.rows)
        return plus, sum(l for l, _ in self.rows) - plus

    def row_strings(self) -> list[str]:
        out = []
        for l, s in self.rows:
            chars = "+-" if s > 0 else "-+"
            out.append("".join(chars[k % 2] for k in range(l)))
        return out

    def __str__(self):
        return " / ".join(self.row_strings())

    @classmethod
    def parse(cls, text: str) -> "SignedTableau":
        rows = []
        for chunk in text.split("/"):
            chunk = chunk.strip()
            if not chunk or set(chunk) - set("+-"):
                raise NilpiecesError(f"bad tableau row {chunk!r}")
            if any(a == b for a, b in zip(chunk, chunk[1:])):
                raise NilpiecesError(f"signs must alternate in row {chunk!r}")
            rows.append((len(chunk), 1 if chunk[0] == "+" else -1))
        return cls(tuple(rows))


def _choices(kind: str, length: int, mult: int):
    """Possible numbers of +-leading rows among ``mult`` rows of ``length``."""
    if kind == "orthogonal_split":
        if length % 2 == 0:
            return [mult // 2] if mult % 2 == 0 else []
        return list(range(mult, -1, -1))
    if kind == "symplectic_linear":
        if length % 2 == 1:
            return [mult // 2] if mult % 2 == 0 else []
        return list(range(mult, -1, -1))
    # quaternionic: rows come in pairs
    if mult % 2:
        return []
    if length % 2 == 0:
        return [mult // 2]
    return list(range(mult, -1, -2))


def enumerate_tableaux(pair: SymmetricPair, o: NilpotentOrbit) -> Iterator[SignedTableau]:
    """Stream the canonical signed tableaux for ``o`` under ``pair``."""
    if pair.kind == "exceptional":
        raise NilpiecesError("exceptional pairs are counted from tables, not tableaux")
    if o.lie_type != pair.ambient:
        raise NilpiecesError(f"orbit {o} does not live in {pair.ambient} (pair {pair})")
    target = pair.signature
    lengths = sorted(Counter(o.jordan).items(), key=lambda t: -t[0])
    options = [[(length, mult, k) for k in _choices(pair.kind, length, mult)]
               for length, mult in lengths]
    for combo in itertools.product(*options):
        rows = []
        for length, mult, k in combo:
            rows += [(length, 1)] * k + [(length, -1)] * (mult - k)
        t = SignedTableau(tuple(rows))
        if t.signature == target:
            yield t


def count(pair: SymmetricPair, o: NilpotentOrbit) -> int:
    if pair.kind == "exceptional":
        return exceptional_data.lookup(o.lie_type, o.label).count(pair.name)
    return sum(1 for _ in enumerate_tableaux(pair, o))


# --- inner classes ------------------------------------------------------------

@dataclass(frozen=True)
class InnerClassDescriptor:
    name: str
    group: LieType
    dual: LieType
    pairs: tuple = field(default=())

    def __post_init__(self):
        if self.dual != self.group.langlands_dual():
            raise NilpiecesError(f"{self.dual} is not the Langlands dual of {self.group}")
        if not self.pairs:
            raise NilpiecesError("an inner class needs at least one symmetric pair")
        for pair in self.pairs:
            if pair.ambient != self.dual:
                raise NilpiecesError(f"pair {pair} lives in {pair.ambient}, not {self.dual}")


def sp2n_split(n: int) -> InnerClassDescriptor:
    """G = Sp(2n), inner class of the split form; K_i = S(O(2n+1-i) x O(i)), i = 0..n."""
    if n < 1:
        raise NilpiecesError("sp2n-split needs n >= 1")
    pairs = tuple(orthogonal_split(2 * n + 1 - i, i) for i in range(n + 1))
    return InnerClassDescriptor(f"sp{2 * n}-split", LieType("C", n), LieType("B", n), pairs)


def _exceptional_preset(name, family):
    lt = LieType.parse(family)
    return InnerClassDescriptor(name, lt, lt, (SymmetricPair(name, lt, "exceptional"),))


PRESET_NAMES = ("sp4-split", "sp2n-split", "f4-split", "e8-split")


def get_preset(name: str, rank: int | None = None) -> InnerClassDescriptor:
    """Look up an inner-class preset.  ``sp2n-split`` needs ``rank``;
    ``sp6-split`` and similar spell the rank out."""
    name = name.strip().lower()
    if name == "f4-split":
        return _exceptional_preset(name, "F4")
    if name == "e8-split":
        return _exceptional_preset(name, "E8")
    if name == "sp2n-split":
        if rank is None:
            raise NilpiecesError("preset sp2n-split needs a rank")
        return sp2n_split(rank)
    m = re.fullmatch(r"sp(\d+)-split", name)
    if m and int(m.group(1)) % 2 == 0:
        return sp2n_split(int(m.group(1)) // 2)
    raise NilpiecesError(f"unknown preset {name!r}; known: {', '.join(PRESET_NAMES)}")


def count_on_special_piece(ic: InnerClassDescriptor, o_special: NilpotentOrbit) -> dict:
    """(member orbit, pair name) -> number of K-orbits, over the special piece."""
    if o_special.lie_type != ic.dual:
        raise NilpiecesError(f"{o_special} is not an orbit of {ic.dual}")
    if not is_special(o_special):
        raise HypothesisError(f"{o_special} is not special")
    if not is_even(o_special):
        raise HypothesisError(f"{o_special} is not even")
    out = {}
    for member in special_piece(o_special):
        for pair in ic.pairs:
            out[(member, pair.name)] = count(pair, member)
    return out

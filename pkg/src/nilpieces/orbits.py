"""Nilpotent orbit calculus.

Classical orbits are handled from their Jordan partitions; F4 and E8
orbits are looked up in :mod:`nilpieces.exceptional_data`.  Simple roots
use Bourbaki numbering throughout (for F4 the first two roots are long).

Very even orbits of type D carry a tag ``"I"`` or ``"II"``.  Tag I is the
orbit whose dominant neutral element has positive last coordinate.
Duality keeps the tag of a very even orbit, and an untagged orbit whose
dual is very even is sent to tag I.  Closure between the two tags of the
same partition is never asserted.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import exceptional_data
from .errors import NilpiecesError
from .lietype import LieType
from .partitions import (
    Partition,
    ParityFamily,
    collapse,
    dominance_leq,
    enumerate_partitions,
    format_partition,
    is_valid,
    is_very_even,
    make_partition,
    parse_partition,
    transpose,
)


@dataclass(frozen=True, order=True)
class NilpotentOrbit:
    lie_type: LieType
    jordan: Partition | None = None
    label: str | None = None
    tag: str | None = None

    def __post_init__(self):
        lt = self.lie_type
        if lt.is_classical:
            if self.jordan is None or self.label is not None:
                raise NilpiecesError(f"classical orbit of {lt} needs a partition")
            object.__setattr__(self, "jordan", make_partition(self.jordan))
            if not is_valid(self.jordan, lt.parity, lt.ambient_size):
                raise NilpiecesError(
                    f"{format_partition(self.jordan)} is not a nilpotent orbit of {lt}")
            needs_tag = lt.family == "D" and is_very_even(self.jordan)
            if needs_tag and self.tag not in ("I", "II"):
                raise NilpiecesError(
                    f"very even orbit {format_partition(self.jordan)} of {lt} needs tag I or II")
            if not needs_tag and self.tag is not None:
                raise NilpiecesError("only very even type D orbits carry a tag")
        else:
            if self.label is None or self.jordan is not None:
                raise NilpiecesError(f"orbit of {lt} needs a Bala-Carter label")
            exceptional_data.lookup(lt, self.label)

    def __str__(self):
        if self.lie_type.is_exceptional:
            return f"{self.lie_type}:{self.label}"
        s = f"{self.lie_type}:{format_partition(self.jordan)}"
        return s + (f":{self.tag}" if self.tag else "")

    @property
    def name(self) -> str:
        """Short name without the type, e.g. ``3,1,1`` or ``F4(a3)``."""
        return str(self).split(":", 1)[1]


def orbit(lie_type, parts=None, *, label=None, tag=None) -> NilpotentOrbit:
    if isinstance(lie_type, str):
        lie_type = LieType.parse(lie_type)
    if parts is not None and isinstance(parts, str):
        parts = parse_partition(parts)
    return NilpotentOrbit(lie_type, parts, label, tag)


def parse_orbit(text: str) -> NilpotentOrbit:
    """Parse ``"B2:3,1,1"``, ``"F4:F4(a3)"`` or ``"D4:2,2,2,2:I"``."""
    bits = text.strip().split(":")
    if len(bits) not in (2, 3):
        raise NilpiecesError(f"cannot parse orbit {text!r}")
    lt = LieType.parse(bits[0])
    tag = bits[2] if len(bits) == 3 else None
    if lt.is_exceptional:
        return NilpotentOrbit(lt, None, bits[1].strip(), tag)
    return NilpotentOrbit(lt, parse_partition(bits[1]), None, tag)


@lru_cache(maxsize=None)
def all_orbits(lie_type: LieType) -> tuple:
    """Every nilpotent orbit of ``lie_type`` (exceptional: shipped ones)."""
    if lie_type.is_exceptional:
        return tuple(NilpotentOrbit(lie_type, None, lab) for lab in exceptional_data.labels(lie_type))
    out = []
    for p in enumerate_partitions(lie_type.ambient_size, lie_type.parity):
        if lie_type.family == "D" and is_very_even(p):
            out += [NilpotentOrbit(lie_type, p, None, "I"), NilpotentOrbit(lie_type, p, None, "II")]
        else:
            out.append(NilpotentOrbit(lie_type, p))
    return tuple(out)


def zero_orbit(lie_type: LieType) -> NilpotentOrbit:
    if lie_type.is_exceptional:
        return NilpotentOrbit(lie_type, None, "0")
    return NilpotentOrbit(lie_type, (1,) * lie_type.ambient_size)


def regular_orbit(lie_type: LieType) -> NilpotentOrbit:
    if lie_type.is_exceptional:
        return NilpotentOrbit(lie_type, None, lie_type.family)
    n, size = lie_type.rank, lie_type.ambient_size
    parts = (2 * n - 1, 1) if lie_type.family == "D" else (size,)
    return NilpotentOrbit(lie_type, parts)


# --- neutral element and weighted diagrams --------------------------------

def h_multiset(p: Partition) -> list[int]:
    """Eigenvalues of the neutral element in the defining representation."""
    out = []
    for part in p:
        out += list(range(part - 1, -part, -2))
    return sorted(out, reverse=True)


def dominant_h(o: NilpotentOrbit) -> tuple:
    """Dominant neutral element in standard coordinates (classical)."""
    if o.lie_type.is_exceptional:
        raise NilpiecesError("standard coordinates are only defined for classical types")
    values = h_multiset(o.jordan)
    lt = o.lie_type
    if lt.family == "A":
        return tuple(values)
    h = list(values[:lt.rank])
    if o.tag == "II":
        h[-1] = -h[-1]
    return tuple(h)


def _labels_from_h(lt: LieType, h) -> tuple:
    n = lt.rank
    diffs = [h[i] - h[i + 1] for i in range(n - 1)]
    if lt.family == "A":
        return tuple(diffs + [h[n - 1] - h[n]])
    last = {"B": h[n - 1], "C": 2 * h[n - 1], "D": h[n - 2] + h[n - 1] if n >= 2 else 0}[lt.family]
    return tuple(diffs + [last])


@dataclass(frozen=True)
class WeightedDynkinDiagram:
    labels: tuple

    def __str__(self):
        return "".join(str(x) for x in self.labels)

    @property
    def is_even(self) -> bool:
        return all(x % 2 == 0 for x in self.labels)


def weighted_dynkin(o: NilpotentOrbit) -> WeightedDynkinDiagram:
    if o.lie_type.is_exceptional:
        return WeightedDynkinDiagram(exceptional_data.lookup(o.lie_type, o.label).weighted_diagram)
    labels = _labels_from_h(o.lie_type, dominant_h(o))
    assert all(x in (0, 1, 2) for x in labels), labels
    return WeightedDynkinDiagram(labels)


def is_even(o: NilpotentOrbit) -> bool:
    return weighted_dynkin(o).is_even


def lambda_of(o: NilpotentOrbit) -> tuple:
    """Half the dominant neutral element.

    Classical types: standard coordinates (n+1 of them for type A).
    Exceptional types: pairings with the simple roots, i.e. half the labels.
    """
    if o.lie_type.is_exceptional:
        return tuple(Fraction(x, 2) for x in weighted_dynkin(o).labels)
    return tuple(Fraction(x, 2) for x in dominant_h(o))


@dataclass(frozen=True)
class LeviDescriptor:
    lie_type: LieType
    simple_roots: tuple  # 1-based, sorted

    def __post_init__(self):
        roots = tuple(sorted(set(self.simple_roots)))
        if any(not 1 <= i <= self.lie_type.rank for i in roots):
            raise NilpiecesError(f"simple roots {roots} out of range for {self.lie_type}")
        object.__setattr__(self, "simple_roots", roots)

    def __str__(self):
        return "{" + ",".join(map(str, self.simple_roots)) + "}"


def zero_levi(o: NilpotentOrbit) -> LeviDescriptor:
    wd = weighted_dynkin(o)
    if not wd.is_even:
        raise NilpiecesError(f"{o} is not even (diagram {wd}); the zero-label Levi is undefined")
    return LeviDescriptor(o.lie_type, tuple(i + 1 for i, x in enumerate(wd.labels) if x == 0))


# --- duality, special orbits, closure --------------------------------------

def dual(o: NilpotentOrbit) -> NilpotentOrbit:
    """Spaltenstein/Barbasch-Vogan dual, an orbit of the Langlands dual type."""
    lt = o.lie_type
    if lt.is_exceptional:
        return NilpotentOrbit(lt, None, exceptional_data.dual_label(lt, o.label))
    target = lt.langlands_dual()
    t = list(transpose(o.jordan))
    if lt.family == "A":
        return NilpotentOrbit(target, tuple(t))
    if lt.family == "B":
        t[-1] -= 1
        q = collapse(make_partition(t), ParityFamily.C)
    elif lt.family == "C":
        t[0] += 1
        q = collapse(make_partition(t), ParityFamily.B)
    else:
        q = collapse(tuple(t), ParityFamily.D)
    tag = None
    if target.family == "D" and is_very_even(q):
        tag = o.tag or "I"
    return NilpotentOrbit(target, q, None, tag)


def is_special(o: NilpotentOrbit) -> bool:
    if o.lie_type.is_exceptional:
        return exceptional_data.lookup(o.lie_type, o.label).special
    return dual(dual(o)) == o


def closure_leq(o1: NilpotentOrbit, o2: NilpotentOrbit) -> bool:
    """True iff ``o1`` lies in the closure of ``o2``."""
    if o1.lie_type != o2.lie_type:
        raise NilpiecesError(f"cannot compare orbits of {o1.lie_type} and {o2.lie_type}")
    if o1 == o2:
        return True
    lt = o1.lie_type
    if lt.is_exceptional:
        return _exceptional_closure(o1, o2)
    if o1.jordan == o2.jordan:
        return False  # the two tags of a very even partition
    return dominance_leq(o1.jordan, o2.jordan)


def _exceptional_closure(o1, o2):
    r1 = exceptional_data.lookup(o1.lie_type, o1.label)
    r2 = exceptional_data.lookup(o2.lie_type, o2.label)
    if o1.label == "0" or o2.label == o2.lie_type.family:
        return True
    if o2.label == "0" or o1.label == o1.lie_type.family:
        return False
    if r2.special and r1.special_piece_rep == r2.label:
        return True
    raise exceptional_data.DataNotShipped(
        f"closure relation between {o1} and {o2} is not in the shipped data")


def special_rep(o: NilpotentOrbit) -> NilpotentOrbit:
    """The smallest special orbit whose closure contains ``o``."""
    lt = o.lie_type
    if lt.is_exceptional:
        rep = exceptional_data.lookup(lt, o.label).special_piece_rep
        return NilpotentOrbit(lt, None, rep)
    above = [s for s in all_orbits(lt) if is_special(s) and closure_leq(o, s)]
    minimal = [s for s in above if not any(t != s and closure_leq(t, s) for t in above)]
    if len(minimal) != 1:
        raise NilpiecesError(
            f"no unique minimal special orbit above {o}: {[str(m) for m in minimal]}")
    return minimal[0]


def special_piece(o: NilpotentOrbit) -> list[NilpotentOrbit]:
    """Orbits whose minimal special cover is ``o``; ``o`` first, then by
    decreasing dominance (ties in reverse lexicographic order)."""
    if not is_special(o):
        raise NilpiecesError(f"{o} is not special")
    lt = o.lie_type
    if lt.is_exceptional:
        return [NilpotentOrbit(lt, None, r.label)
                for r in exceptional_data.special_piece_members(lt, o.label)]
    return [x for x in all_orbits(lt) if special_rep(x) == o]


def satisfies_hypotheses(o: NilpotentOrbit) -> str | None:
    """None if ``o`` is special and even with even dual, else the failing condition."""
    if not is_special(o):
        return f"{o} is not special"
    if not is_even(o):
        return f"{o} is not even"
    d = dual(o)
    if not is_even(d):
        return f"the dual {d} of {o} is not even"
    return None


def render_diagram(o: NilpotentOrbit) -> str:
    return str(weighted_dynkin(o))

"""Springer correspondence for trivial local systems and parabolic
sign multiplicities.

Normalization: the zero orbit goes to the sign character and the regular
orbit to the trivial one.  Classical types use Shoji's symbol algorithm.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..errors import HypothesisError, NilpiecesError
from ..lietype import LieType
from ..orbits import NilpotentOrbit, satisfies_hypotheses, special_piece
from ..partitions import make_partition
from .characters import WeylIrrep, character_value, make_irrep
from .group import conjugacy_class_of, parabolic_subgroup, sign


def _symbol_rows(parts, need_odd_count):
    p = sorted(parts)
    if (len(p) % 2 == 1) != need_odd_count:
        p = [0] + p
    shifted = [x + i for i, x in enumerate(p)]
    odds = [(x - 1) // 2 for x in shifted if x % 2]
    evens = [x // 2 for x in shifted if x % 2 == 0]

    def row(vals):
        return make_partition(v - i for i, v in enumerate(sorted(vals)))
    return row(odds), row(evens), len(odds), len(evens)


def springer_trivial(o: NilpotentOrbit) -> WeylIrrep:
    lt = o.lie_type
    if lt.is_exceptional:
        raise NilpiecesError("Springer correspondence is only computed for classical types")
    if lt.family == "A":
        return make_irrep(lt, o.jordan)
    if lt.family == "B":
        odd_row, even_row, n_odd, n_even = _symbol_rows(o.jordan, True)
        assert n_odd == n_even + 1
        return make_irrep(lt, odd_row, even_row)
    if lt.family == "C":
        odd_row, even_row, n_odd, n_even = _symbol_rows(o.jordan, True)
        assert n_even == n_odd + 1
        return make_irrep(lt, even_row, odd_row)
    odd_row, even_row, n_odd, n_even = _symbol_rows(o.jordan, False)
    assert n_odd == n_even
    split = None
    if odd_row == even_row:
        # pairing of orbit tags with split characters flips with rank mod 4;
        # pinned by the unit sign multiplicity on the zero-label parabolic
        first = "+" if lt.rank % 4 == 0 else "-"
        split = first if o.tag == "I" else {"+": "-", "-": "+"}[first]
    return make_irrep(lt, odd_row, even_row, split)


@lru_cache(maxsize=None)
def _signed_class_counts(lt: LieType, roots: tuple):
    counts = Counter()
    group = parabolic_subgroup(lt, roots)
    for w in group:
        counts[(conjugacy_class_of(lt, w), sign(w))] += 1
    return counts, len(group)


def sgn_multiplicity(lt: LieType, irrep: WeylIrrep, levi) -> int:
    """dim Hom_{W(l)}(sgn, irrep), by summing over W(l)."""
    roots = tuple(sorted(set(getattr(levi, "simple_roots", levi))))
    counts, size = _signed_class_counts(lt, roots)
    total = sum(k * s * character_value(lt, irrep, c) for (c, s), k in counts.items())
    mult = Fraction(total, size)
    if mult.denominator != 1 or mult < 0:
        raise NilpiecesError(f"multiplicity {mult} is not a non-negative integer")
    return int(mult)


@dataclass(frozen=True)
class CellSummand:
    """One summand of V(O): an orbit of the special piece and its Springer
    irrep (None for exceptional types, where characters are not shipped)."""

    orbit: NilpotentOrbit
    irrep: WeylIrrep | None

    def __str__(self):
        return f"{self.orbit.name} -> {self.irrep if self.irrep else 'Sp(' + self.orbit.name + ')'}"


def cell_module(o_dual: NilpotentOrbit) -> list[CellSummand]:
    """V(O) as the sum of Springer irreps over the special piece of ``o_dual``.

    This is a definition by decomposition; left cells are not computed.
    """
    problem = satisfies_hypotheses(o_dual)
    if problem:
        raise HypothesisError(f"theorem hypotheses not satisfied: {problem}")
    out = []
    for member in special_piece(o_dual):
        irrep = springer_trivial(member) if member.lie_type.is_classical else None
        out.append(CellSummand(member, irrep))
    return out

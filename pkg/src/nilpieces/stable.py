"""Arthur-packet counts and stable dimensions over special pieces.

The stable dimension of the special unipotent space attached to an even
special orbit (with even dual) is the number of K-orbits on the special
piece intersected with s, summed over the symmetric pairs of the inner
class.  Each such K-orbit indexes one basis element; the report lists
them.  An independent count runs through Weyl group characters instead.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import HypothesisError, NilpiecesError
from .orbits import (
    NilpotentOrbit,
    is_even,
    satisfies_hypotheses,
    special_piece,
    zero_levi,
)
from .tableaux import InnerClassDescriptor, count, enumerate_tableaux
from .weyl import sgn_multiplicity, springer_trivial


@dataclass(frozen=True)
class BasisRow:
    member: NilpotentOrbit
    pair: str
    representative: str  # signed tableau, or "#k" for table-backed counts

    def tsv(self) -> str:
        return f"{self.member}\t{self.pair}\t{self.representative}"


@dataclass
class StableBasisReport:
    orbit: NilpotentOrbit
    inner_class: InnerClassDescriptor
    rows: list = field(default_factory=list)

    @property
    def stable_dim(self) -> int:
        return len(self.rows)

    @property
    def arthur_count(self) -> int:
        return sum(1 for r in self.rows if r.member == self.orbit)

    def per_orbit_counts(self) -> dict:
        out = {}
        for r in self.rows:
            out[r.member] = out.get(r.member, 0) + 1
        return out

    def to_tsv(self) -> str:
        lines = [r.tsv() for r in self.rows]
        lines.append(f"# arthur_count\t{self.arthur_count}")
        lines.append(f"# stable_dim\t{self.stable_dim}")
        return "\n".join(lines) + "\n"

    def to_table(self) -> str:
        head = f"{self.orbit} in {self.inner_class.name}"
        width = max([len(r.member.name) for r in self.rows] + [6])
        pw = max([len(r.pair) for r in self.rows] + [4])
        lines = [head, f"{'orbit':<{width}}  {'pair':<{pw}}  K-orbit"]
        lines += [f"{r.member.name:<{width}}  {r.pair:<{pw}}  {r.representative}" for r in self.rows]
        counts = " + ".join(str(c) for c in self.per_orbit_counts().values()) or "0"
        lines.append(f"arthur count: {self.arthur_count}")
        lines.append(f"stable dimension: {counts} = {self.stable_dim}")
        return "\n".join(lines) + "\n"


def _require_dual_orbit(ic: InnerClassDescriptor, o: NilpotentOrbit):
    if o.lie_type != ic.dual:
        raise NilpiecesError(f"{o} is not an orbit of the dual group {ic.dual} of {ic.name}")


def _require_hypotheses(o: NilpotentOrbit):
    problem = satisfies_hypotheses(o)
    if problem:
        raise HypothesisError(f"theorem hypotheses not satisfied: {problem}")


def _orbit_rows(ic: InnerClassDescriptor, member: NilpotentOrbit) -> list[BasisRow]:
    rows = []
    for pair in ic.pairs:
        if pair.kind == "exceptional":
            rows += [BasisRow(member, pair.name, f"#{k}") for k in range(1, count(pair, member) + 1)]
        else:
            rows += [BasisRow(member, pair.name, str(t)) for t in enumerate_tableaux(pair, member)]
    return rows


def arthur_count(ic: InnerClassDescriptor, o: NilpotentOrbit) -> int:
    """Sum over pairs of the K-orbits on O ∩ s."""
    _require_dual_orbit(ic, o)
    if not is_even(o):
        raise HypothesisError(f"theorem hypotheses not satisfied: {o} is not even")
    return sum(count(pair, o) for pair in ic.pairs)


def stable_dimension(ic: InnerClassDescriptor, o: NilpotentOrbit) -> StableBasisReport:
    _require_dual_orbit(ic, o)
    _require_hypotheses(o)
    report = StableBasisReport(o, ic)
    for member in special_piece(o):
        report.rows += _orbit_rows(ic, member)
    return report


def springer_side_dimension(ic: InnerClassDescriptor, o: NilpotentOrbit) -> int:
    """Sum of K-orbit counts weighted by the sign multiplicity of the
    member's Springer irrep on the zero-label parabolic subgroup."""
    _require_dual_orbit(ic, o)
    if o.lie_type.is_exceptional:
        raise NilpiecesError("the Springer-side count needs a classical inner class")
    _require_hypotheses(o)
    levi = zero_levi(o)
    total = 0
    for member in special_piece(o):
        mult = sgn_multiplicity(o.lie_type, springer_trivial(member), levi)
        total += mult * sum(count(pair, member) for pair in ic.pairs)
    return total


def admissible_orbits(ic: InnerClassDescriptor) -> list[NilpotentOrbit]:
    """Orbits of the dual group satisfying the theorem hypotheses."""
    from .orbits import all_orbits
    out = []
    for o in all_orbits(ic.dual):
        try:
            if satisfies_hypotheses(o) is None:
                out.append(o)
        except NilpiecesError:
            continue  # exceptional duality not shipped
    return out

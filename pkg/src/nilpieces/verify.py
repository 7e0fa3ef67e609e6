"""Self-check suites behind ``nilpieces verify``.

Each check returns a ``Check``; a suite is a list of checks.  The worked
examples (sp4, f4, e8) are fast; ``properties`` runs the exhaustive sweeps.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from .errors import NilpiecesError
from .lietype import LieType
from .oracle import TrialPolicy, verify_section
from .orbits import (
    all_orbits,
    closure_leq,
    dual,
    is_special,
    orbit,
    satisfies_hypotheses,
    special_piece,
    special_rep,
    weighted_dynkin,
    zero_levi,
)
from .partitions import (
    ParityFamily,
    all_partitions,
    collapse,
    dominance_leq,
    enumerate_partitions,
)
from .stable import admissible_orbits, springer_side_dimension, stable_dimension
from .tableaux import (
    SignedTableau,
    enumerate_tableaux,
    get_preset,
    orthogonal_split,
    sp2n_split,
    symplectic_linear,
    symplectic_quaternionic,
)
from .weyl import (
    character_value,
    class_sizes,
    degree,
    irreps,
    sgn_multiplicity,
    springer_trivial,
)
from .weyl.group import order


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status}  {self.name}  ({self.seconds:.2f}s) {self.detail}".rstrip()


def _timed(name, fn) -> Check:
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except NilpiecesError as exc:
        ok, detail = False, f"error: {exc}"
    return Check(name, ok, detail, time.perf_counter() - start)


def _classical_types(max_rank, families="ABCD"):
    out = []
    for fam in families:
        low = {"A": 1, "B": 1, "C": 1, "D": 2}[fam]
        out += [LieType(fam, r) for r in range(low, max_rank + 1)]
    return out


# --- worked examples ------------------------------------------------------

SP4_ROWS = [
    ("3,1,1", "so(4,1)", "+-+ / + / +"),
    ("3,1,1", "so(3,2)", "+-+ / + / -"),
    ("3,1,1", "so(3,2)", "-+- / + / +"),
    ("2,2,1", "so(3,2)", "+- / -+ / +"),
]

F4_PIECE = [("F4(a3)", "0200", 3), ("C3(a1)", "1010", 2), ("Ã2+A1", "0101", 1),
            ("B2", "2001", 2), ("A2+Ã1", "0010", 1)]

E8_COUNTS = [3, 2, 2, 2, 1, 1, 1]


def check_sp4():
    def run():
        rep = stable_dimension(get_preset("sp4-split"), orbit("B2", "3,1,1"))
        rows = [(r.member.name, r.pair, r.representative) for r in rep.rows]
        d = str(dual(orbit("B2", "3,1,1")))
        ok = (rep.stable_dim == 4 and rep.arthur_count == 3
              and sorted(rows) == sorted(SP4_ROWS) and d == "C2:2,2")
        return ok, f"stable_dim={rep.stable_dim} arthur={rep.arthur_count} dual={d}"
    return [_timed("sp4 example: 3+1 = 4", run)]


def check_f4():
    def run():
        rep = stable_dimension(get_preset("f4-split"), orbit("F4", label="F4(a3)"))
        got = [(o.label, str(weighted_dynkin(o)), c) for o, c in rep.per_orbit_counts().items()]
        ok = got == F4_PIECE and rep.stable_dim == 9 and rep.arthur_count == 3
        return ok, " + ".join(str(c) for _, _, c in got) + f" = {rep.stable_dim}"
    return [_timed("f4 example: 3+2+1+2+1 = 9", run)]


def check_e8():
    def run():
        rep = stable_dimension(get_preset("e8-split"), orbit("E8", label="E8(a7)"))
        got = list(rep.per_orbit_counts().values())
        ok = got == E8_COUNTS and rep.stable_dim == 12 and rep.arthur_count == 3
        return ok, " + ".join(map(str, got)) + f" = {rep.stable_dim}"
    return [_timed("e8 example: 3+2+2+2+1+1+1 = 12", run)]


# --- exhaustive sweeps ------------------------------------------------------

def duality_sweep(max_rank=5):
    bad = []
    for lt in _classical_types(max_rank, "BCD"):
        orbs = all_orbits(lt)
        duals = {o: dual(o) for o in orbs}
        for o in orbs:
            if is_special(o) and dual(duals[o]) != o:
                bad.append(f"d(d({o})) != {o}")
        for a, b in itertools.product(orbs, repeat=2):
            if closure_leq(a, b) and not closure_leq(duals[b], duals[a]):
                bad.append(f"{a} <= {b} but not d({b}) <= d({a})")
    return not bad, "; ".join(bad[:3]) or f"B/C/D rank <= {max_rank}"


def sgn_multiplicity_sweep(max_rank=4):
    bad, seen = [], 0
    for lt in _classical_types(max_rank):
        for o in all_orbits(lt):
            if satisfies_hypotheses(o):
                continue
            levi = zero_levi(o)
            for member in special_piece(o):
                seen += 1
                m = sgn_multiplicity(lt, springer_trivial(member), levi)
                if m != 1:
                    bad.append(f"{member} in piece of {o}: multiplicity {m}")
    return not bad, "; ".join(bad[:3]) or f"{seen} piece members, all multiplicity 1"


def oracle_sweep(types=("B2", "C2", "B3", "C3", "A3"), policy=TrialPolicy()):
    bad, seen = [], 0
    for name in types:
        lt = LieType.parse(name)
        for o in all_orbits(lt):
            if satisfies_hypotheses(o):
                continue
            try:
                seen += len(verify_section(lt, o, policy))
            except NilpiecesError as exc:
                bad.append(str(exc))
    return not bad, "; ".join(bad[:2]) or f"{seen} witnesses in {', '.join(types)}"


def two_sided_sweep(max_rank=3):
    bad, seen = [], 0
    for n in range(1, max_rank + 1):
        ic = sp2n_split(n)
        for o in admissible_orbits(ic):
            seen += 1
            a, b = stable_dimension(ic, o).stable_dim, springer_side_dimension(ic, o)
            if a != b:
                bad.append(f"{o}: tableaux {a} != springer {b}")
    return not bad, "; ".join(bad[:3]) or f"{seen} orbits agree"


def _collapse_by_search(p, family):
    below = [q for q in enumerate_partitions(sum(p), family) if dominance_leq(q, p)]
    top = [q for q in below if all(dominance_leq(r, q) for r in below)]
    return top[0] if len(top) == 1 else None


def collapse_sweep(max_size=12):
    bad, seen = [], 0
    for n in range(1, max_size + 1):
        for fam in ParityFamily:
            if fam == ParityFamily.A:
                continue
            if (fam == ParityFamily.B) != (n % 2 == 1):
                continue
            for p in all_partitions(n):
                seen += 1
                if collapse(p, fam) != _collapse_by_search(p, fam):
                    bad.append(f"{fam.value}-collapse of {p}")
    return not bad, "; ".join(bad[:3]) or f"{seen} partitions"


def character_sweep(max_rank=5):
    bad = []
    for lt in _classical_types(max_rank):
        sizes = class_sizes(lt)
        tables = {irr: {c: character_value(lt, irr, c) for c in sizes} for irr in irreps(lt)}
        if len(tables) != len(sizes):
            bad.append(f"{lt}: {len(tables)} irreps for {len(sizes)} classes")
        if sum(degree(lt, irr) ** 2 for irr in tables) != order(lt):
            bad.append(f"{lt}: sum of squared degrees != |W|")
        items = list(tables.items())
        for i, (a, ca) in enumerate(items):
            for b, cb in items[i:]:
                ip = sum(sizes[c] * ca[c] * cb[c] for c in sizes)
                if ip != (order(lt) if a == b else 0):
                    bad.append(f"{lt}: <{a}, {b}> wrong")
    return not bad, "; ".join(bad[:3]) or f"A/B/C/D rank <= {max_rank}"


def special_piece_sweep(max_rank=5):
    bad = []
    for lt in _classical_types(max_rank, "BCD"):
        orbs = all_orbits(lt)
        covered = []
        for o in orbs:
            if is_special(o):
                piece = special_piece(o)
                if piece[0] != o:
                    bad.append(f"{o} does not head its piece")
                covered += piece
        if sorted(covered) != sorted(orbs):
            bad.append(f"{lt}: pieces do not partition the orbits")
        for o in orbs:
            if not closure_leq(o, special_rep(o)):
                bad.append(f"{o} not below its special representative")
    return not bad, "; ".join(bad[:3]) or f"B/C/D rank <= {max_rank}"


def _tableau_pairs(max_size):
    for total in range(3, max_size + 1):
        for q in range(total // 2 + 1):
            yield orthogonal_split(total - q, q, allow_d=total % 2 == 0)
    for n in range(1, max_size // 2 + 1):
        yield symplectic_linear(n)
        for q in range(n // 2 + 1):
            yield symplectic_quaternionic(n - q, q)


def _allowed(pair, t: SignedTableau) -> bool:
    from collections import Counter
    plus, minus = Counter(), Counter()
    for length, s in t.rows:
        (plus if s > 0 else minus)[length] += 1
    for length in set(plus) | set(minus):
        a, b = plus[length], minus[length]
        if pair.kind == "orthogonal_split" and length % 2 == 0 and a != b:
            return False
        if pair.kind == "symplectic_linear" and length % 2 == 1 and a != b:
            return False
        if pair.kind == "symplectic_quaternionic":
            if length % 2 == 0 and a != b:
                return False
            if length % 2 == 1 and (a % 2 or b % 2):
                return False
    return True


def tableau_sweep(max_size=9):
    """Enumerator against direct generation over every sign choice."""
    bad, seen = [], 0
    for pair in _tableau_pairs(max_size):
        for o in all_orbits(pair.ambient):
            if o.tag == "II":
                continue
            got = list(enumerate_tableaux(pair, o))
            seen += len(got)
            for t in got:
                if t.shape != o.jordan or t.signature != pair.signature:
                    bad.append(f"{pair} {o}: bad tableau {t}")
                if SignedTableau(t.rows).rows != t.rows:
                    bad.append(f"{pair} {o}: {t} not canonical")
            if len(set(got)) != len(got):
                bad.append(f"{pair} {o}: duplicates")
            direct = set()
            for signs in itertools.product((1, -1), repeat=len(o.jordan)):
                t = SignedTableau(tuple(zip(o.jordan, signs)))
                if t.signature == pair.signature and _allowed(pair, t):
                    direct.add(t)
            if direct != set(got):
                bad.append(f"{pair} {o}: {len(got)} enumerated, {len(direct)} direct")
    return not bad, "; ".join(bad[:3]) or f"{seen} tableaux, ambient size <= {max_size}"


def check_properties():
    return [
        _timed("duality: d(d(O)) = O on special orbits, d order-reversing", duality_sweep),
        _timed("sgn multiplicity 1 on special pieces", sgn_multiplicity_sweep),
        _timed("canonical section oracle", oracle_sweep),
        _timed("tableaux side = Springer side", two_sided_sweep),
        _timed("collapse = dominance search", collapse_sweep),
        _timed("character orthogonality", character_sweep),
        _timed("special pieces partition the orbits", special_piece_sweep),
        _timed("tableau invariants", tableau_sweep),
    ]


SUITES = {"sp4": check_sp4, "f4": check_f4, "e8": check_e8, "properties": check_properties}


def run_suite(name: str) -> list[Check]:
    try:
        return SUITES[name]()
    except KeyError:
        raise NilpiecesError(f"unknown suite {name!r}; known: {', '.join(SUITES)}") from None

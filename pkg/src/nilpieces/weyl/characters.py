"""Irreducible characters of classical Weyl groups.

Type A uses the Murnaghan-Nakayama rule.  Types B and C share the
hyperoctahedral group; ``(alpha, beta)`` is the character induced from
``W(B_k) x W(B_{n-k})`` by ``chi_alpha`` (trivial on sign changes) times
``chi_beta`` twisted by the sign-change character.  So ``((n), ())`` is
trivial and ``((), (1^n))`` is the sign.  Type D restricts from type B, with
the split pair ``(alpha, alpha)^{+/-}`` handled separately.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..errors import NilpiecesError
from ..lietype import LieType
from ..partitions import all_partitions, format_partition, make_partition
from .group import ClassLabel, class_sizes, order


@dataclass(frozen=True, order=True)
class WeylIrrep:
    """Irreducible character label.

    Type A: ``alpha`` is a partition of n+1 and ``beta`` is None.
    Types B/C: ordered bipartition.  Type D: unordered bipartition stored
    with ``alpha >= beta``; ``split`` is ``"+"``/``"-"`` exactly when equal.
    """

    family: str
    alpha: tuple
    beta: tuple | None = None
    split: str | None = None

    def __str__(self):
        if self.family == "A":
            return "[" + format_partition(self.alpha) + "]"

        def fmt(p):
            return ",".join(map(str, p)) if p else "-"
        return f"[{fmt(self.alpha)} | {fmt(self.beta)}]" + (self.split or "")


def make_irrep(lt: LieType, alpha, beta=None, split=None) -> WeylIrrep:
    alpha = make_partition(alpha)
    n = lt.rank
    if lt.family == "A":
        if sum(alpha) != n + 1 or beta is not None:
            raise NilpiecesError(f"type {lt} irreps are partitions of {n + 1}")
        return WeylIrrep("A", alpha)
    beta = make_partition(beta or ())
    if sum(alpha) + sum(beta) != n:
        raise NilpiecesError(f"bipartition sizes must sum to {n}")
    if lt.family == "D":
        if alpha < beta:
            alpha, beta = beta, alpha
        if (alpha == beta) != (split in ("+", "-")):
            raise NilpiecesError("type D split tag is required exactly when alpha = beta")
        return WeylIrrep("D", alpha, beta, split)
    if split is not None:
        raise NilpiecesError("split tags only exist in type D")
    return WeylIrrep(lt.family, alpha, beta)


def trivial(lt: LieType) -> WeylIrrep:
    if lt.family == "A":
        return make_irrep(lt, (lt.rank + 1,))
    return make_irrep(lt, (lt.rank,), ())


def sign_irrep(lt: LieType) -> WeylIrrep:
    if lt.family == "A":
        return make_irrep(lt, (1,) * (lt.rank + 1))
    return make_irrep(lt, (), (1,) * lt.rank)


def irreps(lt: LieType) -> list[WeylIrrep]:
    n = lt.rank
    if lt.family == "A":
        return [make_irrep(lt, p) for p in all_partitions(n + 1)]
    out = []
    for k in range(n, -1, -1):
        for a in all_partitions(k):
            for b in all_partitions(n - k):
                if lt.family != "D":
                    out.append(make_irrep(lt, a, b))
                elif a > b:
                    out.append(make_irrep(lt, a, b))
                elif a == b:
                    out += [make_irrep(lt, a, b, "+"), make_irrep(lt, a, b, "-")]
    return out


# --- Murnaghan-Nakayama ----------------------------------------------------

def _remove_rim_hooks(p: tuple, r: int):
    """Yield (partition minus an r-rim hook, leg length) via beta numbers."""
    k = len(p)
    beta = [p[i] + (k - 1 - i) for i in range(k)]
    bset = set(beta)
    for b in beta:
        c = b - r
        if c < 0 or c in bset:
            continue
        leg = sum(1 for x in beta if c < x < b)
        new = sorted((c if x == b else x for x in beta), reverse=True)
        yield make_partition(new[i] - (k - 1 - i) for i in range(k)), leg


@lru_cache(maxsize=None)
def sym_character(shape: tuple, cycle_type: tuple) -> int:
    """Character of S_n for ``shape`` on permutations of ``cycle_type``."""
    if not cycle_type:
        return 1 if not shape else 0
    r, rest = cycle_type[0], cycle_type[1:]
    return sum((-1) ** leg * sym_character(q, rest) for q, leg in _remove_rim_hooks(shape, r))


@lru_cache(maxsize=None)
def hyperoctahedral_character(alpha: tuple, beta: tuple, positive: tuple, negative: tuple) -> int:
    if positive:
        r, positive, neg_cycle = positive[0], positive[1:], False
    elif negative:
        r, negative, neg_cycle = negative[0], negative[1:], True
    else:
        return 1 if not alpha and not beta else 0
    total = 0
    for q, leg in _remove_rim_hooks(alpha, r):
        total += (-1) ** leg * hyperoctahedral_character(q, beta, positive, negative)
    twist = -1 if neg_cycle else 1
    for q, leg in _remove_rim_hooks(beta, r):
        total += twist * (-1) ** leg * hyperoctahedral_character(alpha, q, positive, negative)
    return total


def character_value(lt: LieType, irrep: WeylIrrep, cls: ClassLabel) -> int:
    if irrep.family != ("C" if lt.family == "C" else lt.family):
        raise NilpiecesError(f"{irrep} is not an irrep of W({lt})")
    if lt.family == "A":
        return sym_character(irrep.alpha, cls.positive)
    value = hyperoctahedral_character(irrep.alpha, irrep.beta, cls.positive, cls.negative)
    if lt.family != "D" or irrep.split is None:
        return value
    # split pair: half the induced value, corrected on the split classes
    half = Fraction(value, 2)
    if cls.split is not None:
        nu = tuple(p // 2 for p in cls.positive)
        corr = Fraction(2 ** len(nu), 2) * sym_character(irrep.alpha, nu)
        sgn = (1 if irrep.split == "+" else -1) * (1 if cls.split == "+" else -1)
        half += sgn * corr
    if half.denominator != 1:
        raise NilpiecesError(f"non-integral value for {irrep} on {cls}")
    return int(half)


def degree(lt: LieType, irrep: WeylIrrep) -> int:
    n = lt.rank
    ident = ClassLabel((1,) * (n + 1)) if lt.family == "A" else ClassLabel((1,) * n, ())
    return character_value(lt, irrep, ident)


def inner_product(lt: LieType, chi, psi) -> Fraction:
    """<chi, psi> for class functions given as callables on class labels."""
    total = sum(size * chi(c) * psi(c) for c, size in class_sizes(lt).items())
    return Fraction(total, order(lt))


def class_function(lt: LieType, irrep: WeylIrrep) -> dict:
    """The character as a map class label -> value."""
    return {c: character_value(lt, irrep, c) for c in class_sizes(lt)}

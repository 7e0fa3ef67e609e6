"""Brute-force check of the canonical section w(O') in small classical types.

For a Weyl element w, a generic element of n ∩ n^w is a random integer
combination of the root vectors of the positive roots β with w⁻¹β > 0;
its Jordan type in the defining representation names the dense orbit
O(w).  Ranks are computed exactly by fraction-free elimination.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .errors import GenericityError, HypothesisError, NilpiecesError
from .lietype import LieType
from .orbits import NilpotentOrbit, satisfies_hypotheses, special_piece, zero_levi
from .partitions import is_very_even, make_partition, transpose
from .weyl import WeylElement, longest_element, max_double_coset_reps
from .weyl.group import is_positive, positive_roots

MAX_ORACLE_RANK = 4


@dataclass(frozen=True)
class TrialPolicy:
    seed: int = 0
    trials: int = 5
    bound: int = 100

    def __post_init__(self):
        if self.trials < 3:
            raise NilpiecesError("at least 3 trials are required")
        if self.bound < 1:
            raise NilpiecesError("coefficient bound must be positive")


def integer_rank(rows) -> int:
    """Rank of an integer matrix by Bareiss elimination (no fractions)."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank, prev = 0, 1
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, n_rows):
            for c in range(col + 1, n_cols):
                m[r][c] = (p * m[r][c] - m[r][col] * m[rank][c]) // prev
            m[r][col] = 0
        prev = p
        rank += 1
        if rank == n_rows:
            break
    return rank


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def _unit(size, i, j, v=1):
    m = [[0] * size for _ in range(size)]
    m[i][j] = v
    return m


def _add(*mats):
    size = len(mats[0])
    return [[sum(m[i][j] for m in mats) for j in range(size)] for i in range(size)]


@dataclass(frozen=True)
class MatrixRealization:
    """Classical Lie algebra in its defining representation.

    ``root_vectors`` maps a root (coordinate tuple) to an integer matrix
    spanning its root space; ``cartan`` holds diagonal matrices, one per
    standard coordinate (type A: E_ii - E_{i+1,i+1}).  ``form`` is the
    invariant bilinear form (None for type A).
    """

    lie_type: LieType
    size: int
    root_vectors: dict
    cartan: tuple
    form: tuple | None

    @property
    def dimension(self) -> int:
        return len(self.root_vectors) + len(self.cartan)

    def weight_of_diagonal(self, k: int) -> tuple:
        """Standard coordinates of the weight of basis vector ``k``."""
        lt = self.lie_type
        n = lt.rank
        if lt.family == "A":
            return tuple(1 if i == k else 0 for i in range(n + 1))
        if k < n:
            return tuple(1 if i == k else 0 for i in range(n))
        if k < 2 * n:
            return tuple(-1 if i == k - n else 0 for i in range(n))
        return (0,) * n

    def check(self) -> list[str]:
        """Consistency checks; returns a list of failures (empty if sound)."""
        bad = []
        lt = self.lie_type
        expected = {"A": lt.rank * (lt.rank + 2), "B": lt.rank * (2 * lt.rank + 1),
                    "C": lt.rank * (2 * lt.rank + 1), "D": lt.rank * (2 * lt.rank - 1)}[lt.family]
        if self.dimension != expected:
            bad.append(f"dimension {self.dimension} != {expected}")
        diag_weights = [self.weight_of_diagonal(k) for k in range(self.size)]
        for alpha, m in self.root_vectors.items():
            for i in range(self.size):
                for j in range(self.size):
                    if m[i][j]:
                        w = tuple(a - b for a, b in zip(diag_weights[i], diag_weights[j]))
                        if w != alpha:
                            bad.append(f"entry ({i},{j}) of root vector {alpha} has weight {w}")
            if self.form is not None:
                j = [list(r) for r in self.form]
                lhs = matmul([list(r) for r in zip(*m)], j)
                rhs = matmul(j, m)
                if any(lhs[a][b] + rhs[a][b] for a in range(self.size) for b in range(self.size)):
                    bad.append(f"root vector {alpha} does not preserve the form")
        for alpha, a in self.root_vectors.items():
            for beta, b in self.root_vectors.items():
                br = _bracket(a, b)
                if not any(any(r) for r in br):
                    continue
                target = tuple(x + y for x, y in zip(alpha, beta))
                if target in self.root_vectors:
                    if not _proportional(br, self.root_vectors[target]):
                        bad.append(f"[g_{alpha}, g_{beta}] not in g_{target}")
                elif any(target):
                    bad.append(f"[g_{alpha}, g_{beta}] nonzero but {target} is not a root")
                elif any(br[i][j] for i in range(self.size) for j in range(self.size) if i != j):
                    bad.append(f"[g_{alpha}, g_{beta}] is not diagonal")
        return bad


def _bracket(a, b):
    ab, ba = matmul(a, b), matmul(b, a)
    return [[x - y for x, y in zip(r, s)] for r, s in zip(ab, ba)]


def _proportional(x, y) -> bool:
    flat_x = [v for r in x for v in r]
    flat_y = [v for r in y for v in r]
    k = next(i for i, v in enumerate(flat_y) if v)
    return all(a * flat_y[k] == b * flat_x[k] for a, b in zip(flat_x, flat_y))


@lru_cache(maxsize=None)
def realization(lt: LieType) -> MatrixRealization:
    if lt.is_exceptional:
        raise NilpiecesError(f"no matrix realization for {lt}")
    n, fam = lt.rank, lt.family
    N = lt.ambient_size
    roots = {}

    def vec(*pairs):
        v = [0] * (n + 1 if fam == "A" else n)
        for i, c in pairs:
            v[i] += c
        return tuple(v)

    if fam == "A":
        for i in range(N):
            for j in range(N):
                if i != j:
                    roots[vec((i, 1), (j, -1))] = _unit(N, i, j)
        cartan = tuple(_add(_unit(N, i, i), _unit(N, i + 1, i + 1, -1)) for i in range(n))
        return MatrixRealization(lt, N, roots, cartan, None)

    sym = -1 if fam == "C" else 1  # C: skew form; B/D: symmetric
    for i in range(n):
        for j in range(n):
            if i != j:
                roots[vec((i, 1), (j, -1))] = _add(_unit(N, i, j), _unit(N, n + j, n + i, -1))
            if i < j:
                roots[vec((i, 1), (j, 1))] = _add(_unit(N, i, n + j), _unit(N, j, n + i, -1 if sym == 1 else 1))
                roots[vec((i, -1), (j, -1))] = _add(_unit(N, n + j, i), _unit(N, n + i, j, -1 if sym == 1 else 1))
        if fam == "C":
            roots[vec((i, 2))] = _unit(N, i, n + i)
            roots[vec((i, -2))] = _unit(N, n + i, i)
        if fam == "B":
            roots[vec((i, 1))] = _add(_unit(N, i, 2 * n), _unit(N, 2 * n, n + i, -1))
            roots[vec((i, -1))] = _add(_unit(N, 2 * n, i), _unit(N, n + i, 2 * n, -1))
    cartan = tuple(_add(_unit(N, i, i), _unit(N, n + i, n + i, -1)) for i in range(n))
    form = [[0] * N for _ in range(N)]
    for i in range(n):
        form[i][n + i] = 1
        form[n + i][i] = sym
    if fam == "B":
        form[2 * n][2 * n] = 1
    return MatrixRealization(lt, N, roots, cartan, tuple(map(tuple, form)))


def jordan_type(x) -> tuple:
    """Jordan partition of a nilpotent integer matrix from ranks of powers."""
    size = len(x)
    ranks = [size]
    power = x
    while ranks[-1]:
        r = integer_rank(power)
        if r == ranks[-1]:
            raise NilpiecesError("matrix is not nilpotent")
        ranks.append(r)
        power = matmul(power, x)
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    return transpose(make_partition(at_least))


def n_cap_nw_roots(lt: LieType, w: WeylElement) -> list[tuple]:
    """Positive roots β with w⁻¹β positive."""
    winv = w.inverse()
    return [b for b in _root_list(lt) if is_positive(winv.act(b))]


def _root_list(lt):
    return list(positive_roots(lt))


def generic_element(lt: LieType, w: WeylElement, rng: random.Random, bound: int):
    real = realization(lt)
    size = real.size
    x = [[0] * size for _ in range(size)]
    for beta in n_cap_nw_roots(lt, w):
        c = 0
        while c == 0:
            c = rng.randint(-bound, bound)
        m = real.root_vectors[beta]
        for i in range(size):
            for j in range(size):
                if m[i][j]:
                    x[i][j] += c * m[i][j]
    return x


def jordan_type_of_w(lt: LieType, w: WeylElement, policy: TrialPolicy = TrialPolicy()) -> tuple:
    if lt.is_exceptional or lt.rank > MAX_ORACLE_RANK:
        raise NilpiecesError(f"oracle supports classical types of rank <= {MAX_ORACLE_RANK}, not {lt}")
    results = set()
    for t in range(policy.trials):
        rng = random.Random(f"{policy.seed}:{t}:{w.images}")
        results.add(jordan_type(generic_element(lt, w, rng, policy.bound)))
    if len(results) != 1:
        raise GenericityError(
            f"trials disagree for w = {w}: {sorted(results)}; "
            "raise the coefficient bound or change the seed")
    return results.pop()


def orbit_of_w(lt: LieType, w: WeylElement, policy: TrialPolicy = TrialPolicy()) -> NilpotentOrbit:
    """The dense orbit in G·(n ∩ n^w)."""
    p = jordan_type_of_w(lt, w, policy)
    if lt.family == "D" and is_very_even(p):
        raise NilpiecesError(
            f"very even Jordan type {p} for w = {w}: the I/II tag is not determined here; "
            "use jordan_type_of_w")
    return NilpotentOrbit(lt, p)


def verify_section(lt: LieType, o: NilpotentOrbit, policy: TrialPolicy = TrialPolicy()) -> dict:
    """Map each O' in the special piece of ``o`` to its unique witness in W^l.

    Raises with the full list of (w, O(w)) pairs if a witness is missing or
    not unique, or if ``o`` itself is not witnessed by the longest element of W(l).
    """
    if o.lie_type != lt:
        raise NilpiecesError(f"{o} is not an orbit of {lt}")
    problem = satisfies_hypotheses(o)
    if problem:
        raise HypothesisError(f"theorem hypotheses not satisfied: {problem}")
    levi = zero_levi(o)
    reps = max_double_coset_reps(lt, levi)
    found = [(w, jordan_type_of_w(lt, w, policy)) for w in reps]

    def diagnostic():
        return "; ".join(f"{w} -> {','.join(map(str, p)) or '0'}" for w, p in found)

    out = {}
    for member in special_piece(o):
        witnesses = [w for w, p in found if p == member.jordan]
        if len(witnesses) != 1:
            raise NilpiecesError(
                f"{member}: {len(witnesses)} witnesses in W^l (expected 1). Pairs: {diagnostic()}")
        out[member] = witnesses[0]
    if out[o] != longest_element(lt, levi):
        raise NilpiecesError(f"w({o}) = {out[o]} is not the longest element of W(l). Pairs: {diagnostic()}")
    return out

"""Classical Weyl groups as (signed) permutation groups.

An element is stored as the tuple of images of the standard basis vectors:
``images[i] = s * (j + 1)`` means ``e_{i+1} -> s * e_{j+1}``.  Type A_n acts
on n+1 coordinates by plain permutations.  Simple reflections follow
Bourbaki: ``s_i`` swaps coordinates i and i+1, and the last one is the sign
change of e_n (B, C) or ``e_{n-1} <-> -e_n`` (D).
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import lru_cache

from ..errors import NilpiecesError
from ..lietype import LieType
from ..partitions import make_partition

MAX_ENUMERATION_RANK = 6


@dataclass(frozen=True, order=True)
class WeylElement:
    images: tuple

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        out = []
        for x in other.images:
            y = self.images[abs(x) - 1]
            out.append(y if x > 0 else -y)
        return WeylElement(tuple(out))

    def inverse(self) -> "WeylElement":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[abs(x) - 1] = (i + 1) if x > 0 else -(i + 1)
        return WeylElement(tuple(inv))

    def act(self, v):
        """Apply to a coordinate vector."""
        out = [0] * len(v)
        for i, x in enumerate(self.images):
            out[abs(x) - 1] = v[i] if x > 0 else -v[i]
        return tuple(out)

    def __str__(self):
        return "[" + " ".join(str(x) for x in self.images) + "]"


def _dimension(lt: LieType) -> int:
    if lt.is_exceptional:
        raise NilpiecesError(f"no signed-permutation model for {lt}")
    return lt.rank + 1 if lt.family == "A" else lt.rank


def identity(lt: LieType) -> WeylElement:
    return WeylElement(tuple(range(1, _dimension(lt) + 1)))


def validate(lt: LieType, w: WeylElement) -> WeylElement:
    n = _dimension(lt)
    if len(w.images) != n or sorted(abs(x) for x in w.images) != list(range(1, n + 1)):
        raise NilpiecesError(f"{w} is not a signed permutation of {n} points")
    negatives = sum(1 for x in w.images if x < 0)
    if lt.family == "A" and negatives:
        raise NilpiecesError(f"{w} has sign changes, not in W({lt})")
    if lt.family == "D" and negatives % 2:
        raise NilpiecesError(f"{w} has an odd number of sign changes, not in W({lt})")
    return w


def simple_reflection(lt: LieType, i: int) -> WeylElement:
    n = _dimension(lt)
    if not 1 <= i <= lt.rank:
        raise NilpiecesError(f"no simple reflection {i} in {lt}")
    img = list(range(1, n + 1))
    if lt.family == "A" or i < lt.rank:
        img[i - 1], img[i] = img[i], img[i - 1]
    elif lt.family in ("B", "C"):
        img[n - 1] = -n
    else:
        img[n - 2], img[n - 1] = -n, -(n - 1)
    return WeylElement(tuple(img))


def parse_element(lt: LieType, text: str) -> WeylElement:
    """Parse one-line notation such as ``"-1 2"`` or ``"[2,-1]"``."""
    cleaned = text.strip().strip("[]").replace(",", " ")
    try:
        w = WeylElement(tuple(int(t) for t in cleaned.split()))
    except ValueError as exc:
        raise NilpiecesError(f"cannot parse Weyl element {text!r}") from exc
    return validate(lt, w)


@lru_cache(maxsize=None)
def positive_roots(lt: LieType) -> tuple:
    """Positive roots as integer coordinate vectors (type C uses 2e_i)."""
    n = _dimension(lt)

    def e(i):
        return [1 if k == i else 0 for k in range(n)]

    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            roots.append(tuple(a - b for a, b in zip(e(i), e(j))))
            if lt.family != "A":
                roots.append(tuple(a + b for a, b in zip(e(i), e(j))))
    if lt.family == "B":
        roots += [tuple(e(i)) for i in range(n)]
    elif lt.family == "C":
        roots += [tuple(2 * x for x in e(i)) for i in range(n)]
    return tuple(roots)


def is_positive(v) -> bool:
    for x in v:
        if x:
            return x > 0
    raise NilpiecesError("zero vector is not a root")


def length(lt: LieType, w: WeylElement) -> int:
    return sum(1 for a in positive_roots(lt) if not is_positive(w.act(a)))


def sign(w: WeylElement) -> int:
    """Determinant of the reflection representation, i.e. (-1)^length."""
    s = 1
    seen = set()
    for start in range(len(w.images)):
        if start in seen:
            continue
        k, cyc_len, flips = start, 0, 0
        while k not in seen:
            seen.add(k)
            x = w.images[k]
            flips += x < 0
            k = abs(x) - 1
            cyc_len += 1
        s *= (-1) ** (cyc_len - 1 + flips)
    return s


def _closure(gens, start):
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for s in gens:
            v = w * s
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


def _check_rank(lt: LieType):
    if lt.rank > MAX_ENUMERATION_RANK:
        raise NilpiecesError(
            f"{lt}: enumeration is limited to rank {MAX_ENUMERATION_RANK}")


@lru_cache(maxsize=None)
def elements(lt: LieType) -> tuple:
    """All elements of W, sorted by (length, images)."""
    _check_rank(lt)
    gens = [simple_reflection(lt, i) for i in range(1, lt.rank + 1)]
    ws = _closure(gens, identity(lt))
    return tuple(sorted(ws, key=lambda w: (length(lt, w), w.images)))


def order(lt: LieType) -> int:
    from math import factorial
    n = lt.rank
    return {"A": factorial(n + 1), "B": 2 ** n * factorial(n), "C": 2 ** n * factorial(n),
            "D": 2 ** (n - 1) * factorial(n)}[lt.family]


def _levi_roots(levi) -> tuple:
    roots = getattr(levi, "simple_roots", levi)
    return tuple(sorted(set(roots)))


@lru_cache(maxsize=None)
def _parabolic(lt: LieType, roots: tuple) -> tuple:
    gens = [simple_reflection(lt, i) for i in roots]
    return tuple(sorted(_closure(gens, identity(lt)), key=lambda w: (length(lt, w), w.images)))


def parabolic_subgroup(lt: LieType, levi) -> tuple:
    """Elements of the standard parabolic subgroup W(l)."""
    return _parabolic(lt, _levi_roots(levi))


def longest_element(lt: LieType, levi=None) -> WeylElement:
    roots = tuple(range(1, lt.rank + 1)) if levi is None else _levi_roots(levi)
    return parabolic_subgroup(lt, roots)[-1]


def max_double_coset_reps(lt: LieType, levi) -> list[WeylElement]:
    """Maximal-length representatives of W(l) \\ W / W(l), sorted by length."""
    _check_rank(lt)
    roots = _levi_roots(levi)
    gens = [simple_reflection(lt, i) for i in roots]
    seen = set()
    reps = []
    for w in reversed(elements(lt)):  # longest first
        if w in seen:
            continue
        coset = {w}
        queue = deque([w])
        while queue:
            v = queue.popleft()
            for s in gens:
                for u in (s * v, v * s):
                    if u not in coset:
                        coset.add(u)
                        queue.append(u)
        seen |= coset
        best = max(length(lt, u) for u in coset)
        top = [u for u in coset if length(lt, u) == best]
        assert len(top) == 1, "maximal double coset representative is not unique"
        reps.append(top[0])
    return sorted(reps, key=lambda w: (length(lt, w), w.images))


# --- conjugacy classes -----------------------------------------------------

@dataclass(frozen=True, order=True)
class ClassLabel:
    """Signed cycle type.  Type A uses ``positive`` only; type D adds a
    ``split`` sign for classes with only positive even cycles."""

    positive: tuple
    negative: tuple = ()
    split: str | None = None

    def __str__(self):
        def fmt(p):
            return ",".join(map(str, p)) if p else "-"
        s = f"({fmt(self.positive)} | {fmt(self.negative)})"
        return s + (self.split or "")


def signed_cycle_type(w: WeylElement):
    pos, neg = [], []
    seen = set()
    for start in range(len(w.images)):
        if start in seen:
            continue
        k, cyc_len, flips = start, 0, 0
        while k not in seen:
            seen.add(k)
            x = w.images[k]
            flips += x < 0
            k = abs(x) - 1
            cyc_len += 1
        (neg if flips % 2 else pos).append(cyc_len)
    return make_partition(pos), make_partition(neg)


def _d_split_sign(w: WeylElement) -> str:
    # sign vector d with d w d^-1 unsigned; its parity names the D-class
    n = len(w.images)
    delta = [0] * n
    for start in range(n):
        if delta[start]:
            continue
        delta[start] = 1
        k = start
        while True:
            x = w.images[k]
            nxt = abs(x) - 1
            if delta[nxt]:
                break
            delta[nxt] = delta[k] * (1 if x > 0 else -1)
            k = nxt
    return "+" if delta.count(-1) % 2 == 0 else "-"


def conjugacy_class_of(lt: LieType, w: WeylElement) -> ClassLabel:
    validate(lt, w)
    pos, neg = signed_cycle_type(w)
    if lt.family == "A":
        return ClassLabel(pos)
    if lt.family == "D" and not neg and all(p % 2 == 0 for p in pos):
        return ClassLabel(pos, neg, _d_split_sign(w))
    return ClassLabel(pos, neg)


@lru_cache(maxsize=None)
def class_sizes(lt: LieType) -> dict:
    """Conjugacy class label -> size, by enumerating W."""
    return dict(Counter(conjugacy_class_of(lt, w) for w in elements(lt)))

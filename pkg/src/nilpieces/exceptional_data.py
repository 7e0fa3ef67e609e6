"""Read-only F4 and E8 orbit tables.

The shipped file is line oriented: a ``# orbitdata v1`` header, a column
line, then one tab-separated record per orbit.  Set ``ORBITDATA_PATH`` to
load a different file with the same schema.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import DataNotShipped, NilpiecesError
from .lietype import LieType

HEADER = "# orbitdata v1"
COLUMNS = ("group", "label", "diagram", "special", "special_piece_rep", "counts")

# Sums the loader insists on; a corrupted table fails at load time.
EXPECTED_PIECE_TOTALS = {("F4", "F4(a3)", "f4-split"): 9, ("E8", "E8(a7)", "e8-split"): 12}

# Duality on shipped special orbits.  Only self-dual pieces and the
# zero/regular pair are recorded; everything else is refused.
_SPECIAL_DUALS = {
    "F4": {"F4(a3)": "F4(a3)", "0": "F4", "F4": "0"},
    "E8": {"E8(a7)": "E8(a7)", "0": "E8", "E8": "0"},
}


@dataclass(frozen=True)
class ExceptionalOrbitRecord:
    group: LieType
    label: str
    weighted_diagram: tuple
    special: bool
    special_piece_rep: str
    k_orbit_counts: dict = field(default_factory=dict, compare=False, hash=False)

    def count(self, preset: str) -> int:
        try:
            return self.k_orbit_counts[preset]
        except KeyError:
            raise DataNotShipped(
                f"no K-orbit count for {self.group}:{self.label} under preset {preset!r}") from None


def _parse_counts(text):
    if text == "-":
        return {}
    out = {}
    for item in text.split(","):
        name, _, value = item.partition("=")
        if not name or not value:
            raise NilpiecesError(f"bad count entry {item!r}")
        n = int(value)
        if n < 0:
            raise NilpiecesError(f"negative count in {item!r}")
        out[name] = n
    return out


def parse_table(text: str) -> list[ExceptionalOrbitRecord]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].strip() != HEADER:
        raise NilpiecesError(f"orbit data must start with {HEADER!r}")
    if len(lines) < 2 or tuple(lines[1].split("\t")) != COLUMNS:
        raise NilpiecesError(f"orbit data columns must be exactly {COLUMNS}")
    records = []
    for lineno, line in enumerate(lines[2:], start=3):
        cols = line.split("\t")
        if len(cols) != len(COLUMNS):
            raise NilpiecesError(f"line {lineno}: expected {len(COLUMNS)} columns, got {len(cols)}")
        group, label, diagram, special, rep, counts = cols
        lt = LieType.parse(group)
        if lt.is_classical:
            raise NilpiecesError(f"line {lineno}: {group} is not exceptional")
        if len(diagram) != lt.rank or set(diagram) - set("012"):
            raise NilpiecesError(f"line {lineno}: bad weighted diagram {diagram!r}")
        if special not in ("0", "1"):
            raise NilpiecesError(f"line {lineno}: special flag must be 0 or 1")
        records.append(ExceptionalOrbitRecord(
            lt, label, tuple(int(c) for c in diagram), special == "1", rep, _parse_counts(counts)))
    _validate(records)
    return records


def serialize_table(records) -> str:
    out = [HEADER, "\t".join(COLUMNS)]
    for r in records:
        counts = ",".join(f"{k}={v}" for k, v in r.k_orbit_counts.items()) or "-"
        out.append("\t".join([str(r.group), r.label, "".join(map(str, r.weighted_diagram)),
                              "1" if r.special else "0", r.special_piece_rep, counts]))
    return "\n".join(out) + "\n"


def _validate(records):
    index = {}
    for r in records:
        key = (r.group.family, r.label)
        if key in index:
            raise NilpiecesError(f"duplicate record {key}")
        index[key] = r
    for r in records:
        rep = index.get((r.group.family, r.special_piece_rep))
        if rep is None or not rep.special:
            raise NilpiecesError(
                f"{r.group}:{r.label} names {r.special_piece_rep!r} as special piece, "
                "which is not a special orbit of the table")
        if r.special and r.special_piece_rep != r.label:
            raise NilpiecesError(f"special orbit {r.label} must represent its own piece")
    for (group, rep, preset), expected in EXPECTED_PIECE_TOTALS.items():
        members = [r for r in records if r.group.family == group and r.special_piece_rep == rep]
        if not members:
            continue
        total = sum(r.k_orbit_counts.get(preset, 0) for r in members)
        if total != expected:
            raise NilpiecesError(f"{group} piece of {rep}: counts sum to {total}, expected {expected}")


def _data_text() -> str:
    override = os.environ.get("ORBITDATA_PATH")
    if override:
        return Path(override).read_text(encoding="utf-8")
    return resources.files("nilpieces").joinpath("data/orbitdata.tsv").read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def _load(text: str):
    records = parse_table(text)
    return records, {(r.group.family, r.label): r for r in records}


def load_table() -> list[ExceptionalOrbitRecord]:
    return list(_load(_data_text())[0])


def _check_group(group: LieType):
    if group.family not in ("F4", "E8"):
        raise NilpiecesError(f"no exceptional data for {group}")


def lookup(group: LieType, label: str) -> ExceptionalOrbitRecord:
    _check_group(group)
    records, index = _load(_data_text())
    try:
        return index[(group.family, label)]
    except KeyError:
        known = ", ".join(r.label for r in records if r.group == group)
        raise DataNotShipped(f"{group} orbit {label!r} not in shipped data; available: {known}") from None


def labels(group: LieType) -> list[str]:
    _check_group(group)
    return [r.label for r in _load(_data_text())[0] if r.group == group]


def special_piece_members(group: LieType, special_label: str) -> list[ExceptionalOrbitRecord]:
    rec = lookup(group, special_label)
    if not rec.special:
        raise NilpiecesError(f"{group}:{special_label} is not special")
    members = [r for r in _load(_data_text())[0]
               if r.group == group and r.special_piece_rep == special_label]
    members.sort(key=lambda r: r.label != special_label)
    return members


def dual_label(group: LieType, label: str) -> str:
    """Dual of an orbit in the shipped tables (via its special piece)."""
    rec = lookup(group, label)
    try:
        return _SPECIAL_DUALS[group.family][rec.special_piece_rep]
    except KeyError:
        raise DataNotShipped(f"duality for {group}:{label} is not shipped") from None

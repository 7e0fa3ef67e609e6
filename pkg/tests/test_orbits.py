import itertools
from fractions import Fraction

import pytest

from nilpieces.errors import HypothesisError, NilpiecesError
from nilpieces.lietype import LieType
from nilpieces.orbits import (
    all_orbits,
    closure_leq,
    dual,
    h_multiset,
    is_even,
    is_special,
    lambda_of,
    orbit,
    parse_orbit,
    regular_orbit,
    satisfies_hypotheses,
    special_piece,
    special_rep,
    weighted_dynkin,
    zero_levi,
    zero_orbit,
)
from nilpieces.partitions import dominance_leq

CLASSICAL = [LieType(f, r) for f in "BCD" for r in range(1 if f != "D" else 2, 6)]


def test_lie_type_parse():
    assert str(LieType.parse("b2")) == "B2"
    assert LieType.parse("B3").langlands_dual() == LieType("C", 3)
    assert LieType.parse("F4").langlands_dual() == LieType.parse("F4")
    assert LieType.parse("D4").ambient_size == 8
    for bad in ("B0", "D1", "F5", "Q3", ""):
        with pytest.raises(NilpiecesError):
            LieType.parse(bad)


def test_orbit_rendering():
    assert str(orbit("B2", "3,1,1")) == "B2:3,1,1"
    assert str(orbit("F4", label="F4(a3)")) == "F4:F4(a3)"
    assert str(orbit("D4", "2,2,2,2", tag="I")) == "D4:2,2,2,2:I"
    for text in ("B2:3,1,1", "F4:F4(a3)", "D4:4,4:II"):
        assert str(parse_orbit(text)) == text


def test_orbit_validation():
    with pytest.raises(NilpiecesError):
        orbit("C2", "3,1")
    with pytest.raises(NilpiecesError):
        orbit("D4", "2,2,2,2")  # very even needs a tag
    with pytest.raises(NilpiecesError):
        orbit("B2", "3,1,1", tag="I")
    with pytest.raises(NilpiecesError):
        orbit("F4", label="F7")


def test_orbit_counts():
    # known numbers of nilpotent orbits
    assert len(all_orbits(LieType("B", 3))) == 7
    assert len(all_orbits(LieType("C", 3))) == 8
    assert len(all_orbits(LieType("D", 4))) == 12
    assert len(all_orbits(LieType.parse("F4"))) == 16


def test_h_multiset():
    assert sorted(h_multiset((3, 1, 1))) == [-2, 0, 0, 0, 2]


@pytest.mark.parametrize("o, expected", [
    (orbit("B2", "3,1,1"), "20"),
    (orbit("C2", "2,2"), "02"),
    (orbit("C2", "2,1,1"), "10"),
    (orbit("C2", "1,1,1,1"), "00"),
    (orbit("C3", "6"), "222"),
    (orbit("D4", "3,1,1,1,1,1"), "2000"),
    (orbit("D4", "2,2,2,2", tag="I"), "0002"),
    (orbit("D4", "2,2,2,2", tag="II"), "0020"),
    (orbit("D4", "5,1,1,1"), "2200"),
    (orbit("A3", "2,2"), "020"),
    (orbit("F4", label="F4(a3)"), "0200"),
])
def test_weighted_dynkin(o, expected):
    assert str(weighted_dynkin(o)) == expected


def test_even():
    assert is_even(orbit("B2", "3,1,1"))
    assert is_even(orbit("C2", "2,2"))
    assert not is_even(orbit("C2", "2,1,1"))


def test_lambda():
    assert lambda_of(orbit("B2", "3,1,1")) == (1, 0)
    assert lambda_of(orbit("C2", "2,2")) == (Fraction(1, 2), Fraction(1, 2))
    assert lambda_of(zero_orbit(LieType("C", 3))) == (0, 0, 0)


def test_zero_levi():
    assert zero_levi(orbit("C2", "2,2")).simple_roots == (1,)
    assert zero_levi(orbit("F4", label="F4(a3)")).simple_roots == (1, 3, 4)
    assert zero_levi(regular_orbit(LieType("B", 3))).simple_roots == ()
    with pytest.raises(NilpiecesError):
        zero_levi(orbit("C2", "2,1,1"))


@pytest.mark.parametrize("src, dst", [
    ("B2:3,1,1", "C2:2,2"),
    ("B2:5", "C2:1,1,1,1"),
    ("C2:1,1,1,1", "B2:5"),
    ("C2:2,1,1", "B2:3,1,1"),
    ("B2:2,2,1", "C2:2,2"),
    ("A3:3,1", "A3:2,1,1"),
    ("D4:3,2,2,1", "D4:3,3,1,1"),
])
def test_dual(src, dst):
    assert str(dual(parse_orbit(src))) == dst


def test_special():
    assert is_special(orbit("C2", "2,2"))
    assert not is_special(orbit("C2", "2,1,1"))
    assert is_special(zero_orbit(LieType("B", 4)))


def test_closure():
    assert closure_leq(orbit("C2", "2,1,1"), orbit("C2", "2,2"))
    assert closure_leq(orbit("B2", "2,2,1"), orbit("B2", "3,1,1"))
    assert not closure_leq(orbit("C2", "2,2"), orbit("C2", "2,1,1"))
    a, b = orbit("D4", "2,2,2,2", tag="I"), orbit("D4", "2,2,2,2", tag="II")
    assert not closure_leq(a, b) and not closure_leq(b, a)


def test_special_piece_examples():
    assert [str(o) for o in special_piece(orbit("B2", "3,1,1"))] == ["B2:3,1,1", "B2:2,2,1"]
    f4 = [o.label for o in special_piece(orbit("F4", label="F4(a3)"))]
    assert f4 == ["F4(a3)", "C3(a1)", "Ã2+A1", "B2", "A2+Ã1"]
    z = zero_orbit(LieType("C", 3))
    assert special_piece(z) == [z]
    with pytest.raises(NilpiecesError):
        special_piece(orbit("C2", "2,1,1"))


def test_hypotheses():
    assert satisfies_hypotheses(orbit("B2", "3,1,1")) is None
    assert "not special" in satisfies_hypotheses(orbit("C2", "2,1,1"))
    assert "is not even" in satisfies_hypotheses(orbit("C3", "2,2,1,1"))
    assert "dual" in satisfies_hypotheses(orbit("A3", "3,1"))
    assert satisfies_hypotheses(orbit("B3", "3,3,1")) is None


@pytest.mark.parametrize("lt", CLASSICAL, ids=str)
def test_duality_properties(lt):
    orbs = all_orbits(lt)
    for o in orbs:
        d = dual(o)
        assert d.lie_type == lt.langlands_dual()
        assert is_special(d)
        assert dual(dual(d)) == d
        assert (dual(d) == o) == is_special(o)
    for a, b in itertools.product(orbs, repeat=2):
        if closure_leq(a, b):
            assert closure_leq(dual(b), dual(a))


@pytest.mark.parametrize("lt", CLASSICAL, ids=str)
def test_special_pieces_partition(lt):
    orbs = all_orbits(lt)
    members = [m for o in orbs if is_special(o) for m in special_piece(o)]
    assert sorted(members) == sorted(orbs)
    for o in orbs:
        rep = special_rep(o)
        assert closure_leq(o, rep)
        # minimal special orbit above o
        for s in orbs:
            if is_special(s) and closure_leq(o, s):
                assert closure_leq(rep, s)


@pytest.mark.parametrize("lt", CLASSICAL, ids=str)
def test_zero_and_regular_swap(lt):
    assert dual(zero_orbit(lt)) == regular_orbit(lt.langlands_dual())
    assert dual(regular_orbit(lt)) == zero_orbit(lt.langlands_dual())


def test_regular_all_twos():
    for lt in CLASSICAL:
        assert set(weighted_dynkin(regular_orbit(lt)).labels) == {2}


def test_closure_is_dominance_off_very_even():
    lt = LieType("C", 4)
    for a, b in itertools.product(all_orbits(lt), repeat=2):
        assert closure_leq(a, b) == dominance_leq(a.jordan, b.jordan)

import pytest

from nilpieces.errors import HypothesisError
from nilpieces.lietype import LieType
from nilpieces.orbits import all_orbits, orbit, satisfies_hypotheses, special_piece, zero_levi
from nilpieces.weyl import (
    cell_module,
    irreps,
    make_irrep,
    sgn_multiplicity,
    sign_irrep,
    springer_trivial,
    trivial,
)

C2 = LieType("C", 2)
TYPES = [LieType(f, r) for f in "ABCD" for r in range(1 if f != "D" else 2, 5)]


@pytest.mark.parametrize("o, expected", [
    (orbit("C2", "1,1,1,1"), "[- | 1,1]"),
    (orbit("C2", "4"), "[2 | -]"),
    (orbit("C2", "2,2"), "[1 | 1]"),
    (orbit("C2", "2,1,1"), "[1,1 | -]"),
    (orbit("B2", "5"), "[2 | -]"),
    (orbit("B2", "3,1,1"), "[1 | 1]"),
    (orbit("B2", "2,2,1"), "[- | 2]"),
    (orbit("B2", "1,1,1,1,1"), "[- | 1,1]"),
    (orbit("A2", "2,1"), "[2,1]"),
])
def test_springer_values(o, expected):
    assert str(springer_trivial(o)) == expected


def test_sgn_multiplicity_examples():
    assert sgn_multiplicity(C2, trivial(C2), (1,)) == 0
    assert sgn_multiplicity(C2, sign_irrep(C2), (1,)) == 1
    assert sgn_multiplicity(C2, springer_trivial(orbit("C2", "2,2")), (1,)) == 1
    assert sgn_multiplicity(C2, make_irrep(C2, (2,), ()), ()) == 1


@pytest.mark.parametrize("lt", TYPES, ids=str)
def test_springer_injective_and_endpoints(lt):
    images = [springer_trivial(o) for o in all_orbits(lt)]
    assert len(set(images)) == len(images)
    assert set(images) <= set(irreps(lt))
    assert images[0] == trivial(lt)  # regular orbit comes first
    assert images[-1] == sign_irrep(lt)


@pytest.mark.parametrize("lt", TYPES, ids=str)
def test_multiplicity_one_on_special_pieces(lt):
    for o in all_orbits(lt):
        if satisfies_hypotheses(o):
            continue
        levi = zero_levi(o)
        for member in special_piece(o):
            assert sgn_multiplicity(lt, springer_trivial(member), levi) == 1, (o, member)


def test_cell_module():
    summands = cell_module(orbit("B2", "3,1,1"))
    assert [str(s.irrep) for s in summands] == ["[1 | 1]", "[- | 2]"]
    assert len(cell_module(orbit("F4", label="F4(a3)"))) == 5
    assert all(s.irrep is None for s in cell_module(orbit("F4", label="F4(a3)")))
    with pytest.raises(HypothesisError):
        cell_module(orbit("C2", "2,1,1"))

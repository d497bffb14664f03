import pytest

import kodaira_fibers as kf


def test_component_groups():
    assert kf.pi0("I3*") == "Z/4"
    assert kf.pi0("I2*") == "Z/2 + Z/2"
    assert kf.pi0("IV/3") == "0"


def test_base_change_and_reduction():
    assert kf.base_change("I2", 3) == {"type": "I6", "inertia_order": 3}
    red = kf.semistable_reduction("I3*/2")
    assert red["degree"] == 2 and red["reduced"] == "I6" and red["twisted"]


def test_multiple_types():
    assert kf.multiple_fiber_types("II", 2) == ["2*IV-a", "2*IV*-a"]
    assert kf.multiple_fiber_types("III", 2) == ["2*I0*-a"]
    assert kf.multiple_fiber_types("I1", 2) == ["2*I1^1", "2*I2^2"]


def test_enumeration_small():
    types = sorted(c["type"] for c in kf.enumerate_balanced(4))
    assert types == ["I2", "I3", "I4", "III", "IV"]


def test_quotient_and_formula_round_trip():
    f = "(i,z,y) -> (-i, z^-1 * zeta^i, y+a) ; zeta=1/2, a=(1/2, 0)"
    assert kf.parse_automorphism(f) == f
    assert kf.quotient_type("I4", 2, [f]) == "2*I2+"


def test_recipes_pass():
    for rid in kf.recipe_ids():
        assert kf.run_recipe(rid)["pass"], rid


def test_tables():
    rows = kf.emit_table("T3-pi0")
    assert {"type": "I_odd*", "pi0": "Z/4"}.items() <= next(r for r in rows if r["type"] == "I_odd*").items()


def test_errors_map_to_value_error():
    with pytest.raises(ValueError):
        kf.canonical_type("I-1")
    with pytest.raises(kf.DomainError):
        kf.base_change("II", 5)

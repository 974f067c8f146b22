import pytest

from knotsurgery.diagram import (Crossing, Diagram, DiagramBuilder,
                                 SurgeryCoefficient, TwistBox, SameComponent)


def hopf_positive():
    crossings = {
        "c1": Crossing("c1", 1, ("a1", "a2"), ("b2", "b1")),
        "c2": Crossing("c2", 1, ("b1", "b2"), ("a2", "a1")),
    }
    return Diagram.assemble(crossings, {}, [],
                            names={"a1": "A", "b1": "B"})


def left_trefoil():
    crossings = {
        "c1": Crossing("c1", -1, ("1", "2"), ("4", "5")),
        "c2": Crossing("c2", -1, ("3", "4"), ("6", "1")),
        "c3": Crossing("c3", -1, ("5", "6"), ("2", "3")),
    }
    return Diagram.assemble(crossings, {}, [], names={"1": "K"})


def test_hopf_valid_and_linking():
    d = hopf_positive()
    assert d.validate().ok()
    assert len(d.components) == 2
    assert d.linking_number("A", "B") == 1
    assert d.linking_number("B", "A") == 1
    with pytest.raises(SameComponent):
        d.linking_number("A", "A")


def test_trefoil_valid():
    d = left_trefoil()
    assert d.validate().ok()
    assert len(d.components) == 1
    assert d.writhe("K") == -3


def test_invalid_diagram_names_edge():
    crossings = {"c1": Crossing("c1", 1, ("a", "b"), ("c", "d"))}
    d = Diagram(crossings, {}, [], [])
    rep = d.validate()
    assert not rep.ok()
    assert any("a" in issue for issue in rep.issues)


def test_mirror_involution_and_linking():
    d = hopf_positive()
    m = d.mirror()
    assert m.linking_number("A", "B") == -1
    assert m.mirror().canonically_equal(d)
    t = left_trefoil()
    assert t.mirror().writhe("K") == 3


def closed_box_link(param, up=(True, True)):
    """Trace closure of a 2-strand twist box (components A, B)."""
    boxes = {"b0": TwistBox("b0", param, ("A", "B"), ("A", "B"), up)}
    return Diagram.assemble({}, boxes, [], names={"A": "A", "B": "B"})


def test_box_closure_linking_parallel():
    d = closed_box_link(1)
    assert d.validate().ok()
    assert len(d.components) == 2
    assert d.linking_number("A", "B") == 1


def test_expand_box_two_positive_crossings():
    d = closed_box_link(1)
    e = d.expand_twist_boxes()
    assert e.validate().ok()
    assert len(e.crossings) == 2
    assert all(c.sign == 1 for c in e.crossings.values())
    assert e.linking_number("A", "B") == 1
    assert len(e.components) == 2


def test_expand_box_antiparallel_clasp():
    d = closed_box_link(1, up=(True, False))
    assert d.linking_number("A", "B") == -1
    e = d.expand_twist_boxes()
    assert len(e.crossings) == 2
    assert all(c.sign == -1 for c in e.crossings.values())
    assert e.linking_number("A", "B") == -1


def test_expand_zero_box_identity_elsewhere():
    d = closed_box_link(0)
    e = d.expand_twist_boxes()
    assert e.validate().ok()
    assert len(e.crossings) == 0
    assert len(e.components) == 2


@pytest.mark.parametrize("param", [-2, -1, 2, 3])
def test_expand_box_crossing_count_and_sign(param):
    d = closed_box_link(param)
    e = d.expand_twist_boxes()
    assert len(e.crossings) == 2 * abs(param)
    want = 1 if param > 0 else -1
    assert all(c.sign == want for c in e.crossings.values())
    assert e.linking_number("A", "B") == param


def test_expand_wide_box():
    boxes = {"b0": TwistBox("b0", 1, ("A", "B", "C"), ("A", "B", "C"),
                            (True, True, True))}
    d = Diagram.assemble({}, boxes, [], names={"A": "A", "B": "B", "C": "C"})
    e = d.expand_twist_boxes()
    assert e.validate().ok()
    assert len(e.crossings) == 6  # w(w-1) per full twist
    assert len(e.components) == 3
    for x, y in (("A", "B"), ("A", "C"), ("B", "C")):
        assert d.linking_number(x, y) == 1
        assert e.linking_number(x, y) == 1


def test_component_count_stable_under_expansion():
    for param in (-3, 0, 2):
        d = closed_box_link(param, up=(True, False))
        assert len(d.expand_twist_boxes().components) == len(d.components)


def test_ring_through_single_strand_is_hopf():
    b = DiagramBuilder()
    b.name_component("s", "S", "0/1")
    b.ring_through([("s", "s", True)], "R", coefficient="-1")
    d = b.build()
    assert d.validate().ok()
    assert len(d.crossings) == 2
    assert d.linking_number("R", "S") == 1
    assert str(d.component("R").coefficient) == "-1/1"


def test_ring_through_cable_directions():
    b = DiagramBuilder()
    b.name_component("s", "S", "0/1")
    b.name_component("u", "U", "0/1")
    b.ring_through([("s", "s", True), ("u", "u", False)], "R")
    d = b.build()
    assert d.validate().ok()
    assert d.linking_number("R", "S") == 1
    assert d.linking_number("R", "U") == -1
    assert d.linking_number("S", "U") == 0


def test_surgery_coefficient_parse_and_reduce():
    c = SurgeryCoefficient.parse("6/-4")
    assert (c.p, c.q) == (-3, 2)
    assert str(SurgeryCoefficient.parse("inf")) == "inf"
    assert str(SurgeryCoefficient.parse("*")) == "*"
    assert SurgeryCoefficient.parse("-1/3").negated() == \
        SurgeryCoefficient.rational(1, 3)
    assert SurgeryCoefficient.rational(1, 0).kind == "infinity"
    assert SurgeryCoefficient.parse("0/1").plus_int(2).p == 2


def test_json_roundtrip():
    d = hopf_positive().with_coefficient("A", "3/2")
    d2 = Diagram.from_json(d.to_json())
    assert d2.to_json() == d.to_json()
    assert d2.linking_number("A", "B") == 1


def test_canonical_equal_under_relabel():
    d1 = hopf_positive()
    crossings = {
        "z9": Crossing("z9", 1, ("p1", "p2"), ("q2", "q1")),
        "z8": Crossing("z8", 1, ("q1", "q2"), ("p2", "p1")),
    }
    d2 = Diagram.assemble(crossings, {}, [], names={"p1": "X", "q1": "Y"})
    assert d1.canonically_equal(d2)
    assert not d1.canonically_equal(d1.mirror())

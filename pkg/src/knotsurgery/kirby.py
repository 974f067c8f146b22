"""Framed-link calculus: blow-ups and blow-downs, handle slides over ring
components, rational-coefficient expansion, linking matrices, first
homology, and certified replay of move chains.

Ring components (crossing-free circles encircling a parallel cable) are the
working currency: the clasp curve, the added -1/n unknots, meridians of
rational chains and the carving meridian are all rings, and blow-down of a
ring with slope p/q (|p| = 1) inserts -p*q full right-handed twists on its
cable with framing shifts -p*q*lk^2.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .diagram import (Crossing, Diagram, DiagramError, SurgeryCoefficient,
                      TwistBox, _FreshNames, _splice_edges)
from .snf import AbelianGroup


class KirbyError(DiagramError):
    pass


class NotBlowdownable(KirbyError):
    pass


class AsteriskSlide(KirbyError):
    pass


class StepFailed(KirbyError):
    def __init__(self, index, reason):
        super().__init__(f"step {index}: {reason}")
        self.index = index
        self.reason = reason


class HypothesisFailed(KirbyError):
    def __init__(self, which, reason):
        super().__init__(f"hypothesis {which}: {reason}")
        self.which = which
        self.reason = reason


# ---------------------------------------------------------------------------
# homology


def generalized_linking_matrix(d: Diagram):
    """Rows p_i e_i + q_i sum_j lk(i,j) e_j over non-infinity components.

    Asterisk components are rejected; infinity components contribute no row
    and no column (their deletion does not change the others' framings).
    """
    comps = []
    for c in d.components:
        if c.coefficient.kind == "asterisk":
            raise KirbyError(f"component {c.name} carries an asterisk")
        if c.coefficient.kind != "infinity":
            comps.append(c.name)
    n = len(comps)
    M = [[0] * n for _ in range(n)]
    for i, a in enumerate(comps):
        ca = d.component(a).coefficient
        M[i][i] = ca.p
        for j, b in enumerate(comps):
            if i != j:
                M[i][j] = ca.q * d.linking_number(a, b)
    return comps, M


def integer_linking_matrix(d: Diagram):
    """Symmetric matrix: framings on the diagonal, linking numbers off it.

    Requires every non-asterisk coefficient to be an integer.
    """
    comps = [c.name for c in d.components
             if c.coefficient.kind == "rational"]
    for name in comps:
        if not d.component(name).coefficient.is_integer():
            raise KirbyError(f"{name} has a non-integer framing")
    n = len(comps)
    M = [[0] * n for _ in range(n)]
    for i, a in enumerate(comps):
        M[i][i] = d.component(a).coefficient.p
        for j in range(i + 1, n):
            M[i][j] = M[j][i] = d.linking_number(a, comps[j])
    return comps, M


def h1(d: Diagram) -> AbelianGroup:
    """First homology of the surgered manifold (no asterisks allowed)."""
    _, M = generalized_linking_matrix(d)
    if not M:
        return AbelianGroup((), 0)
    return AbelianGroup.from_matrix(M)


# ---------------------------------------------------------------------------
# ring anatomy


@dataclass
class RingCable:
    """The parallel strands passing through a ring component, in order."""

    strands: list  # per strand: dict(e_in, mid, e_out, direction, c_over,
    #                                 c_under, component)

    def width(self):
        return len(self.strands)

    def multiplicities(self, d):
        mult = {}
        for s in self.strands:
            k = s["component"]
            mult[k] = mult.get(k, 0) + s["direction"]
        return mult


def ring_cable(d: Diagram, name: str) -> RingCable:
    """Anatomy of a crossing-free circle encircling a parallel cable.

    The ring must have no self-crossings, and every other strand meeting it
    must pass through (one over- and one under-crossing, adjacent along
    that strand).
    """
    comp = d.component(name)
    owner = d.component_of_edge()
    k_ring = d.component_index(name)
    heads, tails = d._port_maps()

    if all(e in d.free_loops for e in comp.edges):
        return RingCable([])

    # collect the ring's crossings in cycle order
    ring_x = []
    for e in comp.edges:
        kind, cid, role = heads[e] if e in heads else (None, None, None)
        if kind != "x":
            raise NotBlowdownable(f"{name} runs through a twist box")
        c = d.crossings[cid]
        other = c.under if role == "o" else c.over
        if owner[other[0]] == k_ring:
            raise NotBlowdownable(f"{name} has a self-crossing")
        ring_x.append((cid, role, c))
    if not ring_x:
        return RingCable([])

    # the over-run: maximal cyclic run of crossings where the ring is over
    n = len(ring_x)
    roles = [r for (_, r, _) in ring_x]
    if set(roles) == {"o"} or set(roles) == {"u"}:
        raise NotBlowdownable(f"{name} does not alternate over/under")
    # rotate so the over-run starts at index 0
    start = None
    for i in range(n):
        if roles[i] == "o" and roles[i - 1] == "u":
            start = i
            break
    ring_x = ring_x[start:] + ring_x[:start]
    roles = [r for (_, r, _) in ring_x]
    w = roles.count("o")
    if roles != ["o"] * w + ["u"] * (n - w) or n != 2 * w:
        raise NotBlowdownable(f"{name} crossing pattern is not a cable ring")

    strands = []
    unders = {}
    for cid, role, c in ring_x[w:]:
        # crossings where the ring passes under the strand
        unders[cid] = c
    for idx, (cid, role, c) in enumerate(ring_x[:w]):
        # ring over: the passing strand is the under strand here; its
        # matching strand-over crossing sits just before or just after it
        p, q = c.under
        kind_h, cid_h, _ = heads.get(q, (None, None, None))
        kind_t, cid_t, _ = tails.get(p, (None, None, None))
        if kind_h == "x" and cid_h in unders:
            c2 = unders[cid_h]
            mid2, e_out = c2.over
            if mid2 != q:
                raise NotBlowdownable(
                    f"strand through {name} is not consecutive")
            e_in, mid = p, q
        elif kind_t == "x" and cid_t in unders:
            c2 = unders[cid_t]
            e_in, mid2 = c2.over
            if mid2 != p:
                raise NotBlowdownable(
                    f"strand through {name} is not consecutive")
            mid, e_out = p, q
        else:
            raise NotBlowdownable(
                f"strand through {name} does not pass straight through")
        sign_sum = c.sign + c2.sign
        if sign_sum not in (2, -2):
            raise NotBlowdownable(f"strand through {name} does not link it")
        strands.append({
            "e_in": e_in, "mid": mid, "e_out": e_out,
            "direction": sign_sum // 2,
            "c_over": c.id, "c_under": c2.id,
            "component": owner[e_in],
        })
    # order strands along the cable by the position of their over-crossing
    return RingCable(strands)


def is_unknotted_ring(d: Diagram, name: str) -> bool:
    try:
        ring_cable(d, name)
        return True
    except NotBlowdownable:
        return False


# ---------------------------------------------------------------------------
# moves


def _twist_count(coeff: SurgeryCoefficient):
    if coeff.kind != "rational" or abs(coeff.p) != 1:
        raise NotBlowdownable(
            f"coefficient {coeff} is not of unknot blow-down form")
    return -coeff.p * coeff.q


def blow_down(d: Diagram, name: str) -> Diagram:
    """Remove a ring with slope +-1/q, twisting its cable.

    Slope -1/q inserts q full right-handed twists (+1/q left-handed);
    framings change by t * lk^2 with t the inserted twist count.
    """
    comp = d.component(name)
    t = _twist_count(comp.coefficient)
    cable = ring_cable(d, name)
    crossings = dict(d.crossings)
    for s in cable.strands:
        del crossings[s["c_over"]]
        del crossings[s["c_under"]]
    # framing updates
    mult = cable.multiplicities(d)
    coeffs = {}
    for c in d.components:
        if c.name == name:
            continue
        m = mult.get(d.component_index(c.name), 0)
        if m and c.coefficient.kind == "rational":
            coeffs[c.name] = c.coefficient.plus_int(t * m * m)
    boxes = dict(d.boxes)
    if cable.strands:
        fresh = _FreshNames("bd", d.all_edges(), set(crossings) | set(boxes))
        bid = fresh.crossing()
        bottom, top, up = [], [], []
        for s in cable.strands:
            if s["direction"] > 0:
                bottom.append(s["e_in"])
                top.append(s["e_out"])
                up.append(True)
            else:
                bottom.append(s["e_out"])
                top.append(s["e_in"])
                up.append(False)
            # drop the mid edge entirely
        boxes[bid] = TwistBox(bid, t, tuple(bottom), tuple(top), tuple(up))
    loops = tuple(e for e in d.free_loops if e not in set(comp.edges))
    out = d.rebuilt(crossings=crossings, boxes=boxes, free_loops=loops,
                    coefficients=coeffs)
    return out


def insert_ring(d: Diagram, edges, name: str, coefficient,
                directions=None) -> Diagram:
    """Add a ring component encircling the given edges (in cable order).

    The caller asserts the edges are co-facial so the ring is planar; the
    tests check the Euler characteristic.  Directions are taken from the
    edge orientations: each listed edge passes upward through the ring.
    """
    if isinstance(coefficient, str):
        coefficient = SurgeryCoefficient.parse(coefficient)
    fresh = _FreshNames("bu", d.all_edges(), set(d.crossings) | set(d.boxes))
    crossings = dict(d.crossings)
    from .moves import _retarget_head
    w = len(edges)
    if w == 0:
        loop = fresh.edge()
        return d.rebuilt(free_loops=tuple(d.free_loops) + (loop,),
                         names={loop: name},
                         coefficients={name: coefficient})
    r = [fresh.edge() for _ in range(2 * w)]
    mids = [fresh.edge() for _ in range(w)]
    outs = []
    loops = list(d.free_loops)
    for i, e in enumerate(edges):
        if e in loops:
            # a bare circle: it closes up through the ring
            outs.append(e)
            loops.remove(e)
        else:
            ne = fresh.edge()
            crossings = _retarget_head(crossings, d, e, ne)
            outs.append(ne)
    ring0 = None
    for i, e in enumerate(edges):
        up = True if directions is None else bool(directions[i])
        e_in, e_out = e, outs[i]
        bot_pair = (e_in, mids[i]) if up else (mids[i], e_out)
        top_pair = (mids[i], e_out) if up else (e_in, mids[i])
        sign = 1 if up else -1
        cid1 = fresh.crossing()
        crossings[cid1] = Crossing(cid1, sign, top_pair,
                                   (r[i], r[(i + 1) % (2 * w)]))
        j = w + (w - 1 - i)
        cid2 = fresh.crossing()
        crossings[cid2] = Crossing(cid2, sign, (r[j], r[(j + 1) % (2 * w)]),
                                   bot_pair)
        ring0 = r[0]
    return d.rebuilt(crossings=crossings, free_loops=tuple(loops),
                     names={ring0: name},
                     coefficients={name: coefficient})


def blow_up(d: Diagram, edges, name: str, coefficient, directions=None,
            compensate=True) -> Diagram:
    """Inverse of blow_down: insert a ring and the cancelling twists.

    With compensate=True the surgered manifold is unchanged: the ring with
    slope p/q (|p| = 1) comes with -t twists on the cable and framing
    shifts -t*lk^2, t = -p*q.
    """
    if isinstance(coefficient, str):
        coefficient = SurgeryCoefficient.parse(coefficient)
    t = _twist_count(coefficient)
    owner = d.component_of_edge()
    out = insert_ring(d, edges, name, coefficient, directions)
    if not compensate or not edges or t == 0:
        return out
    # insert the cancelling box just past the ring (on the out-edges of
    # the cable, which insert_ring produced in order)
    cable = ring_cable(out, name)
    fresh = _FreshNames("cb", out.all_edges(),
                        set(out.crossings) | set(out.boxes))
    crossings = dict(out.crossings)
    boxes = dict(out.boxes)
    from .moves import _retarget_head
    bid = fresh.crossing()
    bottom, top, up = [], [], []
    news = []
    for s in cable.strands:
        e = s["e_out"]
        ne = fresh.edge()
        crossings = _retarget_head(crossings, out, e, ne)
        news.append(ne)
        if s["direction"] > 0:
            bottom.append(e)
            top.append(ne)
            up.append(True)
        else:
            bottom.append(ne)
            top.append(e)
            up.append(False)
    boxes[bid] = TwistBox(bid, -t, tuple(bottom), tuple(top), tuple(up))
    mult = {}
    for s in cable.strands:
        k = s["component"]
        mult[k] = mult.get(k, 0) + s["direction"]
    coeffs = {}
    for c in out.components:
        if c.name == name:
            continue
        m = mult.get(out.component_index(c.name), 0)
        if m and c.coefficient.kind == "rational":
            coeffs[c.name] = c.coefficient.plus_int(-t * m * m)
    return out.rebuilt(crossings=crossings, boxes=boxes, coefficients=coeffs)


def delete_component(d: Diagram, name: str) -> Diagram:
    """Remove an infinity-framed (or plain) component, splicing through."""
    comp = d.component(name)
    gone = set(comp.edges)
    crossings = dict(d.crossings)
    splices = []
    for cid, c in list(crossings.items()):
        u_gone = c.under[0] in gone
        o_gone = c.over[0] in gone
        if u_gone and o_gone:
            del crossings[cid]
        elif u_gone:
            del crossings[cid]
            splices.append(c.over)
        elif o_gone:
            del crossings[cid]
            splices.append(c.under)
    boxes = {}
    for bid, b in d.boxes.items():
        keep = [i for i in range(b.width) if b.bottom[i] not in gone]
        if len(keep) == b.width:
            boxes[bid] = b
        elif keep:
            boxes[bid] = TwistBox(bid, b.param,
                                  tuple(b.bottom[i] for i in keep),
                                  tuple(b.top[i] for i in keep),
                                  tuple(b.up[i] for i in keep))
    crossings, find = _splice_edges(crossings, splices, with_find=True)
    boxes = {bid: TwistBox(bid, b.param,
                           tuple(find(e) for e in b.bottom),
                           tuple(find(e) for e in b.top), b.up)
             for bid, b in boxes.items()}
    used = set()
    for c in crossings.values():
        used.update(c.under)
        used.update(c.over)
    for b in boxes.values():
        used.update(b.bottom)
        used.update(b.top)
    loops = {find(e) for e in d.free_loops if e not in gone}
    # strands that lost all their structure become free loops
    for pair in splices:
        r = find(pair[0])
        if r not in used:
            loops.add(r)
    return d.rebuilt(crossings=crossings, boxes=boxes,
                     free_loops=tuple(sorted(loops)))


def reverse_component(d: Diagram, name: str) -> Diagram:
    """Reverse a component's orientation (signs flip at mixed crossings)."""
    comp = d.component(name)
    mine = set(comp.edges)
    crossings = {}
    for cid, c in d.crossings.items():
        under, over, sign = c.under, c.over, c.sign
        u_mine = under[0] in mine
        o_mine = over[0] in mine
        if u_mine:
            under = (under[1], under[0])
        if o_mine:
            over = (over[1], over[0])
        if u_mine != o_mine:
            sign = -sign
        crossings[cid] = Crossing(cid, sign, under, over)
    boxes = {}
    for bid, b in d.boxes.items():
        up = tuple((not u) if b.bottom[i] in mine else u
                   for i, u in enumerate(b.up))
        boxes[bid] = TwistBox(bid, b.param, b.bottom, b.top, up)
    return d.rebuilt(crossings=crossings, boxes=boxes)


def handle_slide(d: Diagram, a: str, b: str, band_edge_a: str,
                 reversed_sum: bool = False) -> Diagram:
    """Slide component a over a ring component b (a band-sum with a
    parallel pushoff of b).

    b must be a 0-framed unknotted ring so its framing pushoff is the
    parallel ring; band_edge_a names the edge of a that band-sums into the
    pushoff (it must be co-facial with b).  The new framing is
    f_a + f_b + 2 lk(a, b) for the parallel sum and
    f_a + f_b - 2 lk(a, b) for the reversed one.
    """
    ca = d.component(a)
    cb = d.component(b)
    if cb.coefficient.kind == "asterisk":
        raise AsteriskSlide(f"{b} is unsurgered")
    if a == b:
        raise KirbyError("cannot slide a component over itself")
    if not ca.coefficient.is_integer() or not cb.coefficient.is_integer():
        raise KirbyError("handle slides need integer framings")
    if cb.coefficient.p != 0:
        raise KirbyError("only slides over 0-framed rings are implemented")
    cable = ring_cable(d, b)
    lk = d.linking_number(a, b)
    # pushoff: a second ring around the same cable, traversed parallel or
    # reversed; band-sum it into a at band_edge_a
    mids = {s["mid"] for s in cable.strands}
    if band_edge_a in mids:
        raise KirbyError("band edge may not pass through the ring")
    tmp = insert_ring(d, [s["e_out"] for s in cable.strands], "__push",
                      "0/1",
                      directions=[s["direction"] > 0
                                  for s in cable.strands])
    if reversed_sum:
        tmp = reverse_component(tmp, "__push")
    push = tmp.component("__push")
    # band-sum: cut band_edge_a and one edge of the pushoff and cross-join
    e_p = push.edges[0]
    crossings = dict(tmp.crossings)
    from .moves import _retarget_head
    fresh = _FreshNames("hs", tmp.all_edges(), set(crossings))
    na, np_ = fresh.edge(), fresh.edge()
    crossings = _retarget_head(crossings, tmp, band_edge_a, na)
    crossings = _retarget_head(crossings, tmp, e_p, np_)
    #往 a: ... -> band_edge_a -> (into pushoff at np_ ... around to e_p)
    # -> na -> rest of a
    crossings = _splice_edges(crossings, [(band_edge_a, np_), (e_p, na)])
    new_framing = ca.coefficient.p + cb.coefficient.p + \
        (2 * lk if not reversed_sum else -2 * lk)
    out = tmp.rebuilt(crossings=crossings,
                      coefficients={a: SurgeryCoefficient.integer(
                          new_framing)})
    # the pushoff merged into a; make sure the component census shrank
    names = {c.name for c in out.components}
    if "__push" in names:
        raise KirbyError("band sum failed to merge the pushoff")
    return out


def slide_matrix(M, i, j, sign=1):
    """Linking-matrix congruence of sliding component i over j."""
    n = len(M)
    E = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    E[i][j] = sign
    out = [[sum(E[r][x] * M[x][y] for x in range(n)) for y in range(n)]
           for r in range(n)]
    return [[sum(out[r][y] * E[c][y] for y in range(n)) for c in range(n)]
            for r in range(n)], E


# ---------------------------------------------------------------------------
# rational expansion


def negative_continued_fraction(p, q):
    """p/q = a_1 - 1/(a_2 - 1/(... - 1/a_k)), floor-based.

    The head a_1 = floor(p/q); every tail entry is <= -2, which makes the
    expansion canonical.
    """
    if q <= 0:
        raise ValueError("need q > 0")
    out = []
    while True:
        if p % q == 0:
            out.append(p // q)
            return out
        a = p // q
        out.append(a)
        r = p - a * q          # 0 < r < q
        p, q = -q, r           # continue with x = -q/r


def expand_rational(d: Diagram) -> Diagram:
    """Replace rational coefficients by integer-framed meridian chains.

    Every p/q with q >= 2 becomes the floor-based negative continued
    fraction chain; infinity components are deleted; asterisks are left
    untouched (the caller keeps them aside).
    """
    out = d
    for comp in list(d.components):
        if comp.coefficient.kind == "infinity":
            out = delete_component(out, comp.name)
    changed = True
    while changed:
        changed = False
        for comp in list(out.components):
            co = comp.coefficient
            if co.kind != "rational" or co.q == 1:
                continue
            terms = negative_continued_fraction(co.p, co.q)
            # chain: component keeps a_1; u_2 meridian of it with the rest
            out = out.with_coefficient(
                comp.name, SurgeryCoefficient.integer(terms[0]))
            parent = comp.name
            for depth, a in enumerate(terms[1:], start=2):
                mname = f"{comp.name}_m{depth}"
                edge = out.component(parent).edges[0]
                out = insert_ring(out, [edge], mname,
                                  SurgeryCoefficient.integer(a))
                parent = mname
            changed = True
            break
    return out

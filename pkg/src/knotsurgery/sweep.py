"""Morse-sweep compiler for band hooks.

A hook (the band's course at the west station of an annulus presentation)
is a word of core-level events swept west to east.  The sweep frontier is
an ordered list (north to south) of entries:

    "O"      the outer rail (east-bound through-strand)
    "L"      the wrap-lane bundle (all wrap circuits, collapsed)
    "I"      the inner rail (west-bound through-strand)
    branch   one crossing point of the band's core with the sweep line

The band core is an arc from an attachment on the outer rail to one on the
inner rail; the ribbon's two knot strands expand automatically (two per
core branch; the `fwd` strand is oriented along the core).  Events:

    ("attach", "O")              core emerges from the outer gap (first)
    ("attach", "I")              core merges at the inner gap (a branch
                                 must sit adjacent to the inner rail)
    ("cup", pos, top_east, fwd_inner)
                                 westward U-turn: two branches born at pos;
                                 top_east: the upper branch is the
                                 east-oriented one; fwd_inner: the fwd
                                 ribbon side lies on the turn's inside
    ("cap", pos)                 eastward U-turn: adjacent branches join
    ("swap", pos, over)          entry at pos crosses entry at pos+1 (at
                                 least one being a branch); `over` says the
                                 branch at pos passes over
    ("dive", pos)                the branch at pos passes through the lane
                                 bundle next to it as the band's single
                                 ribbon pass; wrap circuits splice here
    ("twist", pos, t)            t full twists of the ribbon at a branch

Planarity is guaranteed by construction (ribbon sub-orders are tracked
through every turn), so crossing signs are forced.  Words are the
versioned transcription format for hooks.
"""

from __future__ import annotations

from .diagram import TwistBox


class SweepError(ValueError):
    pass


class _Branch:
    """One core crossing point; expands to two ribbon strands.

    orient: +1 if the core's forward direction is eastward here.
    fwd_first: True if the fwd strand is the northern one at the sweep
    line.  s_fwd/s_bwd: the strands' open edges.
    """

    __slots__ = ("orient", "fwd_first", "s_fwd", "s_bwd")

    def __init__(self, orient, fwd_first, s_fwd, s_bwd):
        self.orient = orient
        self.fwd_first = fwd_first
        self.s_fwd = s_fwd
        self.s_bwd = s_bwd

    def strands_north_first(self):
        """[(attr, oriented_eastward)] in north-to-south order."""
        fwd = ("s_fwd", self.orient > 0)
        bwd = ("s_bwd", self.orient < 0)
        return [fwd, bwd] if self.fwd_first else [bwd, fwd]


def compile_hook(strip, word):
    """Run a sweep word against the annulus realization state."""
    s = strip
    k = len(s.p.wraps)
    frontier = ["O", "L", "I"]
    branches = {}
    n_branch = 0
    state = {"attached_o": False, "attached_i": False, "dived": False}

    def new_branch(orient, fwd_first, e_fwd, e_bwd):
        nonlocal n_branch
        n_branch += 1
        name = f"br{n_branch}"
        branches[name] = _Branch(orient, fwd_first, e_fwd, e_bwd)
        return name

    def is_branch(x):
        return x in branches

    def emit(over_desc, under_desc):
        """desc = (edge, oriented_along_emission, dir2); returns new edges."""
        (eo, fo, do), (eu, fu, du) = over_desc, under_desc
        no, nu = s.edge(), s.edge()
        det = do[0] * du[1] - do[1] * du[0]
        over_pair = (eo, no) if fo else (no, eo)
        under_pair = (eu, nu) if fu else (nu, eu)
        s.crossing(1 if det > 0 else -1, under_pair, over_pair)
        return no, nu

    def cross_branch_hentry(bname, other, branch_over, going_south):
        """Branch crosses a horizontal through-entry (rail or lanes)."""
        b = branches[bname]
        if other == "L":
            cross_lanes(bname, going_south)
            return
        rail = other
        rdirx = 1 if rail == "O" else -1
        dy = -1 if going_south else 1
        order = b.strands_north_first()
        if going_south:
            order = list(reversed(order))   # western strand first
        for attr, east in order:
            # 2d direction of this strand while moving vertically: the fwd
            # strand moves with the core (0, dy); the bwd strand opposite
            sdy = dy if attr == "s_fwd" else -dy
            e = getattr(b, attr)
            bdesc = (e, attr == "s_fwd", (0, sdy))
            rdesc = (s.cur[rail], rail == "O", (rdirx, 0))
            if branch_over:
                no, nu = emit(bdesc, rdesc)
                setattr(b, attr, no)
                s.cur[rail] = nu
            else:
                no, nu = emit(rdesc, bdesc)
                s.cur[rail] = no
                setattr(b, attr, nu)

    def cross_lanes(bname, going_south, splice=False):
        """The branch crosses every wrap circuit (circuits ride on top).

        With splice=True this is the ribbon pass: each circuit's detour
        strands join the band here instead of crossing it.
        """
        b = branches[bname]
        dy = -1 if going_south else 1
        order = b.strands_north_first()
        if going_south:
            order = list(reversed(order))
        lane_range = list(range(k)) if going_south else \
            list(range(k - 1, -1, -1))
        for attr, _ in order:
            sdy = dy if attr == "s_fwd" else -dy
            v = getattr(b, attr)
            fwd_side = attr == "s_fwd"
            for i in lane_range:
                subs = ("a", "b") if going_south else ("b", "a")
                for sub in subs:
                    lane = f"w{i}{sub}"
                    ldir = s.dirx[lane]
                    if splice and ((fwd_side and sub == "a")
                                   or (not fwd_side and sub == "b")):
                        # the circuit continues the band's strand: hand the
                        # open edge over and pick up the returning one
                        ret = s.cur[lane]
                        s.cur[lane] = v
                        v = ret
                        continue
                    ldesc = (s.cur[lane], ldir > 0, (ldir, 0))
                    vdesc = (v, fwd_side, (0, sdy))
                    nl, nv = emit(ldesc, vdesc)
                    s.cur[lane] = nl
                    v = nv
            setattr(b, attr, v)

    def cross_branch_branch(aname, bname, a_over):
        """Branch a (north) moves south past branch b (which moves north).

        Strand directions are the diagonal tracks of the two cores: a's
        fwd strand heads (orient_a, -1), b's (orient_b, +1), with the bwd
        strands opposite.
        """
        A, B = branches[aname], branches[bname]
        a_order = list(reversed(A.strands_north_first()))  # west first
        b_order = B.strands_north_first()                  # met north first
        for attr_a, _ in a_order:
            a_fwd = attr_a == "s_fwd"
            a_dir = (A.orient, -1) if a_fwd else (-A.orient, 1)
            for attr_b, east_b in b_order:
                b_fwd = attr_b == "s_fwd"
                b_dir = (B.orient, 1) if b_fwd else (-B.orient, -1)
                ea, eb = getattr(A, attr_a), getattr(B, attr_b)
                adesc = (ea, a_fwd, a_dir)
                bdesc = (eb, east_b, b_dir)
                if a_over:
                    na, nb = emit(adesc, bdesc)
                else:
                    nb, na = emit(bdesc, adesc)
                setattr(A, attr_a, na)
                setattr(B, attr_b, nb)

    for ev in word:
        kind = ev[0]
        if kind == "attach":
            rail = ev[1]
            if rail == "O":
                if state["attached_o"]:
                    raise SweepError("outer attachment already made")
                state["attached_o"] = True
                pos = frontier.index("O")
                e_fwd = s.cur["O"]
                e_bwd = s.edge()
                s.cur["O"] = e_bwd
                # leaving the gap eastward: side 2 (bwd) is the northern
                # strand (it attaches at the gap's east point)
                name = new_branch(+1, False, e_fwd, e_bwd)
                frontier.insert(pos + 1, name)
            else:
                if state["attached_i"] or not state["attached_o"]:
                    raise SweepError("inner attachment out of order")
                pos = frontier.index("I")
                cand = None
                if pos - 1 >= 0 and is_branch(frontier[pos - 1]):
                    cand = pos - 1
                if cand is None:
                    raise SweepError("no branch adjacent to the inner rail")
                name = frontier.pop(cand)
                b = branches.pop(name)
                if b.fwd_first:
                    raise SweepError("inner attachment needs side 1 on the "
                                     "gap side")
                state["attached_i"] = True
                s.splices.append((b.s_fwd, s.cur["I"]))
                s.cur["I"] = b.s_bwd
        elif kind == "cup":
            _, pos, top_east, fwd_inner = ev
            if not (0 <= pos <= len(frontier)):
                raise SweepError("cup position out of range")
            e_in, e_out = s.edge(), s.edge()
            # inner strands join around the turn (the upper branch's south
            # strand continues the lower branch's north strand)
            if fwd_inner:
                up = _Branch(+1 if top_east else -1, False, e_in, e_out)
                dn = _Branch(-1 if top_east else +1, True, e_in, e_out)
            else:
                up = _Branch(+1 if top_east else -1, True, e_out, e_in)
                dn = _Branch(-1 if top_east else +1, False, e_out, e_in)
            nm_up = new_branch(up.orient, up.fwd_first, up.s_fwd, up.s_bwd)
            nm_dn = new_branch(dn.orient, dn.fwd_first, dn.s_fwd, dn.s_bwd)
            frontier.insert(pos, nm_dn)
            frontier.insert(pos, nm_up)
        elif kind == "cap":
            _, pos = ev
            a, b = frontier[pos], frontier[pos + 1]
            if not (is_branch(a) and is_branch(b)):
                raise SweepError("cap needs two adjacent branches")
            A, B = branches[a], branches[b]
            if A.orient == B.orient:
                raise SweepError("cap needs opposite orientations")
            # inner strands (A's south, B's north) must be the same ribbon
            # side, and likewise the outer ones
            a_south = "s_bwd" if A.fwd_first else "s_fwd"
            b_north = "s_fwd" if B.fwd_first else "s_bwd"
            if (a_south == "s_fwd") != (b_north == "s_fwd"):
                raise SweepError("cap would glue the ribbon into a Moebius "
                                 "band")
            a_north = "s_fwd" if A.fwd_first else "s_bwd"
            b_south = "s_bwd" if B.fwd_first else "s_fwd"
            s.splices.append((getattr(A, a_south), getattr(B, b_north)))
            s.splices.append((getattr(A, a_north), getattr(B, b_south)))
            branches.pop(a)
            branches.pop(b)
            del frontier[pos:pos + 2]
        elif kind == "swap":
            _, pos, over = ev
            a, b = frontier[pos], frontier[pos + 1]
            if is_branch(a) and is_branch(b):
                cross_branch_branch(a, b, over)
            elif is_branch(a):
                cross_branch_hentry(a, b, over, going_south=True)
            elif is_branch(b):
                cross_branch_hentry(b, a, over, going_south=False)
            else:
                raise SweepError("swap needs a core branch")
            frontier[pos], frontier[pos + 1] = b, a
        elif kind == "dive":
            _, pos = ev
            name = frontier[pos]
            if not is_branch(name):
                raise SweepError("dive needs a core branch")
            if state["dived"]:
                raise SweepError("only one ribbon pass is allowed")
            if pos + 1 < len(frontier) and frontier[pos + 1] == "L":
                going_south = True
                q = pos + 1
            elif pos - 1 >= 0 and frontier[pos - 1] == "L":
                going_south = False
                q = pos - 1
            else:
                raise SweepError("dive must be adjacent to the lane bundle")
            state["dived"] = True
            cross_lanes(name, going_south, splice=True)
            frontier[pos], frontier[q] = frontier[q], frontier[pos]
        elif kind == "twist":
            _, pos, t = ev
            name = frontier[pos]
            if not is_branch(name):
                raise SweepError("twist needs a core branch")
            b = branches[name]
            s.n_x += 1
            bid = f"sw{s.n_x}"
            n_fwd, n_bwd = s.edge(), s.edge()
            north, south = b.strands_north_first()
            cur_n = getattr(b, north[0])
            cur_s = getattr(b, south[0])
            new_n = n_fwd if north[0] == "s_fwd" else n_bwd
            new_s = n_bwd if north[0] == "s_fwd" else n_fwd
            s.boxes[bid] = TwistBox(bid, t, (cur_n, cur_s), (new_n, new_s),
                                    (north[1], south[1]))
            b.s_fwd, b.s_bwd = n_fwd, n_bwd
        else:
            raise SweepError(f"unknown event {kind}")

    if not (state["attached_o"] and state["attached_i"]):
        raise SweepError("both attachments are required")
    if branches:
        raise SweepError("unclosed core branches remain")
    if k and not state["dived"]:
        raise SweepError("wraps need a ribbon pass to splice into")
    if k and "L" not in frontier:
        raise SweepError("lane bundle lost")

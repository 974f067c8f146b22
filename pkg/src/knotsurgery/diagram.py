"""Oriented link diagrams with twist boxes and rational surgery coefficients.

A diagram is a 4-valent map: crossings carry a sign and four oriented edge
ends, twist boxes carry an integer number of full twists on a parallel cable
of any width, and free loops are crossingless circles.  Edges are opaque
string ids; every edge occurs exactly once as an in-port and once as an
out-port (closed 1-manifold condition), except free loops which have no
ports.  Components are traced at construction and carry an optional surgery
coefficient.

Crossing conventions follow the usual PD ones: slots 0..3 counterclockwise
with slot 0 the incoming under-edge; a crossing is positive when the
over-strand runs slot 3 -> slot 1 (rotating the under direction clockwise by
90 degrees gives the over direction).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd


# ---------------------------------------------------------------------------
# surgery coefficients


@dataclass(frozen=True)
class SurgeryCoefficient:
    """p/q in lowest terms with q >= 0, or infinity (1/0), or asterisk."""

    kind: str  # "rational" | "infinity" | "asterisk"
    p: int = 0
    q: int = 1

    @staticmethod
    def rational(p, q=1):
        if q == 0:
            return SurgeryCoefficient("infinity")
        if q < 0:
            p, q = -p, -q
        g = gcd(p, q)
        return SurgeryCoefficient("rational", p // g, q // g)

    @staticmethod
    def integer(n):
        return SurgeryCoefficient.rational(int(n), 1)

    @staticmethod
    def infinity():
        return SurgeryCoefficient("infinity")

    @staticmethod
    def asterisk():
        return SurgeryCoefficient("asterisk")

    @staticmethod
    def parse(text):
        text = str(text).strip()
        if text in ("*", "ast", "asterisk"):
            return SurgeryCoefficient.asterisk()
        if text in ("inf", "infinity", "1/0"):
            return SurgeryCoefficient.infinity()
        if "/" in text:
            p, q = text.split("/")
            return SurgeryCoefficient.rational(int(p), int(q))
        return SurgeryCoefficient.integer(int(text))

    def negated(self):
        if self.kind == "rational":
            return SurgeryCoefficient.rational(-self.p, self.q)
        return self

    def plus_int(self, n):
        """Add an integer to a rational slope: p/q + n = (p + n q)/q."""
        if self.kind != "rational":
            raise ValueError(f"cannot shift a {self.kind} coefficient")
        return SurgeryCoefficient.rational(self.p + n * self.q, self.q)

    def is_integer(self):
        return self.kind == "rational" and self.q == 1

    def __str__(self):
        if self.kind == "asterisk":
            return "*"
        if self.kind == "infinity":
            return "inf"
        return f"{self.p}/{self.q}"


# ---------------------------------------------------------------------------
# diagram pieces


@dataclass(frozen=True)
class Crossing:
    """Signed crossing; under/over are (incoming, outgoing) edge ids."""

    id: str
    sign: int
    under: tuple
    over: tuple

    def rotation(self):
        """Edge ends in CCW cyclic order as (edge, is_incoming) pairs."""
        ui, uo = self.under
        oi, oo = self.over
        if self.sign > 0:
            return ((ui, True), (oo, False), (uo, False), (oi, True))
        return ((ui, True), (oi, True), (uo, False), (oo, False))

    def mirrored(self):
        return Crossing(self.id, -self.sign, self.over, self.under)


@dataclass(frozen=True)
class TwistBox:
    """`param` full twists on a parallel cable.

    bottom/top are edge ids position by position (strand i runs between
    bottom[i] and top[i]; full twists induce the identity permutation).
    up[i] says whether strand i is oriented bottom -> top.  param > 0 means
    right-handed full twists.
    """

    id: str
    param: int
    bottom: tuple
    top: tuple
    up: tuple

    @property
    def width(self):
        return len(self.bottom)

    def rotation(self):
        ends = []
        for e, u in zip(self.bottom, self.up):
            ends.append((e, bool(u)))
        for e, u in zip(reversed(self.top), reversed(self.up)):
            ends.append((e, not u))
        return tuple(ends)

    def mirrored(self):
        return TwistBox(self.id, -self.param, self.bottom, self.top, self.up)


@dataclass(frozen=True)
class Component:
    name: str
    edges: tuple  # oriented cycle of edge ids
    coefficient: SurgeryCoefficient

    def with_coefficient(self, coeff):
        return Component(self.name, self.edges, coeff)


@dataclass
class ValidationReport:
    issues: list

    def ok(self):
        return not self.issues

    def __str__(self):
        return "valid" if self.ok() else "; ".join(self.issues)


class DiagramError(ValueError):
    pass


class SameComponent(DiagramError):
    pass


# ---------------------------------------------------------------------------


class Diagram:
    """Immutable-by-convention link diagram; rewrites return new diagrams."""

    def __init__(self, crossings, boxes, free_loops, components):
        self.crossings = dict(crossings)
        self.boxes = dict(boxes)
        self.free_loops = tuple(free_loops)
        self.components = list(components)
        self._heads = None
        self._tails = None

    # -- port maps ---------------------------------------------------------

    def _port_maps(self):
        if self._heads is not None:
            return self._heads, self._tails
        heads, tails = {}, {}

        def set_once(m, e, v, what):
            if e in m:
                raise DiagramError(f"edge {e} has two {what}s")
            m[e] = v

        for c in self.crossings.values():
            set_once(heads, c.under[0], ("x", c.id, "u"), "head")
            set_once(tails, c.under[1], ("x", c.id, "u"), "tail")
            set_once(heads, c.over[0], ("x", c.id, "o"), "head")
            set_once(tails, c.over[1], ("x", c.id, "o"), "tail")
        for b in self.boxes.values():
            for i in range(b.width):
                lo, hi = b.bottom[i], b.top[i]
                if b.up[i]:
                    set_once(heads, lo, ("b", b.id, i), "head")
                    set_once(tails, hi, ("b", b.id, i), "tail")
                else:
                    set_once(heads, hi, ("b", b.id, i), "head")
                    set_once(tails, lo, ("b", b.id, i), "tail")
        self._heads, self._tails = heads, tails
        return heads, tails

    def successor(self, edge):
        heads, _ = self._port_maps()
        if edge in heads:
            kind, oid, role = heads[edge]
            if kind == "x":
                c = self.crossings[oid]
                return c.under[1] if role == "u" else c.over[1]
            b = self.boxes[oid]
            i = role
            return b.bottom[i] if not b.up[i] else b.top[i]
        if edge in self.free_loops:
            return edge
        raise DiagramError(f"edge {edge} has no head port")

    def trace_component(self, start_edge):
        cycle = [start_edge]
        e = self.successor(start_edge)
        while e != start_edge:
            cycle.append(e)
            e = self.successor(e)
        return tuple(cycle)

    def all_edges(self):
        heads, tails = self._port_maps()
        return set(heads) | set(tails) | set(self.free_loops)

    # -- construction helper -------------------------------------------------

    @staticmethod
    def assemble(crossings, boxes, free_loops, names=None, coefficients=None):
        """Trace components and attach names/coefficients.

        names maps a representative edge id -> component name; coefficients
        maps component name -> SurgeryCoefficient (default asterisk-free
        integer surgery is NOT assumed: unnamed coefficients are asterisk).
        """
        d = Diagram(crossings, boxes, free_loops, [])
        names = dict(names or {})
        coefficients = dict(coefficients or {})
        seen = set()
        comps = []
        auto = 0
        for e in sorted(d.all_edges()):
            if e in seen:
                continue
            cyc = d.trace_component(e)
            seen.update(cyc)
            name = None
            for ce in cyc:
                if ce in names:
                    name = names[ce]
                    break
            if name is None:
                name = f"K{auto}"
                auto += 1
            coeff = coefficients.get(name, SurgeryCoefficient.asterisk())
            comps.append(Component(name, cyc, coeff))
        d.components = comps
        return d

    # -- lookups -------------------------------------------------------------

    def component_of_edge(self):
        m = {}
        for k, comp in enumerate(self.components):
            for e in comp.edges:
                m[e] = k
        return m

    def component(self, name):
        for comp in self.components:
            if comp.name == name:
                return comp
        raise DiagramError(f"no component named {name}")

    def component_index(self, name):
        for k, comp in enumerate(self.components):
            if comp.name == name:
                return k
        raise DiagramError(f"no component named {name}")

    def with_coefficient(self, name, coeff):
        if isinstance(coeff, str):
            coeff = SurgeryCoefficient.parse(coeff)
        comps = [c.with_coefficient(coeff) if c.name == name else c
                 for c in self.components]
        return Diagram(self.crossings, self.boxes, self.free_loops, comps)

    def rebuilt(self, crossings=None, boxes=None, free_loops=None,
                names=None, coefficients=None):
        """Re-trace after a rewrite, inheriting names/coefficients by edge."""
        old_names = {}
        old_coeffs = {}
        for comp in self.components:
            old_coeffs[comp.name] = comp.coefficient
            for e in comp.edges:
                old_names[e] = comp.name
        if names:
            old_names.update(names)
        if coefficients:
            old_coeffs.update(coefficients)
        return Diagram.assemble(
            crossings if crossings is not None else self.crossings,
            boxes if boxes is not None else self.boxes,
            free_loops if free_loops is not None else self.free_loops,
            names=old_names, coefficients=old_coeffs)

    # -- validation ----------------------------------------------------------

    def validate(self):
        issues = []
        heads, tails = {}, {}
        try:
            heads, tails = self._port_maps()
        except DiagramError as exc:
            issues.append(str(exc))
            return ValidationReport(issues)
        for e in set(heads) | set(tails):
            if e not in heads:
                issues.append(f"edge {e} used once (missing head)")
            if e not in tails:
                issues.append(f"edge {e} used once (missing tail)")
        for e in self.free_loops:
            if e in heads or e in tails:
                issues.append(f"free loop {e} also attached to a port")
        for b in self.boxes.values():
            if not (len(b.bottom) == len(b.top) == len(b.up)):
                issues.append(f"box {b.id} has mismatched port widths")
        if issues:
            return ValidationReport(issues)
        # orientation consistency: components must trace to disjoint cycles
        seen = {}
        for comp in self.components:
            for e in comp.edges:
                if e in seen:
                    issues.append(
                        f"edge {e} in components {seen[e]} and {comp.name}")
                seen[e] = comp.name
        missing = self.all_edges() - set(seen)
        if missing:
            issues.append(f"edges not in any component: {sorted(missing)}")
        for comp in self.components:
            if not comp.edges:
                issues.append(f"component {comp.name} has no edges")
                continue
            if self.trace_component(comp.edges[0]) != tuple(comp.edges):
                issues.append(f"component {comp.name} does not trace closed")
        return ValidationReport(issues)

    # -- basic invariants ------------------------------------------------------

    def crossing_count(self):
        return len(self.crossings)

    def _box_multiplicities(self, box):
        """Per-component algebraic strand counts through a box."""
        owner = self.component_of_edge()
        mult = {}
        geo = {}
        for i in range(box.width):
            k = owner[box.bottom[i]]
            mult[k] = mult.get(k, 0) + (1 if box.up[i] else -1)
            geo[k] = geo.get(k, 0) + 1
        return mult, geo

    def linking_number(self, name1, name2):
        """Half the signed crossing sum between two distinct components."""
        i1, i2 = self.component_index(name1), self.component_index(name2)
        if i1 == i2:
            raise SameComponent(f"{name1} and {name2} are the same component")
        owner = self.component_of_edge()
        total = 0
        for c in self.crossings.values():
            ku, ko = owner[c.under[0]], owner[c.over[0]]
            if {ku, ko} == {i1, i2}:
                total += c.sign
        if total % 2:
            raise DiagramError("odd inter-component crossing sum")
        lk = total // 2
        for b in self.boxes.values():
            mult, _ = self._box_multiplicities(b)
            lk += b.param * mult.get(i1, 0) * mult.get(i2, 0)
        return lk

    def writhe(self, name):
        k = self.component_index(name)
        owner = self.component_of_edge()
        w = 0
        for c in self.crossings.values():
            if owner[c.under[0]] == k and owner[c.over[0]] == k:
                w += c.sign
        for b in self.boxes.values():
            mult, geo = self._box_multiplicities(b)
            m, g = mult.get(k, 0), geo.get(k, 0)
            w += b.param * (m * m - g)
        return w

    # -- global rewrites -------------------------------------------------------

    def mirror(self):
        crossings = {cid: c.mirrored() for cid, c in self.crossings.items()}
        boxes = {bid: b.mirrored() for bid, b in self.boxes.items()}
        comps = [Component(c.name, c.edges, c.coefficient.negated())
                 for c in self.components]
        return Diagram(crossings, boxes, self.free_loops, comps)

    def expand_twist_boxes(self):
        """Replace every twist box by explicit crossings.

        A box with parameter T on w strands expands to |T| * w * (w-1)
        crossings (2|T| when w = 2), all induced by the braid word
        (sigma_1 ... sigma_{w-1})^{w |T|} with handedness sign(T); T = 0 or
        w < 2 boxes become parallel strands.
        """
        crossings = dict(self.crossings)
        fresh = _FreshNames("xe", self.all_edges(),
                            set(crossings) | set(self.boxes))
        splices = []  # (edge_kept, edge_replaced)
        for b in self.boxes.values():
            if b.param == 0 or b.width < 2:
                for lo, hi in zip(b.bottom, b.top):
                    splices.append((lo, hi))
                continue
            w = b.width
            h = 1 if b.param > 0 else -1
            strands = list(range(w))  # strand index occupying each position
            cur = {i: b.bottom[i] for i in range(w)}  # strand -> current edge
            word = []
            for _ in range(w * abs(b.param)):
                word.extend(range(w - 1))
            for pos in word:
                s_left, s_right = strands[pos], strands[pos + 1]
                # right-handed steps put the left strand on top
                s_over, s_under = (s_left, s_right) if h > 0 else (s_right,
                                                                   s_left)
                new = {s_left: fresh.edge(), s_right: fresh.edge()}

                def pair(s):
                    return (cur[s], new[s]) if b.up[s] else (new[s], cur[s])

                def direction(s):
                    rightward = 1 if s == s_left else -1
                    return ((rightward, 1) if b.up[s]
                            else (-rightward, -1))

                od, ud = direction(s_over), direction(s_under)
                det = od[0] * ud[1] - od[1] * ud[0]
                cid = fresh.crossing()
                crossings[cid] = Crossing(cid, 1 if det > 0 else -1,
                                          pair(s_under), pair(s_over))
                cur[s_left], cur[s_right] = new[s_left], new[s_right]
                strands[pos], strands[pos + 1] = s_right, s_left
            # full twists are pure: strand i must end at position i
            for i in range(w):
                assert strands[i] == i, "full twist is not a pure braid?"
                splices.append((b.top[i], cur[i]))
        crossings, find = _splice_edges(crossings, splices, with_find=True)
        # strands of removed boxes with no remaining ports are free loops
        used = set()
        for c in crossings.values():
            used.update(c.under)
            used.update(c.over)
        loops = {find(e) for e in self.free_loops}
        for b in self.boxes.values():
            for e in b.bottom:
                r = find(e)
                if r not in used:
                    loops.add(r)
        return self.rebuilt(crossings=crossings, boxes={},
                            free_loops=tuple(sorted(loops)))

    def normalize_boxes(self):
        """Drop trivial twist boxes and merge directly stacked ones."""
        d = self
        while True:
            # trivial boxes become parallel strands
            trivial = [b for b in d.boxes.values()
                       if b.param == 0 or b.width < 2]
            if trivial:
                b = trivial[0]
                boxes = dict(d.boxes)
                del boxes[b.id]
                splices = list(zip(b.bottom, b.top))
                crossings, find = _splice_edges(d.crossings, splices,
                                                with_find=True)
                boxes = {bid: TwistBox(bid, x.param,
                                       tuple(find(e) for e in x.bottom),
                                       tuple(find(e) for e in x.top), x.up)
                         for bid, x in boxes.items()}
                used = set()
                for c in crossings.values():
                    used.update(c.under)
                    used.update(c.over)
                for x in boxes.values():
                    used.update(x.bottom)
                    used.update(x.top)
                loops = {find(e) for e in d.free_loops}
                for e in b.bottom:
                    if find(e) not in used:
                        loops.add(find(e))
                d = d.rebuilt(crossings=crossings, boxes=boxes,
                              free_loops=tuple(sorted(loops)))
                continue
            merged = False
            for b in d.boxes.values():
                for b2 in d.boxes.values():
                    if b.id != b2.id and b.top == b2.bottom and b.up == b2.up:
                        boxes = dict(d.boxes)
                        del boxes[b.id], boxes[b2.id]
                        boxes[b.id] = TwistBox(b.id, b.param + b2.param,
                                               b.bottom, b2.top, b.up)
                        d = d.rebuilt(boxes=boxes)
                        merged = True
                        break
                if merged:
                    break
            if not merged:
                return d

    # -- serialization ---------------------------------------------------------

    def to_json_obj(self):
        return {
            "crossings": [
                {"id": c.id, "sign": c.sign,
                 "under": list(c.under), "over": list(c.over)}
                for _, c in sorted(self.crossings.items())
            ],
            "twist_boxes": [
                {"id": b.id, "param": b.param, "bottom": list(b.bottom),
                 "top": list(b.top), "up": [bool(u) for u in b.up]}
                for _, b in sorted(self.boxes.items())
            ],
            "free_loops": list(self.free_loops),
            "components": [
                {"name": c.name, "edges": list(c.edges),
                 "coefficient": str(c.coefficient)}
                for c in self.components
            ],
        }

    def to_json(self):
        return json.dumps(self.to_json_obj(), sort_keys=True,
                          separators=(",", ":"))

    @staticmethod
    def from_json_obj(obj):
        crossings = {
            c["id"]: Crossing(c["id"], int(c["sign"]),
                              tuple(c["under"]), tuple(c["over"]))
            for c in obj.get("crossings", [])
        }
        boxes = {
            b["id"]: TwistBox(b["id"], int(b["param"]), tuple(b["bottom"]),
                              tuple(b["top"]), tuple(bool(u) for u in b["up"]))
            for b in obj.get("twist_boxes", [])
        }
        names, coeffs = {}, {}
        for c in obj.get("components", []):
            names[c["edges"][0]] = c["name"]
            coeffs[c["name"]] = SurgeryCoefficient.parse(c["coefficient"])
        return Diagram.assemble(crossings, boxes,
                                obj.get("free_loops", []), names, coeffs)

    @staticmethod
    def from_json(text):
        return Diagram.from_json_obj(json.loads(text))

    # -- canonical form ---------------------------------------------------------

    def canonical_json(self):
        """Deterministic serialization invariant under edge relabeling.

        Components are sorted by an invariant key; within each component the
        traversal starts at the basepoint edge minimizing the local signature
        sequence.  Twist boxes are kept (normalize separately if needed).
        """
        heads, _ = self._port_maps()
        owner = self.component_of_edge()

        def local_sig(edge):
            if edge in heads:
                kind, oid, role = heads[edge]
                if kind == "x":
                    c = self.crossings[oid]
                    return ("x", c.sign, "u" if role == "u" else "o",
                            owner[c.under[0]], owner[c.over[0]])
                b = self.boxes[oid]
                return ("b", b.param, b.width, role)
            return ("loop",)

        comp_sigs = []
        for comp in self.components:
            sig = tuple(local_sig(e) for e in comp.edges)
            rotations = [tuple(sig[i:] + sig[:i]) for i in range(len(sig))]
            best = min(range(len(sig)), key=lambda i: rotations[i])
            comp_sigs.append((str(comp.coefficient), len(comp.edges),
                              rotations[best], comp.name, comp.edges[best:]
                              + comp.edges[:best]))
        comp_sigs.sort(key=lambda t: t[:3])

        relabel = {}
        for k, (_, _, _, _, cyc) in enumerate(comp_sigs):
            for j, e in enumerate(cyc):
                relabel[e] = f"e{k}_{j}"

        def r(e):
            return relabel[e]

        crossings = {}
        for c in self.crossings.values():
            cid = min(r(c.under[0]), r(c.over[0]))
            crossings["x" + cid] = Crossing(
                "x" + cid, c.sign,
                (r(c.under[0]), r(c.under[1])), (r(c.over[0]), r(c.over[1])))
        boxes = {}
        for b in self.boxes.values():
            bid = "t" + min(r(e) for e in b.bottom)
            boxes[bid] = TwistBox(bid, b.param, tuple(r(e) for e in b.bottom),
                                  tuple(r(e) for e in b.top), b.up)
        comps = []
        for k, (coeff, _, _, name, cyc) in enumerate(comp_sigs):
            comps.append({"edges": [r(e) for e in cyc], "coefficient": coeff})
        obj = {
            "crossings": [
                {"id": c.id, "sign": c.sign, "under": list(c.under),
                 "over": list(c.over)}
                for _, c in sorted(crossings.items())],
            "twist_boxes": [
                {"id": b.id, "param": b.param, "bottom": list(b.bottom),
                 "top": list(b.top), "up": [bool(u) for u in b.up]}
                for _, b in sorted(boxes.items())],
            "free_loops": [f"loop{i}" for i in range(len(self.free_loops))],
            "components": comps,
        }
        return json.dumps(obj, sort_keys=True, separators=(",", ":"))

    def canonically_equal(self, other):
        a = self.normalize_boxes()
        b = other.normalize_boxes()
        return a.canonical_json() == b.canonical_json()


# ---------------------------------------------------------------------------
# helpers


class _FreshNames:
    def __init__(self, prefix, used_edges, used_nodes):
        self.prefix = prefix
        self.used_edges = set(used_edges)
        self.used_nodes = set(used_nodes)
        self.n = 0

    def edge(self):
        while True:
            e = f"{self.prefix}{self.n}"
            self.n += 1
            if e not in self.used_edges:
                self.used_edges.add(e)
                return e

    def crossing(self):
        while True:
            c = f"{self.prefix}x{self.n}"
            self.n += 1
            if c not in self.used_nodes:
                self.used_nodes.add(c)
                return c


def _splice_edges(crossings, splices, with_find=False):
    """Rename edges so each (keep, drop) pair becomes a single edge."""
    parent = {}

    def find(e):
        root = e
        while root in parent:
            root = parent[root]
        while e in parent:
            parent[e], e = root, parent[e]
        return root

    for a, b in splices:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    out = {cid: Crossing(cid, c.sign,
                         (find(c.under[0]), find(c.under[1])),
                         (find(c.over[0]), find(c.over[1])))
           for cid, c in crossings.items()}
    if with_find:
        return out, find
    return out


# ---------------------------------------------------------------------------
# builder


class DiagramBuilder:
    """Imperative construction of diagrams; edges are created on demand."""

    def __init__(self):
        self.crossings = {}
        self.boxes = {}
        self.free_loops = []
        self.names = {}
        self.coefficients = {}
        self._n = 0

    def edge(self, label=None):
        self._n += 1
        return label or f"e{self._n}"

    def edges(self, k):
        return [self.edge() for _ in range(k)]

    def crossing(self, sign, under, over, cid=None):
        cid = cid or f"x{len(self.crossings)}"
        self.crossings[cid] = Crossing(cid, sign, tuple(under), tuple(over))
        return cid

    def box(self, param, bottom, top, up, bid=None):
        bid = bid or f"b{len(self.boxes)}"
        self.boxes[bid] = TwistBox(bid, param, tuple(bottom), tuple(top),
                                   tuple(bool(u) for u in up))
        return bid

    def loop(self, name=None, coefficient=None):
        e = self.edge()
        self.free_loops.append(e)
        if name:
            self.names[e] = name
            if coefficient is not None:
                self.coefficients[name] = _coeff(coefficient)
        return e

    def name_component(self, edge, name, coefficient=None):
        self.names[edge] = name
        if coefficient is not None:
            self.coefficients[name] = _coeff(coefficient)

    def ring_through(self, cable, name, coefficient="*", positive=True):
        """Add an unknotted ring component encircling the given cable.

        cable: ordered left-to-right list of (in_edge, out_edge, up) triples
        for the parallel vertical strands the ring passes around; the caller
        leaves a gap in each strand (in_edge dangling head, out_edge dangling
        tail) and this method bridges it with two crossings per strand.

        Drawn with the top arc of the ring in front: the ring passes over
        every strand on its top arc (traversed left to right) and under on
        the bottom arc (right to left).  With positive=True an upward strand
        links the ring +1; positive=False reverses the ring's orientation.
        """
        w = len(cable)
        if w == 0:
            e = self.edge()
            self.free_loops.append(e)
            self.names[e] = name
            self.coefficients[name] = _coeff(coefficient)
            return
        r = [self.edge() for _ in range(2 * w)]  # ring cycle edges
        mids = [self.edge() for _ in range(w)]

        def ring_pair(idx):
            a, b = r[idx], r[(idx + 1) % (2 * w)]
            return (a, b) if positive else (b, a)

        for i, (e_in, e_out, up) in enumerate(cable):
            # segment order along the strand: up-strands hit the bottom arc
            # first, down-strands the top arc first
            bot_pair = (e_in, mids[i]) if up else (mids[i], e_out)
            top_pair = (mids[i], e_out) if up else (e_in, mids[i])
            dir_sign = 1 if up else -1
            sign = dir_sign if positive else -dir_sign
            # top arc: ring over strand; ring edge index i along top
            self.crossing(sign, under=top_pair, over=ring_pair(i))
            # bottom arc: strand over ring; bottom arc visits strands in
            # right-to-left order, so strand i is the (w-1-i)-th crossing
            self.crossing(sign, under=ring_pair(w + (w - 1 - i)),
                          over=bot_pair)
        self.names[r[0]] = name
        self.coefficients[name] = _coeff(coefficient)

    def split_edge_gap(self, diagram_edge):
        """Reserve names for splitting an existing edge (helper for rewrites)."""
        return self.edge(), self.edge()

    def build(self):
        return Diagram.assemble(self.crossings, self.boxes, self.free_loops,
                                self.names, self.coefficients)


def _coeff(c):
    if isinstance(c, SurgeryCoefficient):
        return c
    return SurgeryCoefficient.parse(str(c))

"""Generators for the two knot families and their verification bundles.

The second family comes from iterating the composite twist operation on the
seeded annulus presentation; the first family is carried by the fixed
four-component link transcription below: two concentric circles cobounding
a flat annulus, the linking circle clasping the annulus cross-section (and
one strand of the knot), and the knot component weaving through the annulus
twice in staples that meet it algebraically zero, geometrically four times.
The transcription is locked by the quoted linking numbers and the first
homology of its surgeries rather than by picture fidelity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .alexander import alexander_polynomial, is_monic
from .annulus import (AnnulusPresentation, classify_arcs, is_good,
                      op_star_n, predict_degree, realize_knot)
from .diagram import (Crossing, Diagram, DiagramError, SurgeryCoefficient)
from .kirby import h1, expand_rational
from .snf import AbelianGroup


class DegreeViolation(DiagramError):
    pass


# ---------------------------------------------------------------------------
# the four-component surgery link


def surgery_link(alpha="*", beta="*", delta="*", gamma="*") -> Diagram:
    """The link [k, l1, l2, l3] with the given surgery coefficients.

    l1 and l2 cobound the flat annulus (concentric, linking number zero);
    l3 is the linking circle around the cross-section cable [l1, k, l2];
    k weaves through the annulus in two double-point staples (algebraic
    intersection zero) and once through the linking circle.
    """
    X = {}

    def cross(cid, sign, under, over):
        X[cid] = Crossing(cid, sign, under, over)

    # k x l1 staples: two staples, each a pair of opposite-sign crossings
    # with k passing over l1 (southbound then northbound)
    # l1 cycle: m0 -A1- m1 -B1- m2 -A2- m3 -B2- m4 - [ring] - m0
    # k cycle:  k0 -A1- k1 -B1- k2 -A2- k3 -B2- k4 - [ring] - k0
    cross("s1a", 1, ("m0", "m1"), ("k0", "k1"))
    cross("s1b", -1, ("m1", "m2"), ("k1", "k2"))
    cross("s2a", 1, ("m2", "m3"), ("k2", "k3"))
    cross("s2b", -1, ("m3", "m4"), ("k3", "k4"))

    # the linking circle l3: ring around the cable [l1, k, l2], all three
    # passing in the +1 direction (the ring's top arc in front)
    ring = [f"r{i}" for i in range(6)]
    cable = [("m4", "m0", "mid_l1"), ("k4", "k0", "mid_k"),
             ("e2", "e2", "mid_l2")]
    for i, (e_in, e_out, mid) in enumerate(cable):
        cross(f"ring_top{i}", 1, (mid, e_out), (ring[i], ring[(i + 1) % 6]))
        j = 3 + (2 - i)
        cross(f"ring_bot{i}", 1, (ring[j], ring[(j + 1) % 6]),
              (e_in, mid))

    names = {"k0": "k", "m0": "l1", "e2": "l2", "r0": "l3"}
    coeffs = {"k": SurgeryCoefficient.parse(alpha),
              "l1": SurgeryCoefficient.parse(beta),
              "l2": SurgeryCoefficient.parse(delta),
              "l3": SurgeryCoefficient.parse(gamma)}
    return Diagram.assemble(X, {}, [], names=names, coefficients=coeffs)


def generate_k(n, m):
    """The first-family knot as a link in the surgered sphere, plus its
    companion surgery description of the n-surgered manifold.

    Returns (knot_form, companion): coefficients (*, -1/m, 1/m, -1/n) and
    (0/1, -1/m, 1/m, -1/n).
    """
    def frac(p, q):
        return f"{p}/{q}"

    knot = surgery_link("*", frac(-1, m) if m else "inf",
                        frac(1, m) if m else "inf",
                        frac(-1, n) if n else "inf")
    companion = surgery_link("0/1", frac(-1, m) if m else "inf",
                             frac(1, m) if m else "inf",
                             frac(-1, n) if n else "inf")
    return knot, companion


def twisted_rail_linking(n):
    """lk(l1, l2) after -1/n surgery on the linking circle.

    Blows the linking circle down (inserting n full right-handed twists on
    its cable) and reads the linking number off the twisted diagram.
    """
    from .kirby import blow_down, delete_component
    d = surgery_link("*", "*", "*", f"-1/{n}" if n else "inf")
    if n == 0:
        d = delete_component(d, "l3")
    else:
        d = blow_down(d, "l3")
    return d.linking_number("l1", "l2")


# ---------------------------------------------------------------------------
# the second family


_SEED_CACHE = {}


def load_seed(name="seed_8_20"):
    """The seeded annulus presentation from the versioned data file."""
    if name not in _SEED_CACHE:
        text = resources.files("knotsurgery.data").joinpath(
            f"{name}.json").read_text()
        data = json.loads(text)
        _SEED_CACHE[name] = AnnulusPresentation.from_json(data["presentation"])
    return _SEED_CACHE[name]


def generate_J_presentation(n, i, seed=None):
    """The i-th iterate of the composite twist operation on the seed."""
    p = seed or load_seed()
    for _ in range(i):
        p = op_star_n(p, n)
    return p


def generate_J(n, i, seed=None, crossing_limit=10000) -> Diagram:
    """Diagram of the i-th member of the second family."""
    p = generate_J_presentation(n, i, seed=seed)
    d = realize_knot(p)
    total = sum(abs(b.param) * b.width * (b.width - 1)
                for b in d.boxes.values()) + len(d.crossings)
    if total > crossing_limit:
        raise DiagramError(
            f"member (n={n}, i={i}) needs ~{total} crossings; "
            f"raise crossing_limit to force it")
    return d


@dataclass
class FamilyReport:
    kind: str
    n: int
    rows: list  # dicts: index, degree, monic, h1, method

    def to_json(self):
        return {"kind": self.kind, "n": self.n, "rows": self.rows}

    def degrees(self):
        return [r["degree"] for r in self.rows]


def distinctness_report(kind, n, count, seed=None,
                        oracle_crossing_budget=4000) -> FamilyReport:
    """Degrees, monicity and surgery homology of the first `count` members.

    kind "J" needs n >= 1; "mirror_J" needs n <= -1 (members are mirrors
    and the framing is negated).  The first family is refused: no
    desk-scale distinctness certificate exists for it.
    """
    if kind == "k_family":
        raise DiagramError(
            "the first family is distinguished by hyperbolic volume / "
            "bridge number, which this engine does not certify")
    if kind == "J" and n < 1:
        raise DiagramError("the family needs n >= 1")
    if kind == "mirror_J" and n > -1:
        raise DiagramError("the mirror family needs n <= -1")
    mirror = kind == "mirror_J"
    n_eff = -n if mirror else n
    rows = []
    prev = None
    p = seed or load_seed()
    for i in range(count):
        pres = generate_J_presentation(n_eff, i, seed=p)
        model = classify_arcs(pres)
        predicted = predict_degree(model)
        d = realize_knot(pres)
        if mirror:
            d = d.mirror()
        expanded_size = sum(abs(b.param) * b.width * (b.width - 1)
                            for b in d.boxes.values()) + len(d.crossings)
        if expanded_size <= oracle_crossing_budget:
            s = alexander_polynomial(d)
            if s.degree != predicted:
                raise DegreeViolation(
                    f"member {i}: oracle degree {s.degree} != predicted "
                    f"{predicted}")
            row = {"index": i, "degree": s.degree, "monic": is_monic(s),
                   "method": "fox"}
        else:
            row = {"index": i, "degree": predicted, "monic": True,
                   "method": "arc_model"}
        ds = realize_knot(pres, surgery_framing=n_eff)
        if mirror:
            ds = ds.mirror()
        row["h1"] = str(h1(ds))
        rows.append(row)
        if prev is not None and row["degree"] <= prev:
            raise DegreeViolation(
                f"degrees not strictly increasing at member {i}")
        prev = row["degree"]
    return FamilyReport(kind, n, rows)

import pytest
from hypothesis import given, settings, strategies as st

from knotsurgery.laurent import (LaurentPoly, NotNormalizable,
                                 normalize_symmetric, multiply, degree)


def P(d):
    return LaurentPoly(d)


def test_multiply_hand_expansion():
    # (1 - t)(1 - 1/t) = 2 - t - 1/t
    a = P({0: 1, 1: -1})
    b = P({0: 1, -1: -1})
    assert multiply(a, b) == P({0: 2, 1: -1, -1: -1})


def test_multiply_identity():
    p = P({-3: 4, 0: -2, 5: 1})
    assert multiply(p, LaurentPoly.one()) == p


def _convolve_reference(a, b):
    """Independent oracle: convolution over dense coefficient arrays."""
    if a.is_zero() or b.is_zero():
        return LaurentPoly()
    alo, ahi = a.min_exp(), a.max_exp()
    blo, bhi = b.min_exp(), b.max_exp()
    av = [a.coeff(e) for e in range(alo, ahi + 1)]
    bv = [b.coeff(e) for e in range(blo, bhi + 1)]
    out = [0] * (len(av) + len(bv) - 1)
    for i, x in enumerate(av):
        for j, y in enumerate(bv):
            out[i + j] += x * y
    return LaurentPoly({alo + blo + k: v for k, v in enumerate(out)})


def test_square_against_convolution_oracle():
    # (t - 1 + 1/t)^2 = t^2 - 2t + 3 - 2/t + 1/t^2, frozen from the oracle
    p = P({1: 1, 0: -1, -1: 1})
    sq = multiply(p, p)
    assert sq == _convolve_reference(p, p)
    assert sq == P({2: 1, 1: -2, 0: 3, -1: -2, -2: 1})


coeff_maps = st.dictionaries(st.integers(-6, 6), st.integers(-9, 9),
                             max_size=7)


@settings(max_examples=60, deadline=None)
@given(coeff_maps, coeff_maps, coeff_maps)
def test_multiply_commutative_associative(da, db, dc):
    a, b, c = P(da), P(db), P(dc)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * b == _convolve_reference(a, b)
    assert (a * LaurentPoly.zero()).is_zero()


def test_normalize_shift():
    s = normalize_symmetric(P({2: 1, 1: -1, 0: 1}))  # t^2 - t + 1
    assert s.poly == P({1: 1, 0: -1, -1: 1})
    assert s.degree == 1


def test_normalize_sign_and_shift():
    # -t^3 + t^2 - t --> t - 1 + 1/t  (multiply by -t^-2, check value at 1)
    p = P({3: -1, 2: 1, 1: -1})
    assert p(1) == -1
    s = normalize_symmetric(p)
    assert s.poly == P({1: 1, 0: -1, -1: 1})
    assert s.degree == 1
    assert s.poly(1) == 1


def test_normalize_constant():
    s = normalize_symmetric(LaurentPoly.one())
    assert s.poly == LaurentPoly.one()
    assert s.degree == 0


def test_normalize_rejects():
    with pytest.raises(NotNormalizable):
        normalize_symmetric(P({0: 2}))          # p(1) = 2
    with pytest.raises(NotNormalizable):
        normalize_symmetric(P({0: 2, 1: -1}))   # no symmetric unit multiple
    with pytest.raises(NotNormalizable):
        normalize_symmetric(LaurentPoly.zero())


@settings(max_examples=60, deadline=None)
@given(coeff_maps)
def test_normalize_idempotent_and_invariants(d):
    p = P(d)
    try:
        s = normalize_symmetric(p)
    except NotNormalizable:
        return
    assert s.poly(1) == 1
    assert s.poly.is_symmetric()
    assert s.degree == (0 if s.poly.is_zero() else s.poly.max_exp())
    again = normalize_symmetric(s.poly)
    assert again.poly == s.poly


def test_degree_examples():
    assert degree(normalize_symmetric(P({0: -1, 1: 1, -1: 1}))) == 1
    assert degree(normalize_symmetric(P({0: 1}))) == 0
    assert degree(normalize_symmetric(
        P({2: 1, 1: -2, 0: 3, -1: -2, -2: 1}))) == 2


def test_display_and_json():
    p = P({2: 3, 0: -1, -1: 1})
    assert str(p) == "3*t^2 - 1 + t^-1"
    assert LaurentPoly.from_json(p.to_json()) == p
    assert p.to_json() == [[-1, 1], [0, -1], [2, 3]]

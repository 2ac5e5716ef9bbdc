import itertools

import pytest
from hypothesis import given, strategies as st

from skewspecht.errors import DomainError, ParseError
from skewspecht.root_system import (PositiveRoot, RootVector, bilinear_form, cartan_pairing, classify_root,
                                    height, parse_root, parse_root_vector, positive_roots_up_to_height,
                                    weight_pairing)


def cartan_oracle(i, j, e):
    if i == j:
        return 2
    adjacent = (i - j) % e in (1, e - 1)
    if not adjacent:
        return 0
    return -2 if e == 2 else -1


def form_oracle(v, w):
    e = len(v)
    return sum(v[i] * w[j] * cartan_oracle(i, j, e) for i in range(e) for j in range(e))


def is_root_oracle(v):
    """Nonzero nonnegative vectors of norm 2 or 0 are exactly the positive roots in affine type A."""
    return any(v) and min(v) >= 0 and form_oracle(v, v) in (0, 2)


def test_cartan_examples():
    assert cartan_pairing(0, 0, 3) == 2
    assert cartan_pairing(0, 1, 2) == -2
    assert cartan_pairing(0, 2, 5) == 0
    assert cartan_pairing(0, 2, 3) == -1


@pytest.mark.parametrize("e", range(2, 7))
def test_cartan_matrix_symmetric_with_zero_row_sums(e):
    for i in range(e):
        assert sum(cartan_pairing(i, j, e) for j in range(e)) == 0
        for j in range(e):
            assert cartan_pairing(i, j, e) == cartan_pairing(j, i, e) == cartan_oracle(i, j, e)


def test_bilinear_examples():
    a1, a2 = RootVector.simple(1, 3), RootVector.simple(2, 3)
    assert bilinear_form(a1, a2) == -1
    assert bilinear_form(RootVector.delta(3), RootVector.delta(3)) == 0
    assert bilinear_form(RootVector.delta(2) + RootVector.simple(1, 2), RootVector.simple(1, 2)) == 2
    with pytest.raises(DomainError):
        bilinear_form(RootVector.delta(2), RootVector.delta(3))


def test_weight_pairing_and_height():
    assert weight_pairing(1, RootVector((0, 1, 1))) == 1
    assert weight_pairing(0, RootVector.simple(1, 2)) == 0
    assert weight_pairing(2, RootVector.delta(3)) == 1
    assert height(RootVector.simple(1, 3)) == 1
    assert height(RootVector.delta(3)) == 3
    assert height(RootVector.delta(2) + RootVector.simple(1, 2)) == 3


def test_classify_examples():
    assert classify_root(RootVector((1, 1, 1))) == PositiveRoot.imaginary(1)
    assert classify_root(RootVector((1, 0, 1))) == PositiveRoot.minus(1, 1)
    assert classify_root(RootVector((0, 2, 0))) is None


def test_enumeration_examples():
    assert positive_roots_up_to_height(1, 3) == (PositiveRoot.plus(0, 1), PositiveRoot.plus(0, 2),
                                                PositiveRoot.minus(1, 1, 2))
    assert set(positive_roots_up_to_height(2, 2)) == {PositiveRoot.plus(0, 1), PositiveRoot.minus(1, 1),
                                                      PositiveRoot.imaginary(1)}
    assert positive_roots_up_to_height(0, 3) == ()


@pytest.mark.parametrize("e", [2, 3, 4])
def test_enumeration_matches_norm_oracle(e):
    h = 9
    found = [r.vector(e).coeffs for r in positive_roots_up_to_height(h, e)]
    assert len(found) == len(set(found))
    brute = [v for v in itertools.product(range(h + 1), repeat=e) if sum(v) <= h and is_root_oracle(v)]
    assert set(found) == set(brute)


@pytest.mark.parametrize("e", [2, 3, 4, 5])
def test_classify_round_trip_to_height_20(e):
    for r in positive_roots_up_to_height(20, e):
        v = r.vector(e)
        assert classify_root(v) == r
        assert bilinear_form(v, v) == (2 if r.is_real else 0)
        assert bilinear_form(RootVector.delta(e), v) == 0


def test_enumeration_order_is_height_then_kind():
    roots = positive_roots_up_to_height(8, 3)
    keys = [(r.height(3), {"plus": 0, "imag": 1, "minus": 2}[r.kind], r.i, r.j) for r in roots]
    assert keys == sorted(keys)


@given(st.integers(2, 5).flatmap(lambda e: st.tuples(st.just(e), st.lists(st.integers(0, 4), min_size=e,
                                                                             max_size=e))))
def test_classify_agrees_with_oracle(case):
    e, coeffs = case
    if not any(coeffs):
        return
    r = classify_root(RootVector(tuple(coeffs)))
    assert (r is not None) == is_root_oracle(coeffs)
    if r is not None:
        assert r.vector(e).coeffs == tuple(coeffs)


@given(st.integers(2, 4), st.data())
def test_form_symmetric(e, data):
    vec = st.lists(st.integers(-3, 3), min_size=e, max_size=e).map(tuple)
    v, w = data.draw(vec), data.draw(vec)
    assert bilinear_form(RootVector(v), RootVector(w)) == bilinear_form(RootVector(w), RootVector(v)) \
        == form_oracle(v, w)


@pytest.mark.parametrize("text,e,want", [
    ("a1", 3, PositiveRoot.plus(0, 1)),
    ("a1+a2", 3, PositiveRoot.plus(0, 1, 2)),
    ("d-a1", 2, PositiveRoot.minus(1, 1)),
    ("2d+a1..a3", 5, PositiveRoot.plus(2, 1, 3)),
    ("a0", 3, PositiveRoot.minus(1, 1, 2)),
    ("3d", 2, PositiveRoot.imaginary(3)),
])
def test_parse_root(text, e, want):
    assert parse_root(text, e) == want


@pytest.mark.parametrize("e", [2, 3, 4])
def test_spelling_round_trip(e):
    for r in positive_roots_up_to_height(12, e):
        assert parse_root(r.spelling(), e) == r


@pytest.mark.parametrize("text,pos", [("a1+x", 2), ("", 0), ("a1 a2", 3), ("a7", 0)])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as err:
        parse_root(text, 3)
    assert err.value.position == pos


def test_parse_rejects_non_roots():
    with pytest.raises(ParseError):
        parse_root("2a1", 3)
    with pytest.raises(ParseError):
        parse_root("a1-a2", 3)
    assert parse_root_vector("1,0,2", 3) == RootVector((1, 0, 2))


def test_e_below_two_rejected():
    with pytest.raises(DomainError):
        RootVector((1,))
    with pytest.raises(DomainError):
        positive_roots_up_to_height(3, 1)

import itertools
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from skewspecht.characters import (GradedCharacter, add_tensors, bar_involution, check_join_identity,
                                   check_restriction_filtration, epsilon, extremal_word, join_report, restrict,
                                   shuffle_product, specht_character, specht_character_by_tableaux, tensor,
                                   theta_star)
from skewspecht.diagrams import SkewShape, hook_eta, is_joinable
from skewspecht.errors import DomainError
from skewspecht.laurent import LaurentPoly, quantum_factorial
from skewspecht.root_system import RootVector, cartan_pairing

from strategies import skew_shapes

q = LaurentPoly.q()


def W(*letters, e, coeff=1):
    return GradedCharacter.word(letters, e, coeff)


def shuffle_oracle(u, v, e):
    """Sum over position sets for u's letters; each (v-letter before u-letter) pair costs -(a, b)."""
    n = len(u) + len(v)
    out = Counter()
    for pos in itertools.combinations(range(n), len(u)):
        w, iu, iv = [], 0, 0
        expo = 0
        for k in range(n):
            if k in pos:
                w.append(u[iu])
                # v letters already placed jumped ahead of this u letter
                expo -= sum(cartan_pairing(u[iu], v[j], e) for j in range(iv))
                iu += 1
            else:
                w.append(v[iv])
                iv += 1
        out[(tuple(w), expo)] += 1
    terms = {}
    for (w, ex), c in out.items():
        terms[w] = terms.get(w, LaurentPoly()) + LaurentPoly({ex: c})
    return terms


words = st.integers(2, 3).flatmap(
    lambda e: st.tuples(st.just(e), st.lists(st.integers(0, e - 1), max_size=4).map(tuple),
                        st.lists(st.integers(0, e - 1), max_size=4).map(tuple)))


# -- specht characters -------------------------------------------------------------

def test_specht_character_examples():
    assert str(specht_character(SkewShape.level1((2, 1), (), 0, 2))) == "(q+q^-1)*(0 1 1)"
    assert specht_character(SkewShape.level1((1,), (), 2, 3)) == W(2, e=3)
    assert str(specht_character(hook_eta(3, 2))) == "(0 1 2) + (q)*(0 2 1)"


@given(skew_shapes(max_size=7, es=(2, 3, 4)))
def test_lattice_route_matches_tableau_route(shape):
    ch = specht_character(shape)
    assert ch == specht_character_by_tableaux(shape)
    assert ch.dimension().at_one() == sum(1 for _ in __import__("skewspecht.tableaux", fromlist=["x"])
                                           .enumerate_standard(shape))


# -- shuffles ----------------------------------------------------------------------

def test_shuffle_examples():
    assert shuffle_product(W(0, e=2), W(1, e=2)) == W(0, 1, e=2) + W(1, 0, e=2, coeff=q ** 2)
    assert shuffle_product(W(1, e=3), W(2, e=3)) == W(1, 2, e=3) + W(2, 1, e=3, coeff=q)
    x = specht_character(SkewShape.level1((2, 1), (), 0, 3))
    assert shuffle_product(x, GradedCharacter.unit(3)) == x == shuffle_product(GradedCharacter.unit(3), x)


@given(words)
def test_shuffle_matches_oracle(case):
    e, u, v = case
    got = shuffle_product(GradedCharacter.word(u, e), GradedCharacter.word(v, e))
    assert got.terms == shuffle_oracle(u, v, e)


@given(words, st.lists(st.integers(0, 2), max_size=3))
def test_shuffle_associative(case, third):
    e, u, v = case
    w = tuple(x % e for x in third)
    a, b, c = (GradedCharacter.word(x, e) for x in (u, v, w))
    assert shuffle_product(shuffle_product(a, b), c) == shuffle_product(a, shuffle_product(b, c))


@given(st.lists(st.integers(0, 1), min_size=1, max_size=4), st.lists(st.integers(2, 3), min_size=1, max_size=3))
def test_concatenation_coefficient_for_disjoint_alphabets(u, v):
    e = 5
    a = GradedCharacter.word(u, e, q)
    b = GradedCharacter.word(v, e, q + 1)
    assert shuffle_product(a, b)[tuple(u) + tuple(v)] == q * (q + 1)


def test_shuffle_rejects_mixed_e():
    with pytest.raises(DomainError):
        shuffle_product(W(0, e=2), W(0, e=3))


# -- restriction ---------------------------------------------------------------------

def test_restrict_examples():
    x = W(0, 1, e=2, coeff=q)
    a0, a1 = RootVector.simple(0, 2), RootVector.simple(1, 2)
    assert restrict(x, a0, a1) == {((0,), (1,)): q}
    assert restrict(x, a1, a0) == {}
    assert restrict(x, x.content, RootVector.zero(2)) == {((0, 1), ()): q}
    with pytest.raises(DomainError):
        restrict(x, a0, a0)


@given(skew_shapes(max_size=6, es=(2, 3)))
def test_restriction_additivity(shape):
    ch = specht_character(shape)
    n = shape.size
    for cut in range(n + 1):
        total = LaurentPoly()
        seen = set()
        for w in ch.words():
            alpha = RootVector.from_letters(w[:cut], shape.e)
            if alpha in seen:
                continue
            seen.add(alpha)
            for p in restrict(ch, alpha, ch.content - alpha).values():
                total = total + p
        assert total == ch.dimension()


def test_filtration_examples():
    a0, a1 = RootVector.simple(0, 2), RootVector.simple(1, 2)
    assert check_restriction_filtration(((2,),), (0,), 2, a0, a1)
    lhs = restrict(specht_character(SkewShape.level1((2,), (), 0, 2)), a0, a1)
    assert lhs == {((0,), (1,)): q}
    full = RootVector((1, 2))
    assert check_restriction_filtration(((2, 1),), (0,), 2, full, RootVector.zero(2))


def test_tensor_helpers():
    t = tensor(W(0, e=2), W(1, e=2, coeff=q))
    assert t == {((0,), (1,)): q}
    assert add_tensors(t, {((0,), (1,)): -q}) == {}


# -- bar, theta*, epsilon, extremal words ----------------------------------------------

def test_bar_examples():
    assert bar_involution(W(0, 1, e=2)) == W(0, 1, e=2)
    pal = W(0, 1, 1, e=2, coeff=q + q ** -1)
    assert bar_involution(pal) == pal
    assert bar_involution(W(0, e=2, coeff=q)) == W(0, e=2, coeff=q ** -1)


def test_theta_epsilon_examples():
    x = W(0, 1, e=2) + W(1, 0, e=2, coeff=q)
    assert theta_star(x, 1) == W(0, e=2)
    assert epsilon(W(0, 1, 1, e=2, coeff=q + q ** -1), 1) == 2
    assert epsilon(GradedCharacter.zero(RootVector((1, 1))), 0) == 0


def test_extremal_examples():
    x = extremal_word(specht_character(SkewShape.level1((2, 1), (), 0, 2)))
    assert x.runs == ((0, 1), (1, 2)) and x.dim == q + q ** -1 and x.spelling() == "0^1 1^2"
    y = extremal_word(W(2, 0, 0, e=3, coeff=q ** 3))
    assert y.word == (2, 0, 0) and y.dim == q ** 3
    with pytest.raises(DomainError):
        extremal_word(GradedCharacter.zero(RootVector((1, 1))))


@given(skew_shapes(max_size=6, es=(2, 3)))
def test_extremal_word_bar_invariant(shape):
    ch = specht_character(shape)
    a, b = extremal_word(ch), extremal_word(bar_involution(ch))
    assert a.runs == b.runs and a.dim == b.dim.bar()


@given(skew_shapes(max_size=6, es=(2, 3)))
def test_extremal_word_dim_is_a_coefficient(shape):
    ch = specht_character(shape)
    x = extremal_word(ch)
    assert ch[x.word] == x.dim
    # every run was maximal when it was stripped
    assert all(n >= 1 for _, n in x.runs)


# -- serialization ---------------------------------------------------------------------

def test_json_forms():
    x = specht_character(SkewShape.level1((2, 1), (), 0, 2))
    assert x.to_json() == {"content": [1, 2], "terms": [{"word": [0, 1, 1], "poly": {"-1": 1, "1": 1}}]}
    assert GradedCharacter.zero(RootVector((1, 2, 0))).to_json() == {"content": [1, 2, 0], "terms": []}


@given(skew_shapes(max_size=6, es=(2, 3, 4)), st.integers(-3, 3))
def test_json_round_trip(shape, k):
    x = specht_character(shape).shift(k)
    assert GradedCharacter.from_json(x.to_json()) == x


def test_word_content_checked():
    with pytest.raises(DomainError):
        GradedCharacter(RootVector((1, 0)), {(1,): LaurentPoly.const(1)})


# -- join identity -----------------------------------------------------------------------

def test_worked_join():
    s = SkewShape(((1,), (1,)), ((), ()), (2, 1), 3)
    rep = join_report(s)
    assert rep.ok
    assert (rep.d_above, rep.d_right, rep.d_shift) == (0, 1, 0)
    ch = specht_character(s)
    assert ch == W(2, 1, e=3) + W(1, 2, e=3, coeff=q)
    assert ch == shuffle_product(W(2, e=3), W(1, e=3))


def test_join_requires_joinable():
    with pytest.raises(DomainError):
        check_join_identity(SkewShape(((1,), (1,)), ((), ()), (0, 1), 3))


@given(st.integers(2, 3), st.data())
def test_join_identity_on_partition_pairs(e, data):
    from strategies import partitions
    lam1 = data.draw(partitions(max_size=4, min_size=1))
    lam2 = data.draw(partitions(max_size=4, min_size=1))
    k2 = data.draw(st.integers(0, e - 1))
    k1 = (k2 + len(lam1) + lam2[0] - 1) % e
    s = SkewShape((lam1, lam2), ((), ()), (k1, k2), e)
    assert is_joinable(s)
    assert check_join_identity(s)


def test_quantum_factorial_dims_of_row_shapes():
    # a single row of n nodes with e > n has one tableau in degree 0
    for n in range(1, 5):
        ch = specht_character(SkewShape.level1((n,), (), 0, 7))
        assert ch.dimension() == 1
    # n disconnected boxes of one residue give [n]! up to a shift
    for n in range(1, 5):
        shape = SkewShape.level1(tuple(range(n, 0, -1)), tuple(range(n - 1, 0, -1)), 0, 2)
        dim = specht_character(shape).dimension()
        assert dim.at_one() == quantum_factorial(n).at_one()

import itertools
from math import factorial

import pytest
from hypothesis import assume, given, strategies as st

from skewspecht.diagrams import Node, SkewShape, tight_skew_diagrams
from skewspecht.errors import DomainError
from skewspecht.root_system import cartan_pairing
from skewspecht.tableaux import (SkewTableau, adjacent_swap_standard, apply_reduced_word, bruhat_leq, codegree,
                                 d_above, d_below, degree, embed_Y, enumerate_standard,
                                 enumerate_standard_data, is_row_strict, is_standard, leading_tableau,
                                 permutation_bruhat_leq, permutation_length, reduced_word, residue_sequence,
                                 swap_entries, tableau_permutation, wiring_degree, check_degree_wiring)

from strategies import skew_shapes


def rows_of(t):
    return [line.split() for line in t.render().splitlines()]


# -- independent oracles ---------------------------------------------------------

def standard_oracle(shape, entries):
    m = dict(zip(shape.nodes, entries))
    for (a, b, c), x in m.items():
        for nb in (Node(a, b + 1, c), Node(a + 1, b, c)):
            if nb in m and m[nb] < x:
                return False
    return True


def addable_removable(cells, level):
    add, rem = [], []
    for m in range(1, level + 1):
        mine = {(a, b) for a, b, c in cells if c == m}
        rows = max([a for a, _ in mine] + [0]) + 1
        for a in range(1, rows + 1):
            length = sum(1 for r, _ in mine if r == a)
            b = length + 1
            if (a == 1 or (a - 1, b) in mine):
                add.append((a, b, m))
            if length and (a, length + 1) not in mine and (a + 1, length) not in mine:
                rem.append((a, length, m))
    return add, rem


def degree_oracle(shape, entries, co=False):
    """BKW degree (or codegree) through the Y-embedding, computed from node sets."""
    inner = [(a, b, m) for m, mu in enumerate(shape.inner, 1) for a, row in enumerate(mu, 1)
             for b in range(1, row + 1)]
    order = inner + [n for _, n in sorted(zip(entries, shape.nodes))]

    def res(n):
        return (shape.charge[n[2] - 1] + n[1] - n[0]) % shape.e

    def below(x, a):
        return x[2] > a[2] or (x[2] == a[2] and x[0] > a[0])

    def above(x, a):
        return x[2] < a[2] or (x[2] == a[2] and x[0] < a[0])

    def total(seq):
        acc, cells = 0, set()
        for node in seq:
            i = res(node)
            if co:
                add, rem = addable_removable(cells, shape.level)
                acc += sum(1 for x in add if res(x) == i and above(x, node))
                acc -= sum(1 for x in rem if res(x) == i and above(x, node))
            cells.add(tuple(node))
            if not co:
                add, rem = addable_removable(cells, shape.level)
                acc += sum(1 for x in add if res(x) == i and below(x, node))
                acc -= sum(1 for x in rem if res(x) == i and below(x, node))
        return acc

    return total(order) - total(inner)


def wiring_oracle(w, word, e):
    n = len(w)
    return -sum(cartan_pairing(word[k], word[l], e) for k in range(n) for l in range(k + 1, n) if w[k] > w[l])


def lower_interval(v):
    """All products of subwords of one reduced word of v: exactly the Bruhat interval [1, v]."""
    out = {tuple(range(1, len(v) + 1))}
    for r in reduced_word(v):
        grown = set(out)
        for x in out:
            # right multiplication by s_r swaps positions r and r+1
            y = list(x)
            y[r - 1], y[r] = y[r], y[r - 1]
            grown.add(tuple(y))
        out = grown
    return out


def other_reduced_word(w):
    """Reduced word from the largest right descent (bubble sort from the right)."""
    w = list(w)
    out = []
    while True:
        for k in range(len(w) - 1, 0, -1):
            if w[k - 1] > w[k]:
                w[k - 1], w[k] = w[k], w[k - 1]
                out.append(k)
                break
        else:
            return out


def apply_right_word(word_rs, letters, e):
    """Same as apply_reduced_word but for a word of right multiplications, read left to right."""
    return apply_reduced_word(list(reversed(word_rs)), letters, e)


# -- examples ----------------------------------------------------------------------

def test_leading_tableau_and_Y_example():
    s = SkewShape.level1((4, 4, 1), (2, 1, 1), 0, 2)
    t = leading_tableau(s)
    assert rows_of(t) == [[".", ".", "1", "2"], [".", "3", "4", "5"], ["."]]
    assert rows_of(embed_Y(t)) == [["1", "2", "5", "6"], ["3", "7", "8", "9"], ["4"]]
    assert leading_tableau(SkewShape.level1((1,), (), 0, 2)).entries == (1,)


def test_embed_identity_on_partitions():
    s = SkewShape.level1((3, 1), (), 0, 2)
    for t in enumerate_standard(s):
        assert embed_Y(t) == t


def test_standard_examples():
    s = SkewShape.level1((2, 1), (), 0, 2)
    assert is_standard(SkewTableau(s, (1, 3, 2)))
    assert not is_row_strict(SkewTableau(s, (2, 1, 3)))
    assert is_standard(leading_tableau(SkewShape.level1((4, 4, 1), (2, 1, 1), 0, 2)))
    with pytest.raises(DomainError):
        SkewTableau(s, (1, 1, 2))


def test_enumeration_examples():
    assert len(list(enumerate_standard(SkewShape.level1((2, 1), (), 0, 2)))) == 2
    assert len(list(enumerate_standard(SkewShape.level1((3, 2, 1), (2, 1), 0, 2)))) == factorial(3)
    assert len(list(enumerate_standard(SkewShape.level1((4,), (), 0, 2)))) == 1


def test_residue_sequence_examples():
    s3 = SkewShape.level1((2, 1), (), 0, 3)
    assert residue_sequence(leading_tableau(s3)) == (0, 1, 2)
    assert residue_sequence(SkewTableau(s3, (1, 3, 2))) == (0, 2, 1)
    s2 = SkewShape.level1((2, 1), (), 0, 2)
    assert {residue_sequence(t) for t in enumerate_standard(s2)} == {(0, 1, 1)}


def test_d_examples():
    assert d_below(((1,),), (0,), 2, Node(1, 1, 1)) == 0
    assert d_below(((2,),), (0,), 2, Node(1, 2, 1)) == 1
    assert d_below(((2, 1),), (0,), 2, Node(1, 2, 1)) == -1
    with pytest.raises(DomainError):
        d_below(((2, 1),), (0,), 2, Node(1, 1, 1))
    assert d_above(((1,),), (0,), 2, Node(2, 1, 1)) == 1
    assert d_above(((1,),), (0,), 3, Node(2, 1, 1)) == 0
    with pytest.raises(DomainError):
        d_above(((1,),), (0,), 2, Node(1, 1, 1))


def test_degree_examples():
    s2 = SkewShape.level1((2, 1), (), 0, 2)
    s3 = SkewShape.level1((2, 1), (), 0, 3)
    assert [degree(SkewTableau(s2, e)) for e in ((1, 2, 3), (1, 3, 2))] == [1, -1]
    assert [codegree(SkewTableau(s2, e)) for e in ((1, 2, 3), (1, 3, 2))] == [-1, 1]
    assert [degree(SkewTableau(s3, e)) for e in ((1, 2, 3), (1, 3, 2))] == [0, 1]
    assert degree(leading_tableau(SkewShape.level1((1,), (), 1, 3))) == 0
    with pytest.raises(DomainError):
        degree(SkewTableau(s2, (2, 1, 3)))


def test_permutation_examples():
    s = SkewShape.level1((2, 1), (), 0, 2)
    assert tableau_permutation(leading_tableau(s)) == (1, 2, 3)
    assert tableau_permutation(SkewTableau(s, (1, 3, 2))) == (1, 3, 2)
    for t in enumerate_standard(SkewShape.level1((3, 2), (1,), 0, 2)):
        assert (permutation_length(tableau_permutation(t)) == 0) == (t == leading_tableau(t.shape))


def test_bruhat_examples():
    s = SkewShape.level1((2, 1), (), 0, 2)
    assert bruhat_leq(SkewTableau(s, (1, 2, 3)), SkewTableau(s, (1, 3, 2)))
    assert not bruhat_leq(SkewTableau(s, (1, 3, 2)), SkewTableau(s, (1, 2, 3)))
    big = SkewShape.level1((3, 2, 1), (1,), 0, 3)
    lead = leading_tableau(big)
    assert all(bruhat_leq(lead, t) for t in enumerate_standard(big))
    with pytest.raises(DomainError):
        bruhat_leq(lead, leading_tableau(s))


def test_adjacent_swap_examples():
    t = SkewTableau(SkewShape.level1((2, 1), (), 0, 2), (1, 2, 3))
    assert adjacent_swap_standard(t, 2)
    assert swap_entries(t, 2).entries == (1, 3, 2)
    assert not adjacent_swap_standard(t, 1)


def test_wiring_examples():
    assert wiring_degree((1, 2, 3), (0, 1, 2), 3) == 0
    assert wiring_degree((2, 1), (1, 1), 3) == -2
    assert wiring_degree((2, 1), (0, 1), 3) == 1


# -- properties --------------------------------------------------------------------

@given(skew_shapes(max_size=7, es=(2, 3)))
def test_enumeration_matches_brute_force(shape):
    assume(shape.size <= 7)
    brute = sorted(p for p in itertools.permutations(range(1, shape.size + 1)) if standard_oracle(shape, p))
    tabs = list(enumerate_standard(shape))
    # the stream is lexicographic in where 1, 2, ... are placed
    keys = [tuple(shape.index[n] for n in t.positions) for t in tabs]
    assert keys == sorted(keys)
    assert sorted(t.entries for t in tabs) == brute


@given(skew_shapes(max_size=6, es=(2, 3, 4)))
def test_degrees_match_oracle(shape):
    for entries, deg, word in enumerate_standard_data(shape):
        t = SkewTableau(shape, entries)
        assert degree(t) == deg == degree_oracle(shape, entries)
        assert codegree(t) == degree_oracle(shape, entries, co=True)
        assert residue_sequence(t) == word


@given(st.integers(2, 3), st.data())
def test_multipartition_degrees_match_oracle(e, data):
    from strategies import partitions
    lam1 = data.draw(partitions(max_size=3, min_size=1))
    lam2 = data.draw(partitions(max_size=3, min_size=1))
    k = data.draw(st.tuples(st.integers(0, e - 1), st.integers(0, e - 1)))
    shape = SkewShape((lam1, lam2), ((), ()), k, e)
    for t in enumerate_standard(shape):
        assert degree(t) == degree_oracle(shape, t.entries)
        assert codegree(t) == degree_oracle(shape, t.entries, co=True)


@given(skew_shapes(max_size=6, es=(2, 3)))
def test_Y_embedding_preserves_standardness(shape):
    for t in enumerate_standard(shape):
        assert is_standard(embed_Y(t))


@pytest.mark.parametrize("d", range(1, 6))
def test_wiring_independent_of_reduced_word(d):
    for w in itertools.permutations(range(1, d + 1)):
        r1, r2 = reduced_word(w), other_reduced_word(w)
        assert len(r1) == len(r2) == permutation_length(w)
        for e in (2, 3):
            for word in itertools.product(range(e), repeat=d):
                want = wiring_oracle(w, word, e)
                assert wiring_degree(w, word, e) == want
                assert apply_right_word(r2, word, e)[0] == want


@pytest.mark.parametrize("d", range(1, 6))
def test_reduced_word_rebuilds_permutation(d):
    for w in itertools.permutations(range(1, d + 1)):
        rw = reduced_word(w)
        # s_r1 ... s_rm applied to the identity by left multiplication (swap values)
        x = list(range(1, d + 1))
        for r in reversed(rw):
            x = [r + 1 if v == r else r if v == r + 1 else v for v in x]
        assert tuple(x) == w


@pytest.mark.parametrize("d", range(1, 6))
def test_sorted_prefix_bruhat_matches_subword(d):
    perms = list(itertools.permutations(range(1, d + 1)))
    for v in perms:
        below = lower_interval(v)
        for u in perms:
            assert permutation_bruhat_leq(u, v) == (u in below)


@given(skew_shapes(max_size=5, es=(2,)))
def test_tableau_bruhat_matches_subword(shape):
    tabs = list(enumerate_standard(shape))
    intervals = {t: lower_interval(tableau_permutation(t)) for t in tabs}
    for s in tabs:
        for t in tabs:
            assert bruhat_leq(s, t) == (tableau_permutation(s) in intervals[t])


@given(skew_shapes(max_size=6, es=(2,)))
def test_adjacent_swap_matches_standardness(shape):
    for t in enumerate_standard(shape):
        for r in range(1, shape.size):
            assert adjacent_swap_standard(t, r) == is_standard(swap_entries(t, r))


@given(skew_shapes(max_size=5, es=(2,)))
def test_below_adjacent_swap_is_below_original(shape):
    """If r+1 sits directly right of or below r in t, anything strictly below s_r t is below t."""
    tabs = list(enumerate_standard(shape))
    for t in tabs:
        for r in range(1, shape.size):
            a1, b1, m1 = t.node_of(r)
            a2, b2, m2 = t.node_of(r + 1)
            if m1 != m2 or (a2, b2) not in ((a1, b1 + 1), (a1 + 1, b1)):
                continue
            u = swap_entries(t, r)
            for s in tabs:
                if s != u and tableau_permutation(s) in lower_interval(tableau_permutation(u)):
                    assert bruhat_leq(s, t)


@given(skew_shapes(max_size=6, es=(2, 3)))
def test_degree_wiring_per_tableau(shape):
    lead = leading_tableau(shape)
    word = residue_sequence(lead)
    base = degree(lead)
    for t in enumerate_standard(shape):
        assert degree(t) - base == wiring_degree(tableau_permutation(t), word, shape.e)
    assert check_degree_wiring(shape)


@pytest.mark.parametrize("e", [2, 3])
def test_degree_wiring_lattice_check_agrees_with_per_tableau(e):
    for n in range(1, 6):
        for lam, mu in tight_skew_diagrams(n):
            shape = SkewShape.level1(lam, mu, 0, e)
            lead = leading_tableau(shape)
            word, base = residue_sequence(lead), degree(lead)
            direct = all(degree(t) - base == wiring_degree(t.entries, word, e) for t in enumerate_standard(shape))
            assert check_degree_wiring(shape) == direct

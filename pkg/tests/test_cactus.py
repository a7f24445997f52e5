import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from actionoperad import perm as P
from actionoperad.aopcore import Equality, SampleBudget, Status, check_nine_axioms, overall_status
from actionoperad.errors import ArityError, InvariantError, ParseError
from actionoperad.instances import (
    CactusOperad,
    CactusWord,
    cactus_beta,
    cactus_delta,
    cactus_equal,
    cactus_pi,
    coboundary_commutor,
)
from actionoperad.instances.cactus import length_parities, parse_cactus, reflect
from actionoperad.perm import Perm


def intervals(n):
    return [(p, q) for p in range(1, n + 1) for q in range(p + 1, n + 1)]


def s(n, *letters):
    return CactusWord(n, letters)


def reversal_perm(n, p, q):
    """Reverse [p, q] inside 1..n, computed directly."""
    images = list(range(1, n + 1))
    images[p - 1:q] = reversed(images[p - 1:q])
    # images[j] is now the point that lands at j+1; invert to one-line images
    out = [0] * n
    for pos, x in enumerate(images, 1):
        out[x - 1] = pos
    return Perm(out)


@st.composite
def cactus_words(draw, n=None, max_len=6):
    n = draw(st.integers(2, 5)) if n is None else n
    letters = draw(st.lists(st.sampled_from(intervals(n)), max_size=max_len))
    return CactusWord(n, letters)


# -- the three relation families ----------------------------------------------

@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_involutions(n):
    for a in intervals(n):
        assert cactus_equal(s(n, a, a), CactusWord(n)) is Equality.EQUAL


@pytest.mark.parametrize("n", [4, 5])
def test_disjoint_intervals_commute(n):
    pairs = [(a, b) for a, b in itertools.product(intervals(n), repeat=2) if a[1] < b[0]]
    assert pairs
    for a, b in pairs:
        assert cactus_equal(s(n, a, b), s(n, b, a)) is Equality.EQUAL


@pytest.mark.parametrize("n", [3, 4, 5])
def test_nested_intervals_reflect(n):
    pairs = [(a, b) for a, b in itertools.product(intervals(n), repeat=2)
             if a != b and a[0] <= b[0] and b[1] <= a[1]]
    assert pairs
    for a, b in pairs:
        assert cactus_equal(s(n, a, b), s(n, reflect(a, b), a)) is Equality.EQUAL


def test_overlapping_intervals_do_not_commute():
    assert cactus_equal(s(3, (1, 2), (2, 3)), s(3, (2, 3), (1, 2))) is Equality.NOT_EQUAL


# -- permutations and invariants ----------------------------------------------

def test_pi_values():
    assert cactus_pi(s(3, (1, 3))) == Perm([3, 2, 1])
    assert cactus_pi(s(3, (1, 2), (2, 3))) == Perm([2, 3, 1])
    assert cactus_pi(s(3, (1, 2), (2, 3))) == Perm([2, 1, 3]) * Perm([1, 3, 2])


@given(cactus_words())
def test_pi_is_product_of_interval_reversals(w):
    expected = Perm.identity(w.n)
    for p, q in w.letters:
        expected = expected * reversal_perm(w.n, p, q)
    assert cactus_pi(w) == expected


@given(cactus_words(), st.data())
def test_equal_answers_are_sound(u, data):
    v = data.draw(cactus_words(n=u.n))
    verdict = cactus_equal(u, v)
    if verdict is Equality.EQUAL:
        assert cactus_pi(u) == cactus_pi(v)
        assert length_parities(u) == length_parities(v)
    assert cactus_equal(u, u * CactusWord(u.n)) is Equality.EQUAL
    assert cactus_equal(u * u.inverse(), CactusWord(u.n)) is Equality.EQUAL


# -- operations ---------------------------------------------------------------

def test_duplication_example():
    t2 = s(2, (1, 2))
    assert cactus_delta(t2, [2, 3]) == s(5, (1, 5), (1, 2), (3, 5))
    assert cactus_delta(t2, [2, 3]).pi() == P.duplication(Perm([2, 1]), [2, 3])


@given(cactus_words(max_len=4), st.data())
def test_duplication_covers_permutation_duplication(w, data):
    ks = data.draw(st.lists(st.integers(0, 3), min_size=w.n, max_size=w.n))
    assert cactus_delta(w, ks).pi() == P.duplication(w.pi(), ks)


@given(st.lists(cactus_words(max_len=3), min_size=1, max_size=3))
def test_block_sum_shifts_intervals(parts):
    b = cactus_beta(parts)
    assert b.pi() == P.block_sum([w.pi() for w in parts])


@pytest.mark.parametrize("m,n", [(1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (3, 1)])
def test_coboundary_involution(m, n):
    product = coboundary_commutor(m, n) * coboundary_commutor(n, m)
    assert cactus_equal(product, CactusWord(m + n)) is Equality.EQUAL


def test_coboundary_commutor_permutation_is_block_swap():
    assert coboundary_commutor(2, 3).pi() == P.duplication(Perm([2, 1]), [2, 3])
    with pytest.raises(ArityError):
        coboundary_commutor(0, 2)


def test_parse_forms():
    assert parse_cactus("(1,3)(2,4)") == s(4, (1, 3), (2, 4))
    assert parse_cactus("s(1,3) s(2,4)") == s(4, (1, 3), (2, 4))
    assert parse_cactus("J5: (1,2)").n == 5
    assert parse_cactus("e").letters == ()
    with pytest.raises(ParseError):
        parse_cactus("(1,2)x")
    with pytest.raises(ParseError):
        parse_cactus("J2: (1,3)")
    with pytest.raises(InvariantError):
        CactusWord(2, [(1, 3)])


def test_cactus_axioms_small_budget():
    reports = check_nine_axioms(CactusOperad(), SampleBudget(4, -1, 15, seed=2, max_word_length=4))
    assert overall_status(reports) is Status.PASS
    assert all(r.extra.get("unknown_cases", 0) == 0 for r in reports)

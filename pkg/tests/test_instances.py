import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from actionoperad import perm as P
from actionoperad.aopcore import Equality, SampleBudget, Status, check_nine_axioms, check_single_axiom, overall_status
from actionoperad.errors import ArityError, InvariantError, ParseError
from actionoperad.instances import (
    AbelianGroup,
    AbelianOperad,
    AbelianTuple,
    BraidOperad,
    BraidWord,
    RibbonElement,
    RibbonOperad,
    SymmetricOperad,
    TrivialOperad,
    braid_beta,
    braid_delta,
    garside_half_twist,
    get_instance,
    ribbon_delta,
)
from actionoperad.instances.braid import braid_equal, free_reduce, handle_reduce, parse_braid
from actionoperad.instances.ribbon import parse_ribbon
from actionoperad.perm import Perm

from oracles import artin_images, braid_equal_oracle


@st.composite
def braid_words(draw, n=None, max_len=8):
    n = draw(st.integers(1, 5)) if n is None else n
    if n < 2:
        return BraidWord(n)
    letters = draw(st.lists(st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i])), max_size=max_len))
    return BraidWord(n, letters)


# -- registry -----------------------------------------------------------------

def test_registry_names():
    assert get_instance("sigma").name == "sigma"
    assert isinstance(get_instance("abelian:3"), AbelianOperad)
    assert get_instance("Braid").name == "braid"
    for bad in ("abelian:x", "abelian:-1", "nope"):
        with pytest.raises(KeyError):
            get_instance(bad)


# -- trivial and abelian -------------------------------------------------------

def test_trivial_has_one_element_per_arity():
    T = TrivialOperad()
    assert [T.order(n) for n in range(5)] == [1, 1, 1, 1, 1]
    e = T.identity(3)
    assert T.duplication(e, [2, 0, 1]) == T.identity(3)
    assert T.pi(e).is_identity()


def test_abelian_group_tables():
    Z3 = AbelianGroup.cyclic(3)
    assert Z3.add(2, 2) == 1 and Z3.neg(1) == 2
    klein = AbelianGroup.from_table([[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]])
    assert klein.add(1, 2) == 3
    with pytest.raises(InvariantError):
        AbelianGroup.from_table([[0, 1], [0, 1]])


def test_abelian_duplication_repeats_entries():
    A = AbelianOperad(3)
    assert A.duplication(AbelianTuple((1, 2)), [2, 1]) == AbelianTuple((1, 1, 2))
    assert A.duplication(AbelianTuple((1, 2)), [0, 3]) == AbelianTuple((2, 2, 2))
    assert A.order(3) == 27
    assert A.parse(A.format(AbelianTuple((0, 2, 1)))) == AbelianTuple((0, 2, 1))


@given(st.integers(2, 5), st.lists(st.integers(0, 4), min_size=1, max_size=4), st.data())
def test_abelian_block_sum_is_concatenation(m, sizes, data):
    A = AbelianOperad(m)
    parts = [AbelianTuple(tuple(data.draw(st.lists(st.integers(0, m - 1), min_size=k, max_size=k)))) for k in sizes]
    assert A.block_sum(parts).entries == tuple(x for p in parts for x in p.entries)


# -- sigma ---------------------------------------------------------------------

def test_sigma_parse_and_format():
    S = SymmetricOperad()
    assert S.parse("(1 2 3)") == Perm([2, 3, 1])
    assert S.parse(S.format(Perm([3, 1, 2]))) == Perm([3, 1, 2])
    assert S.order(4) == 24
    assert len(list(S.elements(4))) == 24


# -- braids against the Artin representation ----------------------------------

def test_artin_oracle_sanity():
    # braid relation s1 s2 s1 = s2 s1 s2 and far commutation s1 s3 = s3 s1
    assert braid_equal_oracle([1, 2, 1], [2, 1, 2], 3)
    assert braid_equal_oracle([1, 3], [3, 1], 4)
    assert not braid_equal_oracle([1, 2], [2, 1], 3)
    assert not braid_equal_oracle([1, 1], [], 2)
    assert artin_images([1, -1], 2) == ((1,), (2,))


@given(braid_words(), st.data())
def test_braid_equality_agrees_with_artin(u, data):
    v = data.draw(braid_words(n=u.n))
    expected = braid_equal_oracle(list(u.letters), list(v.letters), u.n)
    assert (braid_equal(u, v) is Equality.EQUAL) == expected
    assert braid_equal(u, v) is not Equality.UNKNOWN


def _rewrite(letters, rng, steps):
    """Apply random braid relations; the result is the same braid."""
    w = list(letters)
    for _ in range(steps):
        choice = rng.randrange(3)
        pos = rng.randint(0, len(w))
        if choice == 0 and w:
            i = rng.choice(w)
            w[pos:pos] = [i, -i]
        elif choice == 1:
            for j in range(len(w) - 2):
                a, b, c = w[j:j + 3]
                if a == c and a > 0 and b > 0 and abs(a - b) == 1:
                    w[j:j + 3] = [b, a, b]
                    break
        else:
            for j in range(len(w) - 1):
                a, b = w[j:j + 2]
                if abs(abs(a) - abs(b)) >= 2:
                    w[j:j + 2] = [b, a]
                    break
    return w


@given(braid_words(max_len=8), st.integers(0, 10_000))
def test_relation_rewrites_are_equal(u, seed):
    rng = random.Random(seed)
    v = BraidWord(u.n, _rewrite(u.letters, rng, 6))
    assert braid_equal_oracle(list(u.letters), list(v.letters), u.n)
    assert braid_equal(u, v) is Equality.EQUAL
    assert u == v and hash(u) == hash(v)


@given(braid_words())
def test_handle_reduction_preserves_the_braid(u):
    reduced = handle_reduce(u.letters)
    assert artin_images(list(reduced), u.n) == artin_images(list(u.letters), u.n)
    assert BraidWord(u.n, reduced).pi() == u.pi()
    assert free_reduce(list(u.letters) + [-x for x in reversed(u.letters)]) == ()


def test_braid_pi_and_inverse():
    w = parse_braid("s1 s2")
    assert w.pi() == Perm.transposition(1, 2, 3) * Perm.transposition(2, 3, 3)
    assert (w * w.inverse()).is_trivial()
    assert not parse_braid("s1 s1").is_trivial()


def test_cabling_value():
    w = braid_delta(BraidWord(2, [1]), [2, 2])
    assert w.same_word(BraidWord(4, [2, 3, 1, 2]))
    assert braid_delta(BraidWord(2, [1]), [1, 2]).same_word(BraidWord(3, [2, 1]))
    assert braid_delta(BraidWord(2, [1]), [1, 2]).pi() == P.duplication(Perm([2, 1]), [1, 2])


@given(braid_words(max_len=6), st.data())
def test_cabling_covers_permutation_duplication(w, data):
    ks = data.draw(st.lists(st.integers(0, 3), min_size=w.n, max_size=w.n))
    assert braid_delta(w, ks).pi() == P.duplication(w.pi(), ks)


@given(st.lists(braid_words(max_len=4), min_size=1, max_size=3))
def test_block_sum_is_side_by_side(parts):
    b = braid_beta(parts)
    assert b.n == sum(p.n for p in parts)
    assert b.pi() == P.block_sum([p.pi() for p in parts])


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_full_twist_is_central(k):
    full = garside_half_twist(k) ** 2
    for i in range(1, k):
        s = BraidWord.generator(i, k)
        assert s * full == full * s
    assert garside_half_twist(k).pi() == P.reversal(k)
    if k > 2:
        half, s1 = garside_half_twist(k), BraidWord.generator(1, k)
        assert half * s1 != s1 * half


def test_garside_half_twist_conjugates_generators():
    d = garside_half_twist(4)
    for i in range(1, 4):
        assert d * BraidWord.generator(i, 4) == BraidWord.generator(4 - i, 4) * d


@pytest.mark.parametrize("text", ["s0", "x1", "s1^", "B2: s2"])
def test_braid_parse_errors(text):
    with pytest.raises(ParseError):
        parse_braid(text)


def test_braid_parse_forms():
    assert parse_braid("B4: s1 s2^-1").letters == (1, -2)
    assert parse_braid("s2^3").letters == (2, 2, 2)
    assert parse_braid("e").n == 1
    with pytest.raises(ArityError):
        parse_braid("B3: s1", n=4)


def test_braid_axioms_on_random_cases():
    budget = SampleBudget(max_total_arity=6, exhaustive_up_to=-1, random_cases=25, seed=5, max_word_length=6)
    reports = check_nine_axioms(BraidOperad(), budget) + [check_single_axiom(BraidOperad(), budget)]
    assert overall_status(reports) is Status.PASS


# -- ribbon braids -------------------------------------------------------------

def test_ribbon_relation_moves_twists_with_the_braid():
    s = RibbonElement.from_braid(BraidWord(3, [1]))
    t1 = RibbonElement.twist(1, 3)
    assert s * t1 == RibbonElement.twist(2, 3) * s
    assert (t1 * t1.inverse()) == RibbonElement.identity(3)


def test_ribbon_cabling_wraps_full_twists():
    x = RibbonElement.twist(1, 1)
    d = ribbon_delta(x, [2])
    assert d.twists == (1, 1)
    assert d.braid == garside_half_twist(2) ** 2
    assert ribbon_delta(RibbonElement.identity(2), [0, 3]) == RibbonElement.identity(3)


@given(st.integers(1, 4), st.data())
def test_ribbon_pi_forgets_twists(n, data):
    b = data.draw(braid_words(n=n))
    m = data.draw(st.lists(st.integers(-2, 2), min_size=n, max_size=n))
    x = RibbonElement(m, b)
    assert x.pi() == b.pi()
    assert x * x.inverse() == RibbonElement.identity(n)
    assert parse_ribbon(str(x)) == x


def test_ribbon_parse():
    assert parse_ribbon("t[1,0,-2] | s1 s2") == RibbonElement([1, 0, -2], BraidWord(3, [1, 2]))
    assert parse_ribbon("s1") == RibbonElement.from_braid(BraidWord(2, [1]))
    with pytest.raises(ParseError):
        parse_ribbon("t[1,x]")


@settings(max_examples=10)
@given(st.integers(0, 1000))
def test_ribbon_axioms_on_random_cases(seed):
    budget = SampleBudget(max_total_arity=5, exhaustive_up_to=-1, random_cases=5, seed=seed, max_word_length=5)
    assert overall_status(check_nine_axioms(RibbonOperad(), budget)) is Status.PASS

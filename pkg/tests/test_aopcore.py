import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from actionoperad import perm as P
from actionoperad.aopcore import (
    Equality,
    SampleBudget,
    Status,
    check_derived_laws,
    check_nine_axioms,
    check_pscomm_elements,
    check_simplicial_identities,
    check_single_axiom,
    check_surjective_or_zero,
    degeneracy_map,
    face_map,
    kernel_and_image,
    mu,
    overall_status,
)
from actionoperad.errors import ArityError, InvariantError
from actionoperad.instances import AbelianOperad, AbelianTuple, SymmetricOperad, TrivialOperad
from actionoperad.perm import Perm

SMALL = SampleBudget(max_total_arity=5, exhaustive_up_to=4, random_cases=20)


class DroppedTwist(SymmetricOperad):
    """Duplication forgets the permutation: violates the pi-compatibility of delta."""

    name = "broken-delta"

    def duplication(self, g, ks):
        return Perm.identity(sum(ks))


class SwappedBlocks(SymmetricOperad):
    """Block sum that reverses the order of the blocks."""

    name = "broken-beta"

    def block_sum(self, parts):
        return P.block_sum(list(reversed(parts)))


class Undecided(SymmetricOperad):
    name = "undecided"

    def equal(self, g, h):
        return Equality.EQUAL if g == h and g.n < 3 else Equality.UNKNOWN


@pytest.mark.parametrize("op", [SymmetricOperad(), TrivialOperad(), AbelianOperad(2)], ids=lambda o: o.name)
def test_nine_axioms_pass_on_finite_instances(op):
    reports = check_nine_axioms(op, SMALL)
    assert [r.axiom_id for r in reports] == [str(i) for i in range(1, 10)]
    assert all(r.status is Status.PASS for r in reports), [r.as_dict() for r in reports if not r.passed]
    assert check_single_axiom(op, SMALL).passed


def test_broken_duplication_is_caught_with_witness():
    reports = check_nine_axioms(DroppedTwist(), SampleBudget(4, 3, 0))
    failed = [r for r in reports if r.status is Status.FAIL]
    assert failed
    for r in failed:
        assert r.witness and "lhs" in r.witness and "rhs" in r.witness
    assert check_single_axiom(DroppedTwist(), SampleBudget(5, 5, 0)).status is Status.FAIL


def test_broken_block_sum_is_caught():
    reports = check_nine_axioms(SwappedBlocks(), SampleBudget(4, 3, 0))
    assert overall_status(reports) is Status.FAIL


def test_unknown_equality_makes_inconclusive_not_pass():
    r = check_nine_axioms(Undecided(), SampleBudget(4, 3, 0), ["3"])[0]
    assert r.status is Status.INCONCLUSIVE
    assert r.extra["unknown_cases"] > 0
    assert "first_unknown" in r.extra


def test_overall_status_precedence():
    base = check_nine_axioms(SymmetricOperad(), SampleBudget(2, 2, 0), ["1"])[0]
    assert overall_status([base]) is Status.PASS
    bad = check_nine_axioms(DroppedTwist(), SampleBudget(4, 3, 0), ["5"])[0]
    undecided = check_nine_axioms(Undecided(), SampleBudget(4, 3, 0), ["3"])[0]
    assert overall_status([base, undecided]) is Status.INCONCLUSIVE
    assert overall_status([undecided, bad]) is Status.FAIL


def test_report_json_round_trip():
    r = check_single_axiom(SymmetricOperad(), SampleBudget(3, 3, 5, seed=7))
    data = json.loads(r.to_json())
    assert data["axiom_id"] == "AO"
    assert data["status"] == "Pass"
    assert data["seed"] == 7
    assert data["cases_checked"] == r.cases_checked


def test_suites_are_deterministic_given_seed():
    a = check_nine_axioms(SymmetricOperad(), SampleBudget(6, 3, 30, seed=3))
    b = check_nine_axioms(SymmetricOperad(), SampleBudget(6, 3, 30, seed=3))
    assert [x.as_dict() for x in a] == [x.as_dict() for x in b]


@given(st.integers(0, 10_000))
@settings(max_examples=15)
def test_random_sigma_cases_pass_for_any_seed(seed):
    budget = SampleBudget(max_total_arity=7, exhaustive_up_to=-1, random_cases=10, seed=seed)
    assert overall_status(check_nine_axioms(SymmetricOperad(), budget)) is Status.PASS


@pytest.mark.parametrize("op", [SymmetricOperad(), AbelianOperad(3)], ids=lambda o: o.name)
def test_derived_laws(op):
    reports = check_derived_laws(op, SampleBudget(7, 5, 10))
    ids = {r.axiom_id for r in reports}
    assert {"unit", "identity-composition", "mu-associativity"} <= ids
    assert all(r.passed for r in reports)


def test_mu_examples():
    S = SymmetricOperad()
    assert mu(S, Perm([2, 1]), [Perm([1]), Perm([1, 2])]) == Perm([3, 1, 2])
    A = AbelianOperad(5)
    assert mu(A, AbelianTuple((1, 2)), [AbelianTuple((3,)), AbelianTuple((0, 4))]) == AbelianTuple((4, 2, 1))
    with pytest.raises(ArityError):
        mu(S, Perm([2, 1]), [Perm([1])])


def test_budget_validation():
    with pytest.raises(InvariantError):
        SampleBudget(max_total_arity=3, exhaustive_up_to=4)


def test_surjective_or_zero():
    assert check_surjective_or_zero(SymmetricOperad(), 5)["result"] == "AllSurjective"
    assert check_surjective_or_zero(TrivialOperad(), 5)["result"] == "AllZero"
    assert check_surjective_or_zero(AbelianOperad(2), 5)["result"] == "AllZero"


def test_face_and_degeneracy_examples():
    S = SymmetricOperad()
    assert face_map(S, Perm([2, 3, 1]), 0) == Perm([1, 2])
    assert degeneracy_map(S, Perm([2, 1]), 0) == Perm([3, 1, 2])
    assert face_map(S, Perm([1]), 0) == Perm([])
    with pytest.raises(ArityError):
        face_map(S, Perm([1, 2]), 2)


def test_simplicial_identities_sigma():
    reports = check_simplicial_identities(SymmetricOperad(), 3)
    assert all(r.passed for r in reports)
    assert all(r.cases_checked > 0 for r in reports)


def test_pscomm_transposition_perms():
    reports = check_pscomm_elements(SymmetricOperad(), P.transposition_perm, 4)
    assert [r.axiom_id for r in reports] == ["pscomm-pi", "pscomm-1", "pscomm-2", "pscomm-4", "pscomm-5",
                                            "pscomm-symmetry"]
    assert all(r.passed for r in reports)


def test_pscomm_rejects_identity_choice():
    reports = check_pscomm_elements(SymmetricOperad(), lambda m, n: Perm.identity(m * n), 3)
    assert reports[0].status is Status.FAIL
    assert reports[0].witness == {"m": 2, "n": 2, "lhs": "[1,2,3,4]", "rhs": "[1,3,2,4]"}


def test_kernel_and_image_of_reduction_mod_two():
    src, dst = AbelianOperad(4), AbelianOperad(2)
    ker, im = kernel_and_image(src, dst, lambda g: AbelianTuple(tuple(x % 2 for x in g.entries)), 3)
    for n in range(4):
        assert ker.order(n) == 2 ** n
        assert im.order(n) == 2 ** n
    assert ker.contains(AbelianTuple((2, 0, 2)))
    assert not ker.contains(AbelianTuple((1, 0, 2)))
    assert overall_status(check_nine_axioms(ker, SampleBudget(3, 3, 0))) is Status.PASS


def test_kernel_of_pi_on_sigma_is_trivial():
    ker, im = kernel_and_image(SymmetricOperad(), SymmetricOperad(), lambda g: g, 4)
    assert [ker.order(n) for n in range(5)] == [1, 1, 1, 1, 1]
    assert [im.order(n) for n in range(5)] == [math.factorial(n) for n in range(5)]


def test_kernel_and_image_rejects_non_homomorphisms():
    src = AbelianOperad(3)
    with pytest.raises(InvariantError):
        kernel_and_image(src, src, lambda g: AbelianTuple(tuple(min(x, 1) for x in g.entries)), 2)
    with pytest.raises(InvariantError):
        kernel_and_image(SymmetricOperad(), SymmetricOperad(), lambda g: Perm.identity(g.n), 2)

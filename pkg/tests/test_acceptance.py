"""Acceptance suite: one group of tests per criterion.

Run ``pytest tests/test_acceptance.py`` to see a PASS/FAIL line per criterion
at the end of the terminal summary.
"""

import itertools
import math
import time

import pytest

from actionoperad import perm as P
from actionoperad.aopcore import (
    SampleBudget,
    Status,
    check_nine_axioms,
    check_pscomm_elements,
    check_simplicial_identities,
    check_single_axiom,
    check_surjective_or_zero,
    mu,
)
from actionoperad.finoperad import (
    LambdaCollection,
    assoc_operad,
    check_monoid_is_operad,
    check_unit_counit,
    comm_operad,
    is_cartesian,
    lambda_as_operad,
    pullback,
    substitution_classes,
    substitution_product,
    symmetrize,
    unit_collection,
)
from actionoperad.freecat import discrete_category, el_one_is_blambda, hom_count, translation_category
from actionoperad.instances import (
    AbelianOperad,
    BraidOperad,
    CactusOperad,
    CactusWord,
    RibbonOperad,
    SymmetricOperad,
    TrivialOperad,
    cactus_delta,
    cactus_equal,
    cactus_pi,
    coboundary_commutor,
)
from actionoperad.instances.braid import BraidWord
from actionoperad.instances.cactus import reflect
from actionoperad.nonexamples import exhibit_axiom6_failure, exhibit_axiom8_failure
from actionoperad.perm import Perm
from actionoperad.presentation import check_presentation, sigma_presentation

from oracles import (
    block_diagonal,
    duplication_matrix,
    free_hom_count_oracle,
    matmul,
    matrix_perm,
    perm_matrix,
    substitution_orbits,
)
from samples import arrow_category

SIGMA = SymmetricOperad()
TRIV = TrivialOperad()
Z2 = AbelianOperad(2)
Z3 = AbelianOperad(3)

criterion = pytest.mark.criterion


# -- 1 ------------------------------------------------------------------------

@criterion(1, "nine axioms exhaustive at total arity 6")
def test_c1_nine_axioms_exhaustive():
    budget = SampleBudget(max_total_arity=6, exhaustive_up_to=6, random_cases=0)
    start = time.perf_counter()
    results = {op.name: check_nine_axioms(op, budget) for op in (SIGMA, TRIV, Z2, Z3)}
    elapsed = time.perf_counter() - start
    for name, reports in results.items():
        assert [r.status for r in reports] == [Status.PASS] * 9, name
    assert sum(r.cases_checked for r in results["sigma"]) >= 10_000
    assert elapsed < 60


# -- 2 ------------------------------------------------------------------------

@criterion(2, "braid and ribbon axioms on seeded random words")
@pytest.mark.parametrize("op", [BraidOperad(), RibbonOperad()], ids=lambda o: o.name)
def test_c2_braid_and_ribbon(op):
    budget = SampleBudget(max_total_arity=8, exhaustive_up_to=0, random_cases=500, seed=2024, max_word_length=8)
    start = time.perf_counter()
    reports = check_nine_axioms(op, budget) + [check_single_axiom(op, budget)]
    elapsed = time.perf_counter() - start
    assert all(r.status is Status.PASS for r in reports)  # an Unknown would show as Inconclusive
    assert sum(r.cases_checked for r in reports) >= 2000
    assert elapsed < 300


# -- 3 ------------------------------------------------------------------------

@criterion(3, "hyperoctahedral non-examples")
def test_c3_variant1_axiom8_witness():
    r = exhibit_axiom8_failure(1)
    assert r.status is Status.FAIL
    assert (r.witness["lhs"]["underlying"], r.witness["rhs"]["underlying"]) == ("(1 3 2)", "(1 2 3)")
    assert r.witness["lhs"]["column_signs"] == r.witness["rhs"]["column_signs"] == [1, -1, 1]


@criterion(3, "hyperoctahedral non-examples")
@pytest.mark.xfail(strict=True, reason="under column block sizes both sides of Axiom 6 agree on the displayed "
                                       "pair; see the decisions ledger")
def test_c3_variant2_axiom6_witness():
    assert exhibit_axiom6_failure(2, "column").status is Status.FAIL


# -- 4 ------------------------------------------------------------------------

@criterion(4, "block sum and duplication displays")
def test_c4_block_sum_and_duplication():
    b = P.block_sum([P.parse_perm("(1 2)"), Perm([1]), P.parse_perm("(1 2 3)")])
    assert P.format_perm(b, "cycle") == "(1 2)(4 5 6)"
    assert list(b.images) == matrix_perm(block_diagonal([perm_matrix([2, 1]), perm_matrix([1]),
                                                         perm_matrix([2, 3, 1])]))
    d = P.duplication(P.parse_perm("(1 2 3)"), [2, 1, 3])
    assert list(d.images) == [4, 5, 6, 1, 2, 3]
    assert list(d.images) == matrix_perm(duplication_matrix([2, 3, 1], [2, 1, 3]))


# -- 5 ------------------------------------------------------------------------

@criterion(5, "operadic composition in Sigma_9")
def test_c5_mu_strand_value():
    g = P.parse_perm("(1 2 3)")
    fs = [P.parse_perm("(1 2)"), P.parse_perm("(1 2)(3 4)"), P.parse_perm("(1 3)")]
    expected = [5, 4, 7, 6, 9, 8, 3, 2, 1]
    assert list(mu(SIGMA, g, fs).images) == expected
    # independently: delta(g) beta(f) as a product of 0/1 matrices
    dup = duplication_matrix(list(g.images), [2, 4, 3])
    blocks = block_diagonal([perm_matrix(list(f.images)) for f in fs])
    assert matrix_perm(matmul(dup, blocks)) == expected


# -- 6 ------------------------------------------------------------------------

@criterion(6, "surjective-or-zero classification")
@pytest.mark.parametrize("op,expected", [
    (SIGMA, "AllSurjective"), (BraidOperad(), "AllSurjective"), (RibbonOperad(), "AllSurjective"),
    (CactusOperad(), "AllSurjective"), (TRIV, "AllZero"), (Z2, "AllZero"), (Z3, "AllZero"),
], ids=lambda x: getattr(x, "name", x))
def test_c6_surjective_or_zero(op, expected):
    assert check_surjective_or_zero(op, 5)["result"] == expected


# -- 7 ------------------------------------------------------------------------

def _intervals(n):
    return [(p, q) for p in range(1, n + 1) for q in range(p + 1, n + 1)]


@criterion(7, "cactus relations and values")
def test_c7_cactus_relations():
    for n in range(2, 6):
        e = CactusWord(n)
        for a in _intervals(n):
            assert cactus_equal(CactusWord(n, [a, a]), e).name == "EQUAL"
        for a, b in itertools.product(_intervals(n), repeat=2):
            if a[1] < b[0]:
                assert cactus_equal(CactusWord(n, [a, b]), CactusWord(n, [b, a])).name == "EQUAL"
            if a != b and a[0] <= b[0] and b[1] <= a[1]:
                lhs, rhs = CactusWord(n, [a, b]), CactusWord(n, [reflect(a, b), a])
                assert cactus_equal(lhs, rhs).name == "EQUAL"


@criterion(7, "cactus relations and values")
def test_c7_cactus_values():
    assert cactus_delta(CactusWord(2, [(1, 2)]), [2, 3]) == CactusWord(5, [(1, 5), (1, 2), (3, 5)])
    for m in range(1, 4):
        for n in range(1, 5 - m):
            product = coboundary_commutor(m, n) * coboundary_commutor(n, m)
            assert cactus_equal(product, CactusWord(m + n)).name == "EQUAL"
    assert list(cactus_pi(CactusWord(3, [(1, 3)])).images) == [3, 2, 1]


# -- 8 ------------------------------------------------------------------------

@criterion(8, "free monoidal category hom-sets")
@pytest.mark.parametrize("lam", [SIGMA, TRIV, Z2], ids=lambda l: l.name)
def test_c8_hom_count_oracle(lam):
    categories = [discrete_category(["a", "b"]), translation_category(["a", "b"]), arrow_category()]
    for X in categories:
        for n in range(4):
            group = lam.sample_elements(n)
            for xs in itertools.product(X.objects, repeat=n):
                for ys in itertools.product(X.objects, repeat=n):
                    expected = free_hom_count_oracle(group, lam.multiply, lam.inverse,
                                                     lambda g: lam.pi(g).images, X.hom, xs, ys)
                    assert hom_count(X, xs, ys, lam) == expected


@criterion(8, "free monoidal category hom-sets")
def test_c8_el_one():
    for lam, order in [(SIGMA, math.factorial), (TRIV, lambda n: 1), (Z2, lambda n: 2 ** n)]:
        out = el_one_is_blambda(lam, 4)
        assert out["result"] == "Pass"
        assert out["hom_sizes"] == {n: order(n) for n in range(5)}


# -- 9 ------------------------------------------------------------------------

@criterion(9, "symmetrization counit")
def test_c9_counit_over_sigma_is_bijective():
    for Q in (comm_operad(SIGMA, 3), assoc_operad(SIGMA, 3)):
        out = check_unit_counit(pullback(Q, SIGMA), "counit")
        assert all(out["per_arity"][n]["bijective"] for n in range(4))


@criterion(9, "symmetrization counit")
@pytest.mark.parametrize("lam", [TRIV, Z2, Z3], ids=lambda l: l.name)
def test_c9_counit_not_injective(lam):
    out = check_unit_counit(pullback(comm_operad(SIGMA, 3), lam), "counit")
    assert not out["bijective"]
    a, b = out["witness"]["classes"]
    assert a != b


@criterion(9, "symmetrization counit")
def test_c9_symmetrized_size():
    assert symmetrize(lambda_as_operad(Z2, 3, "trivial")).size(2) == 8


# -- 10 -----------------------------------------------------------------------

@criterion(10, "cartesian criterion")
def test_c10_cartesian():
    out = is_cartesian(comm_operad(SIGMA, 3))
    assert out["result"] == "NotCartesian"
    assert (out["witness"]["p"], out["witness"]["pi_g"]) == ("*", "(1 2)")
    assert is_cartesian(assoc_operad(SIGMA, 3))["result"] == "Cartesian"
    for lam in (SIGMA, Z2, Z3):
        sets = {n: [(c, g) for c in range(2) for g in lam.sample_elements(n)] for n in range(4)}
        free = LambdaCollection(lam, 3, sets, lambda n, x, g, lam=lam: (x[0], lam.multiply(x[1], g)))
        assert is_cartesian(free)["result"] == "Cartesian"


# -- 11 -----------------------------------------------------------------------

@criterion(11, "substitution product")
@pytest.mark.parametrize("lam", [SIGMA, TRIV, Z2], ids=lambda l: l.name)
def test_c11_unit_laws_and_oracle(lam):
    I = unit_collection(lam, 3)
    for Y in (comm_operad(lam, 3), assoc_operad(lam, 3)):
        for k in range(4):
            assert substitution_product(I, Y, k) == Y.size(k) == substitution_product(Y, I, k)
            got = {frozenset(c) for c in substitution_classes(Y, Y, k)}
            assert got == {frozenset(c) for c in substitution_orbits(Y, Y, k)}


@criterion(11, "substitution product")
def test_c11_monoid_is_operad():
    for Pd in (comm_operad(SIGMA, 3), assoc_operad(SIGMA, 3)):
        assert all(r.passed for r in check_monoid_is_operad(Pd))


# -- 12 -----------------------------------------------------------------------

@criterion(12, "presentation replay")
def test_c12_sigma_presentation():
    out = check_presentation(sigma_presentation(), SIGMA, {"sigma": Perm([2, 1])}, n_max=4)
    assert out["relations_status"] == "Pass"
    assert out["generation"]["status"] == "Pass"
    assert all(v["reached"] == math.factorial(n) for n, v in out["generation"]["per_arity"].items())


@criterion(12, "presentation replay")
def test_c12_braid_distinguishes_the_relations():
    out = check_presentation(sigma_presentation(), BraidOperad(), {"sigma": BraidWord(2, [1])})
    assert {r["relation"]: r["status"] for r in out["relations"]} == {"rho1": "Fail", "rho2": "Pass"}


# -- 13 -----------------------------------------------------------------------

@criterion(13, "pseudo-commutativity elements")
def test_c13_pscomm():
    reports = check_pscomm_elements(SIGMA, P.transposition_perm, 6)
    assert {r.axiom_id for r in reports} == {"pscomm-pi", "pscomm-1", "pscomm-2", "pscomm-4", "pscomm-5",
                                             "pscomm-symmetry"}
    assert all(r.passed and r.cases_checked > 0 for r in reports)
    assert list(P.transposition_perm(2, 3).images) == [1, 3, 5, 2, 4, 6]


# -- 14 -----------------------------------------------------------------------

@criterion(14, "simplicial identities")
def test_c14_simplicial():
    assert all(r.passed for r in check_simplicial_identities(SIGMA, 4))
    assert all(r.passed for r in check_simplicial_identities(Z3, 4))
    budget = SampleBudget(max_total_arity=5, exhaustive_up_to=-1, random_cases=30, seed=1, max_word_length=4)
    reports = check_simplicial_identities(CactusOperad(), 4, budget)
    assert all(r.status is Status.PASS for r in reports)

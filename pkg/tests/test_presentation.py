import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from actionoperad.aopcore import mu
from actionoperad.errors import ParseError, TermTypeError
from actionoperad.instances import AbelianOperad, BraidOperad, SymmetricOperad, TrivialOperad
from actionoperad.instances.braid import BraidWord
from actionoperad.perm import Perm
from actionoperad.presentation import (
    SIGMA_PRESENTATION_TEXT,
    Gen,
    Id,
    Inv,
    Mul,
    OpMu,
    cactus_presentation_check,
    check_presentation,
    evaluate,
    evaluate_expression,
    format_presentation,
    generated_closure,
    parse_presentation,
    parse_term,
    sigma_presentation,
    term_arity,
    term_pi,
)

SIGMA = SymmetricOperad()
TYPING = {"sigma": Perm([2, 1])}


def terms(max_arity=4):
    """Random well-typed terms over one generator of arity 2."""

    def of_arity(n, depth):
        leaves = [st.just(Id(n))] + ([st.just(Gen("sigma"))] if n == 2 else [])
        if depth == 0:
            return st.one_of(leaves)
        sub = of_arity(n, depth - 1)
        unary = st.builds(lambda h, x: OpMu(h, (x,)), of_arity(1, depth - 1), sub)
        binary = st.integers(0, n).flatmap(lambda a: st.builds(
            lambda h, x, y: OpMu(h, (x, y)), of_arity(2, depth - 1), of_arity(a, depth - 1),
            of_arity(n - a, depth - 1)))
        return st.one_of(leaves + [st.builds(Mul, sub, sub), st.builds(Inv, sub), unary, binary])

    return st.integers(0, max_arity).flatmap(lambda n: of_arity(n, 2))


# -- parsing -------------------------------------------------------------------

def test_parse_term_structure():
    t = parse_term("mu(sigma; e1, e2) * inv(sigma)^2", ["sigma"])
    assert isinstance(t, Mul)
    with pytest.raises(TermTypeError):
        term_arity(t, TYPING)
    ok = parse_term("mu(sigma; e1, e2) * mu(e2; e1, sigma)", ["sigma"])
    assert term_arity(ok, TYPING) == 3
    assert term_pi(parse_term("sigma * sigma", ["sigma"]), TYPING) == Perm([1, 2])


@pytest.mark.parametrize("text", ["sigma *", "mu(sigma e1)", "tau", "e", "sigma^0", "(sigma", "sigma sigma"])
def test_parse_term_errors(text):
    with pytest.raises(ParseError) as info:
        parse_term(text, ["sigma"])
    assert info.value.column is not None


def test_presentation_round_trip():
    data = sigma_presentation()
    again = parse_presentation(format_presentation(data))
    assert again.generators == data.generators
    assert {k: (str(a), str(b)) for k, (a, b) in again.relations.items()} == \
        {k: (str(a), str(b)) for k, (a, b) in data.relations.items()}
    assert data.relation_types == {"rho1": Perm([1, 2]), "rho2": Perm([3, 1, 2])}


@pytest.mark.parametrize("text,line,column", [
    ("sigma: (1 2)\n", 1, 1),
    ("GENERATORS\nsigma: (1 2\n", 2, 7),
    ("GENERATORS\nsigma: (1 2)\nRELATIONS\nrho: sigma * = e2\n", 4, None),
    ("GENERATORS\nsigma: (1 2)\nRELATIONS\nrho: sigma\n", 4, 5),
    ("GENERATORS\nsigma: (1 2)\nRELATIONS\nrho: sigma = e3\n", None, None),
    ("GENERATORS\nmu: (1 2)\n", 2, 1),
])
def test_presentation_parse_errors(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_presentation(text)
    if line is not None:
        assert info.value.line == line
    if column is not None:
        assert info.value.column == column


def test_comments_and_blank_lines():
    text = "# header\n\n" + SIGMA_PRESENTATION_TEXT.replace("RELATIONS", "RELATIONS  # two of them")
    assert set(parse_presentation(text).relations) == {"rho1", "rho2"}


# -- evaluation -----------------------------------------------------------------

@given(terms())
def test_pi_of_evaluation_is_term_type(t):
    # evaluation into braids followed by pi agrees with the type computed on the term
    value = evaluate(t, BraidOperad(), {"sigma": BraidWord(2, [1])}, TYPING)
    assert value.pi() == term_pi(t, TYPING)
    assert evaluate(t, SIGMA, {"sigma": Perm([2, 1])}) == term_pi(t, TYPING)


@settings(max_examples=40)
@given(terms(max_arity=3), terms(max_arity=3))
def test_evaluation_is_a_homomorphism(a, b):
    assign = {"sigma": BraidWord(2, [1])}
    B = BraidOperad()
    if term_arity(a, TYPING) == term_arity(b, TYPING):
        assert evaluate(Mul(a, b), B, assign) == evaluate(a, B, assign) * evaluate(b, B, assign)
    assert evaluate(Inv(a), B, assign) == evaluate(a, B, assign).inverse()
    head = OpMu(Id(2), (a, b))
    assert evaluate(head, B, assign) == mu(B, B.identity(2), [evaluate(a, B, assign), evaluate(b, B, assign)])


def test_evaluate_requires_assignment():
    with pytest.raises(TermTypeError):
        check_presentation(sigma_presentation(), SIGMA, {})


def test_evaluate_expression_literals():
    assert evaluate_expression("mu((1 2 3); (1 2), (1 2)(3 4), (1 3))", SIGMA) == Perm([5, 4, 7, 6, 9, 8, 3, 2, 1])
    assert evaluate_expression("beta((1 2), e1, (1 2 3))", SIGMA) == Perm([2, 1, 3, 5, 6, 4])
    assert evaluate_expression("delta((1 2 3); 2, 1, 3)", SIGMA) == Perm([4, 5, 6, 1, 2, 3])
    assert evaluate_expression("s1 s2^-1 * s2", BraidOperad()) == BraidWord(3, [1])
    with pytest.raises(ParseError):
        evaluate_expression("mu([2,1]; [1],", SIGMA)
    with pytest.raises(TermTypeError):
        evaluate_expression("[2,1] * [1]", SIGMA)


# -- presentation checks ----------------------------------------------------

def test_sigma_presentation_in_sigma():
    out = check_presentation(sigma_presentation(), SIGMA, {"sigma": Perm([2, 1])}, n_max=4)
    assert out["status"] == "Pass"
    assert out["generation"]["per_arity"][4] == {"reached": 24, "order": 24}


def test_sigma_presentation_in_braids():
    out = check_presentation(sigma_presentation(), BraidOperad(), {"sigma": BraidWord(2, [1])})
    assert [r["status"] for r in out["relations"]] == ["Fail", "Pass"]
    assert out["generation"]["status"] == "Skipped"


def test_dropping_the_square_relation_passes_in_braids():
    out = check_presentation(sigma_presentation().without("rho1"), BraidOperad(), {"sigma": BraidWord(2, [1])})
    assert out["status"] == "Pass"


def test_trivial_target_reports_typing():
    T = TrivialOperad()
    out = check_presentation(sigma_presentation(), T, {"sigma": T.identity(2)})
    assert out["status"] == "Pass"
    assert out["typing"]["status"] == "Mismatch"


def test_generation_fails_for_a_proper_sub_operad():
    A = AbelianOperad(4)
    out = check_presentation(parse_presentation("GENERATORS\nx: (1)\nRELATIONS\nr: x * x = x * x\n"), A,
                             {"x": A.parse("[2]")}, n_max=2)
    assert out["generation"]["status"] == "Fail"
    assert out["generation"]["per_arity"][1] == {"reached": 2, "order": 4}


@pytest.mark.parametrize("n", range(6))
def test_transposition_generates_every_symmetric_group(n):
    pools, complete = generated_closure(SIGMA, [Perm([2, 1])], n)
    assert complete
    assert len(pools[n]) == math.factorial(n)


def test_closure_budget():
    pools, complete = generated_closure(SIGMA, [Perm([2, 1])], 5, max_elements=50)
    assert not complete


@pytest.mark.slow
def test_cactus_generated_by_first_generator():
    out = cactus_presentation_check(5)
    assert out["status"] == "Pass"
    assert all(g["reached"] for gens in out["generators"].values() for g in gens)
    assert all(c["result"] == "Equal" for c in out["coboundary_involution"])

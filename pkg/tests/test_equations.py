import pytest

from heq.psl2 import IDENTITY, ProjMat2
from heq.equations import (
    HContext,
    evaluate,
    format_eq_word,
    parse_eq_word,
    reduce_equation,
    render_equation,
    substitute,
)
from heq.freewords import free_reduce, parse_free_word, pq_to_matrix



def cyclic_reduce(word):
    word = free_reduce(word)
    while len(word) >= 2 and word[0] == -word[-1]:
        word = word[1:-1]
    return word


def conjugate_as_words(u, v):
    u, v = cyclic_reduce(u), cyclic_reduce(v)
    if len(u) != len(v):
        return False
    return any(u[i:] + u[:i] == v for i in range(max(1, len(u))))


def test_reduce_trivial_torsion_coefficient(ctx_43):
    # h2 h2 multiplies out to the identity matrix: the trivial equation
    eq = reduce_equation(parse_eq_word("h2 h2", ctx_43), ctx_43)
    assert eq.is_trivial() and eq.degree == 0


def test_reduce_cancels_x_pair(ctx_43):
    eq = reduce_equation(parse_eq_word("x x^-1", ctx_43), ctx_43)
    assert eq.is_trivial()


def test_reduce_conjugation_shape(ctx_43):
    eq = reduce_equation(parse_eq_word("h2 x h2^-1", ctx_43), ctx_43)
    assert eq.degree == 1
    h2 = ctx_43.h_mats[1]
    assert eq.coefficient_matrices() == (h2, h2.inv())
    assert eq.signs == (1,)
    assert not eq.is_trivial()


def test_reduce_cascades_through_torsion(ctx_43):
    # x h2 h2 x^-1 collapses entirely: trivial coefficient between x and x^-1
    eq = reduce_equation(parse_eq_word("x h2 h2 x^-1", ctx_43), ctx_43)
    assert eq.is_trivial()


def test_reduced_invariant_holds(ctx_43, rng):
    letters = [1, -1, 2, -2, 3, -3]
    for _ in range(100):
        word = tuple(rng.choice(letters) for _ in range(rng.randrange(12)))
        eq = reduce_equation(word, ctx_43)
        for i in range(1, eq.degree):
            if eq.coeffs[i][0] == IDENTITY:
                assert eq.signs[i - 1] == eq.signs[i]


def test_evaluate_examples(ctx_43):
    assert evaluate(parse_eq_word("x", ctx_43), ctx_43) == ProjMat2(5, 3, 3, 2)
    got = evaluate(parse_eq_word("h2 x h2^-1", ctx_43), ctx_43)
    assert got == pq_to_matrix(parse_free_word("q p q^-2 p^-1 q^-1"))
    assert evaluate((), ctx_43) == IDENTITY
    assert evaluate(reduce_equation((), ctx_43), ctx_43) == IDENTITY


def test_evaluate_is_homomorphism(ctx_44, rng):
    letters = [1, -1, 2, -2, 3, -3]
    for _ in range(50):
        u = tuple(rng.choice(letters) for _ in range(rng.randrange(8)))
        v = tuple(rng.choice(letters) for _ in range(rng.randrange(8)))
        assert evaluate(u + v, ctx_44) == evaluate(u, ctx_44) * evaluate(v, ctx_44)


def test_reduction_preserves_evaluation(ctx_44, rng):
    letters = [1, -1, 2, -2, 3, -3]
    for _ in range(100):
        word = tuple(rng.choice(letters) for _ in range(rng.randrange(14)))
        assert evaluate(reduce_equation(word, ctx_44), ctx_44) == evaluate(word, ctx_44)


def test_degree_balance_trivial(ctx_43):
    eq = reduce_equation(parse_eq_word("h1 x^2 h2 x^-2", ctx_43), ctx_43)
    assert eq.degree == 4 and eq.is_balanced() and not eq.is_trivial()
    const = reduce_equation(parse_eq_word("h1", ctx_43), ctx_43)
    assert const.degree == 0 and const.is_balanced() and not const.is_trivial()
    assert reduce_equation((), ctx_43).is_trivial()


def test_equality_by_matrices(ctx_43):
    # h2 = h2^-1 in PSL2(Z), so the two spellings are the same equation
    a = reduce_equation(parse_eq_word("h2 x h2", ctx_43), ctx_43)
    b = reduce_equation(parse_eq_word("h2 x h2^-1", ctx_43), ctx_43)
    assert a == b and hash(a) == hash(b)


def test_substitute_single_letter(ctx_43):
    assert substitute((1,), [(1,)]) == (1,)
    assert substitute((), [(1,)]) == ()
    with pytest.raises(IndexError):
        substitute((2,), [(1,)])


REFERENCE_W_TEXTS = [
    "h1", "x h1 x^-1", "x^-1 h1 x", "h2 x^-1 h1 x h2", "h2 h1 h2^-1",
    "h2 x h1 x^-1 h2^-1", "x^-1 h2 x h2^-1", "h2 x^-1 h2 x",
    "x h2 x^-1 h2^-1", "h2 x h2 x^-1", "x^3", "h2 x^3 h2^-1",
]


def test_substitute_paper_relator_matches_ninth_equation(ctx_44):
    ws = [parse_eq_word(t, ctx_44) for t in REFERENCE_W_TEXTS]
    # the relator v2 v1^-1 v2^-1 v1 v12^-1 in the reference numbering;
    # v12 sits at position 11 once the trivial generator is skipped
    relator = (2, -1, -2, 1, -11)
    got = substitute(relator, ws)
    want = parse_eq_word("h1 x^-1 h1^-1 x h1^-1 x^-1 h1 x^-2", ctx_44)
    # the reference form is the cyclic reduction of the literal substitution
    assert conjugate_as_words(got, want)
    assert evaluate(got, ctx_44) == IDENTITY
    assert evaluate(want, ctx_44) == IDENTITY


def test_substitute_paper_relator_matches_third_equation(ctx_44):
    ws = [parse_eq_word(t, ctx_44) for t in REFERENCE_W_TEXTS]
    relator = (-1, -2, -2, -1, 2, 2, 1, -5)  # v1^-1 v2^-2 v1^-1 v2^2 v1 v5^-1
    got = reduce_equation(substitute(relator, ws), ctx_44)
    want = reduce_equation(
        parse_eq_word("h1^-1 x h1^-2 x^-1 h1^-1 x h1^2 x^-1 h1 h2 h1^-1 h2^-1", ctx_44),
        ctx_44)
    assert got == want


def test_render_collects_powers(ctx_43):
    eq = reduce_equation(parse_eq_word("h1 x x h2 x^-1 x^-1", ctx_43), ctx_43)
    assert render_equation(eq, ctx_43) == "h1 x^2 h2 x^-2"
    assert render_equation(reduce_equation((), ctx_43), ctx_43) == "1"
    assert render_equation(reduce_equation((), ctx_43), ctx_43, matrices=True) == "I"


def test_render_matrix_form(ctx_43):
    eq = reduce_equation(parse_eq_word("h2 x h2^-1", ctx_43), ctx_43)
    assert render_equation(eq, ctx_43, matrices=True) == \
        "[[2,-5],[1,-2]] X [[2,-5],[1,-2]]"


def test_format_parse_round_trip(ctx_44, rng):
    letters = [1, -1, 2, -2, 3, -3]
    for _ in range(50):
        word = tuple(rng.choice(letters) for _ in range(rng.randrange(10)))
        text = format_eq_word(word, ctx_44)
        assert parse_eq_word(text, ctx_44) == word


def test_context_validates_words(h1, h2):
    from heq.words import decompose

    with pytest.raises(AssertionError):
        HContext((h1,), (decompose(h2),), h1, decompose(h1))

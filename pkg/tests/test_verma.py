"""Normal ordering, contravariant form, Gram analysis, sl(2) data."""

import random
from fractions import Fraction

import pytest

from chainalg import (
    AlgebraParams,
    Combination,
    apply_element,
    bracket,
    element,
    expectation,
    gen_f,
    gen_s,
    gram_matrix,
    hermitian_form,
    inertia,
    inner_chain,
    lowest_weight_vector_concrete,
    omega,
    sl2_triple,
    truncated_interior_norm_check,
    vacuum,
    weight_from_partition,
)
from chainalg.basis import to_b0
from chainalg.bracket import TriangularClass, classify
from chainalg.chains import act_tensor
from chainalg.checks import random_generator
from chainalg.verma import (
    expectation_random,
    pbw_words,
    raising_letters,
    render_word,
    word_size,
)
from chainalg.weights import Weight

P11 = AlgebraParams(1, 1)
P21 = AlgebraParams(2, 1)
P22 = AlgebraParams(2, 2)


def test_apply_lowering_annihilates_vacuum():
    w = weight_from_partition((1,), P11)
    low = element(P11, gen_f(1, 1, 1, 1, (), (1,)))
    assert apply_element(low, vacuum(P11), w).is_zero()


def test_apply_diagonal_scales_vacuum():
    w = weight_from_partition((1,), P11)
    diag = element(P11, gen_s((1,), (1,)))
    assert apply_element(diag, vacuum(P11), w).is_zero()  # eigenvalue 0
    counter = element(P11, gen_s((), ()))
    assert apply_element(counter, vacuum(P11), w) == vacuum(P11)  # eigenvalue 1


def test_apply_raising_parks_a_letter():
    w = weight_from_partition((1,), P11)
    g = gen_f(1, 1, 1, 1, (1,), ())
    out = apply_element(element(P11, g), vacuum(P11), w)
    assert out == Combination.term(P11, (g,))


def test_expectation_examples():
    w = weight_from_partition((1,), P11)
    assert expectation([], w) == 1
    low = element(P11, gen_f(1, 1, 1, 1, (), (1,)))
    rai = element(P11, gen_f(1, 1, 1, 1, (1,), ()))
    assert expectation([low, rai], w) == 1
    assert expectation([rai, rai], w) == 0
    assert expectation([element(P11, gen_s((1,), ()))], w) == 0


def test_hermitian_form_examples():
    w = weight_from_partition((1,), P11)
    rai = element(P11, gen_f(1, 1, 1, 1, (1,), ()))
    sig = element(P11, gen_s((1,), ()))
    assert hermitian_form([rai], [rai], w) == 1
    assert hermitian_form([sig], [sig], w) == 1
    assert hermitian_form([sig], [rai], w) == 1


def test_contravariance_of_hermitian_form():
    rng = random.Random(31)
    w = weight_from_partition((2, 1), P22)
    for _ in range(40):
        x = element(P22, random_generator(rng, P22))
        e1 = [element(P22, random_generator(rng, P22))]
        e2 = [element(P22, random_generator(rng, P22))]
        assert hermitian_form([x] + e1, e2, w) == hermitian_form(e1, [omega(x)] + e2, w)


def test_pbw_words_are_ordered_and_bounded():
    for params in (P11, P22):
        words = pbw_words(params, 3)
        assert words[0] == ()
        for word in words:
            assert word_size(word) <= 3
            for g in word:
                assert classify(g) is TriangularClass.RAISING
            from chainalg.core import gen_key

            keys = [gen_key(g) for g in word]
            assert all(a >= b for a, b in zip(keys, keys[1:]))
        assert len(set(words)) == len(words)


def test_gram_block_example():
    w = weight_from_partition((1,), P11)
    gm = gram_matrix(w, 2)
    sig = (gen_s((1,), ()),)
    f_word = (gen_f(1, 1, 1, 1, (1,), ()),)
    i, j = gm.words.index(sig), gm.words.index(f_word)
    assert gm[i, i] == gm[i, j] == gm[j, i] == gm[j, j] == 1


def test_gram_zero_weight():
    w = Weight(P11, mode="af")
    gm = gram_matrix(w, 2)
    for i, wi in enumerate(gm.words):
        for j in range(len(gm.words)):
            if wi or gm.words[j]:
                assert gm[i, j] == 0
            else:
                assert gm[i, j] == 1


def test_gram_bound_zero():
    w = weight_from_partition((2,), P11)
    gm = gram_matrix(w, 0)
    assert gm.words == [()]
    assert gm.entries == [[Fraction(1)]]


def test_gram_is_symmetric():
    w = weight_from_partition((2, 1), P22)
    gm = gram_matrix(w, 2)
    n = len(gm.words)
    for i in range(n):
        for j in range(n):
            assert gm[i, j] == gm[j, i]


def test_inertia_examples():
    res = inertia([[Fraction(1), Fraction(1)], [Fraction(1), Fraction(1)]])
    assert (res.n_pos, res.n_zero, res.n_neg) == (1, 1, 0)
    (vec,) = res.radical
    assert vec[0] == -vec[1] != 0
    res = inertia([[Fraction(1), 0, 0], [0, Fraction(1), 0], [0, 0, Fraction(1)]])
    assert (res.n_pos, res.n_zero, res.n_neg) == (3, 0, 0)
    res = inertia([[Fraction(0)]])
    assert (res.n_pos, res.n_zero, res.n_neg) == (0, 1, 0)
    res = inertia([[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]])
    assert (res.n_pos, res.n_zero, res.n_neg) == (1, 0, 1)


def test_inertia_radical_annihilates_matrix():
    w = weight_from_partition((2,), P21)
    gm = gram_matrix(w, 2)
    res = inertia(gm)
    n = len(gm.words)
    for vec in res.radical:
        for col in range(n):
            assert sum(vec[i] * gm[i, col] for i in range(n)) == 0
    assert res.n_pos + res.n_zero + res.n_neg == n


def test_sl2_triple_example():
    e, h, f = sl2_triple((1,), (), (1, 1, 1, 1), P11)
    expect_h = element(
        P11,
        (1, gen_f(1, 1, 1, 1, (1,), (1,))),
        (-1, gen_f(1, 1, 1, 1, (), ())),
    )
    assert h == expect_h
    assert to_b0(bracket(h, e) - e.scaled(2), P11).is_zero()
    assert to_b0(bracket(h, f) + f.scaled(2), P11).is_zero()
    assert to_b0(bracket(e, f) - h, P11).is_zero()
    # swapping the raiser and lowerer negates the middle element
    w = weight_from_partition((1,), P11)
    assert expectation([h], w) == -1
    assert w.h_I(1, (), 1) - w.h_I(1, (1,), 1) == 1


def test_sl2_triple_rejects_bad_order():
    with pytest.raises(ValueError):
        sl2_triple((), (1,), (1, 1, 1, 1), P11)
    with pytest.raises(ValueError):
        sl2_triple((1,), (1,), (1, 1, 1, 1), P11)


def test_sl2_relations_random():
    rng = random.Random(33)
    from chainalg.bracket import index_words
    from chainalg.core import seq_key

    w = weight_from_partition((2, 1), P22)
    done = 0
    while done < 30:
        g = random_generator(rng, P22)
        if g.kind != "f":
            continue
        up, lo = index_words(g)
        if not seq_key(up) > seq_key(lo):
            continue
        done += 1
        e, h, f = sl2_triple(g.upper, g.lower, g.flavors, P22)
        assert to_b0(bracket(h, e) - e.scaled(2), P22).is_zero()
        assert to_b0(bracket(h, f) + f.scaled(2), P22).is_zero()
        assert to_b0(bracket(e, f) - h, P22).is_zero()
        l1, l2, l3, l4 = g.flavors
        diff = w.h_I(l2, g.lower, l4) - w.h_I(l1, g.upper, l3)
        assert expectation([h], w) == -diff
        assert diff >= 0 and diff.denominator == 1


def test_straightening_order_independence():
    rng = random.Random(34)
    w = weight_from_partition((2, 1), P22)
    for _ in range(25):
        word = [element(P22, random_generator(rng, P22)) for _ in range(rng.randint(1, 3))]
        assert expectation(word, w) == expectation_random(word, w, rng)


def test_module_pairing_matches_concrete_model():
    for params in (P11, P22):
        words = pbw_words(params, 2)
        for gamma in ((1,), (2,), (1, 1)):
            w = weight_from_partition(gamma, params)
            v = lowest_weight_vector_concrete(gamma, params)
            norm = inner_chain(v, v)
            images = []
            for word in words:
                state = v
                for g in reversed(word):
                    state = act_tensor(element(params, g), state)
                images.append(state)
            for i in range(len(words)):
                ei = [element(params, g) for g in words[i]]
                for j in range(i, len(words)):
                    ej = [element(params, g) for g in words[j]]
                    assert hermitian_form(ei, ej, w) == inner_chain(images[i], images[j]) / norm


def test_radical_vectors_vanish_in_concrete_model():
    for params, gamma in ((P11, (2,)), (P21, (1, 1)), (P22, (1,))):
        w = weight_from_partition(gamma, params)
        gm = gram_matrix(w, 2)
        res = inertia(gm)
        assert res.n_neg == 0
        v = lowest_weight_vector_concrete(gamma, params)
        images = []
        for word in gm.words:
            state = v
            for g in reversed(word):
                state = act_tensor(element(params, g), state)
            images.append(state)
        for vec in res.radical:
            total = Combination.zero(params)
            for c, img in zip(vec, images):
                if c:
                    total = total + img.scaled(c)
            assert total.is_zero()


def test_truncated_interior_norm_examples():
    assert truncated_interior_norm_check((2,), (1,), 0, (1,), P21)
    assert truncated_interior_norm_check((2,), (1,), 1, (2,), P21)
    assert truncated_interior_norm_check((1, 1), (1,), 0, (1,), P21)
    # zero weight: both sides vanish
    assert truncated_interior_norm_check((2,), (1,), 0, (), P21)


def test_truncated_interior_norm_stabilizes():
    from chainalg.verma import truncated_interior_element
    from chainalg.weights import weight_from_partition as wfp

    w = wfp((1,), P21)
    gamma = (1,)
    vals = []
    for depth in (2, 3):
        sigma = element(P21, gen_s((2,), (1,)))
        value = hermitian_form([sigma], [sigma], w)
        from chainalg.verma import _padding_pairs, _splitting_count

        for left, right in _padding_pairs(P21, depth):
            s = _splitting_count((2,), (1,), left, right)
            for l1 in P21.flavor_range():
                for l2 in P21.flavor_range():
                    value -= s * (
                        w.h_I(l1, left + (1,) + right, l2)
                        - w.h_I(l1, left + (2,) + right, l2)
                    )
        vals.append(value)
    assert vals[0] == vals[1]


def test_raising_letters_are_b4_raising():
    from chainalg.basis import in_b4

    for params in (P11, P22):
        for g in raising_letters(params, 3):
            assert in_b4(g)
            assert classify(g) is TriangularClass.RAISING


def test_render_word():
    assert render_word(()) == "1"
    assert render_word((gen_s((1,), ()),)) == "s[1|]"

"""Lowest-weight modules: normal ordering, Hermitian form, Gram analysis.

Module states are combinations of words of raising basis-b4 letters,
weakly descending in the generator ordering.  A letter multiplied onto a
word is straightened by adjacent transpositions, each producing a
commutator term on a strictly shorter word; diagonal letters reaching
the vacuum evaluate through the weight tables, lowering letters
annihilate it.

The contravariant form of two words is the vacuum coefficient of the
first word's image under the anti-involution times the second word.
Gram matrices are analyzed by exact congruence elimination, giving the
signature and a basis of the radical.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass
from fractions import Fraction

from .basis import enumerate_generators, in_b4, to_b4
from .bracket import TriangularClass, bracket, bracket_gen, classify, index_words
from .chains import act_tensor, inner_chain, lowest_weight_vector_concrete
from .core import (
    AlgebraParams,
    Combination,
    Element,
    Generator,
    gen_f,
    gen_key,
    gen_s,
    omega,
    omega_gen,
    render_generator,
    seq_key,
)
from .weights import Weight, weight_from_partition

PbwWord = tuple  # tuple of Generators, weakly descending in gen_key

VermaState = Combination  # keys: PbwWord


def vacuum(params: AlgebraParams) -> VermaState:
    return Combination.term(params, ())


def letter_size(g: Generator) -> int:
    return len(g.upper) + len(g.lower) + 1


def word_size(word: PbwWord) -> int:
    return sum(letter_size(g) for g in word)


def render_word(word: PbwWord) -> str:
    if not word:
        return "1"
    return "*".join(render_generator(g) for g in word)


# ---------------------------------------------------------------------------
# normal ordering

_CACHES: "weakref.WeakKeyDictionary[Weight, dict]" = weakref.WeakKeyDictionary()


def _cache_for(w: Weight) -> dict:
    cache = _CACHES.get(w)
    if cache is None:
        cache = {}
        _CACHES[w] = cache
    return cache


def insert_letter(x: Generator, word: PbwWord, w: Weight) -> VermaState:
    """Normal-ordered state of x applied to an ordered word on the vacuum."""
    cache = _cache_for(w)
    key = (x, word)
    hit = cache.get(key)
    if hit is not None:
        return hit
    params = w.params
    cls = classify(x)
    if not word:
        if cls is TriangularClass.RAISING:
            out = Combination.term(params, (x,))
        elif cls is TriangularClass.DIAGONAL:
            out = Combination.term(params, (), w.diagonal_eigenvalue(x))
        else:
            out = Combination.zero(params)
    elif cls is TriangularClass.RAISING and gen_key(x) >= gen_key(word[0]):
        out = Combination.term(params, (x,) + word)
    else:
        head, rest = word[0], word[1:]
        out = Combination.zero(params)
        for u, c in insert_letter(x, rest, w):
            out = out + insert_letter(head, u, w).scaled(c)
        for z, c in to_b4(bracket_gen(x, head, params), params):
            out = out + insert_letter(z, rest, w).scaled(c)
    cache[key] = out
    return out


def apply_element(e: Element, state: VermaState, w: Weight) -> VermaState:
    """Left action of an algebra element on a module state."""
    if e.params != w.params or state.params != w.params:
        raise ValueError("algebra parameter mismatch")
    out = Combination.zero(w.params)
    for g, c in to_b4(e):
        for u, s in state:
            out = out + insert_letter(g, u, w).scaled(c * s)
    return out


def expectation(word, w: Weight) -> Fraction:
    """Vacuum coefficient after applying the listed elements right to left."""
    state = vacuum(w.params)
    for e in reversed(list(word)):
        state = apply_element(e, state, w)
        if state.is_zero():
            break
    return state.get(())


def hermitian_form(e1, e2, w: Weight) -> Fraction:
    """Contravariant pairing of two operator words applied to the vacuum."""
    conj = [omega(e) for e in reversed(list(e1))]
    return expectation(conj + list(e2), w)


def _is_normal(word: tuple) -> bool:
    if any(classify(x) is not TriangularClass.RAISING for x in word):
        return False
    keys = [gen_key(x) for x in word]
    return all(a >= b for a, b in zip(keys, keys[1:]))


def reduce_word_random(word: tuple, w: Weight, rng) -> VermaState:
    """Normal-order a raw letter word by randomly chosen legal local moves.

    Exists to cross-check the deterministic straightening: the result
    must not depend on the order in which transpositions and vacuum
    evaluations are applied.
    """
    params = w.params
    out = Combination.zero(params)
    stack = [(tuple(word), Fraction(1))]
    while stack:
        cur, coeff = stack.pop()
        if _is_normal(cur):
            out = out + Combination.term(params, cur, coeff)
            continue
        moves = []
        if cur and classify(cur[-1]) is not TriangularClass.RAISING:
            moves.append(("end", len(cur) - 1))
        for i in range(len(cur) - 1):
            x, y = cur[i], cur[i + 1]
            if classify(x) is not TriangularClass.RAISING:
                moves.append(("swap", i))
            elif gen_key(x) < gen_key(y):
                moves.append(("swap", i))
        kind, i = moves[rng.randrange(len(moves))]
        if kind == "end":
            x = cur[-1]
            if classify(x) is TriangularClass.DIAGONAL:
                stack.append((cur[:-1], coeff * w.diagonal_eigenvalue(x)))
            # lowering letters annihilate the vacuum: drop the word
            continue
        x, y = cur[i], cur[i + 1]
        stack.append((cur[:i] + (y, x) + cur[i + 2 :], coeff))
        for z, c in to_b4(bracket_gen(x, y, params), params):
            stack.append((cur[:i] + (z,) + cur[i + 2 :], coeff * c))
    return out


def expectation_random(word, w: Weight, rng) -> Fraction:
    """Vacuum coefficient via randomized straightening of the expanded product."""
    raw_words = [((), Fraction(1))]
    for e in word:
        expanded = []
        for prefix, coeff in raw_words:
            for g, c in to_b4(e):
                expanded.append((prefix + (g,), coeff * c))
        raw_words = expanded
    total = Fraction(0)
    for raw, coeff in raw_words:
        total += coeff * reduce_word_random(raw, w, rng).get(())
    return total


# ---------------------------------------------------------------------------
# word enumeration and Gram matrices

def raising_letters(params: AlgebraParams, max_size: int) -> list:
    """Basis-b4 raising generators of letter size at most max_size, descending."""
    letters = [
        g
        for g in enumerate_generators(params, max_size - 1)
        if in_b4(g) and classify(g) is TriangularClass.RAISING
    ]
    letters.sort(key=gen_key, reverse=True)
    return letters


def pbw_words(params: AlgebraParams, max_size: int) -> list:
    """All weakly descending letter words of total size at most max_size."""
    letters = raising_letters(params, max_size)
    sizes = [letter_size(g) for g in letters]
    out = []

    def rec(start: int, budget: int, acc: list):
        out.append(tuple(acc))
        for i in range(start, len(letters)):
            if sizes[i] <= budget:
                acc.append(letters[i])
                rec(i, budget - sizes[i], acc)
                acc.pop()

    rec(0, max_size, [])
    out.sort(key=lambda word: (word_size(word), [gen_key(g) for g in word]))
    return out


@dataclass
class GramMatrix:
    words: list  # PbwWord index
    entries: list  # square matrix of Fractions

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


def gram_matrix(w: Weight, max_word_size: int) -> GramMatrix:
    """Contravariant pairings of every word pair within the size bound."""
    words = pbw_words(w.params, max_word_size)
    n = len(words)
    entries = [[Fraction(0)] * n for _ in range(n)]
    conj = {word: [omega_gen(x) for x in word] for word in words}
    for j in range(n):
        base = Combination.term(w.params, words[j])
        for i in range(j + 1):
            state = base
            for x in conj[words[i]]:
                if state.is_zero():
                    break
                nxt = Combination.zero(w.params)
                for u, s in state:
                    nxt = nxt + insert_letter(x, u, w).scaled(s)
                state = nxt
            val = state.get(())
            entries[i][j] = val
            entries[j][i] = val
    return GramMatrix(words, entries)


@dataclass
class Inertia:
    n_pos: int
    n_zero: int
    n_neg: int
    radical: list  # rows of coordinates in the word basis


def inertia(m: GramMatrix | list) -> Inertia:
    """Exact signature and radical basis by symmetric congruence elimination."""
    entries = m.entries if isinstance(m, GramMatrix) else m
    n = len(entries)
    a = [[Fraction(v) for v in row] for row in entries]
    for i in range(n):
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise ValueError("inertia requires a symmetric matrix")
    t = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    remaining = list(range(n))
    n_pos = n_neg = 0
    while remaining:
        pivot = next((k for k in remaining if a[k][k]), None)
        if pivot is None:
            off = next(
                ((i, j) for i in remaining for j in remaining if i != j and a[i][j]),
                None,
            )
            if off is None:
                break
            i, j = off
            for c in range(n):
                a[i][c] += a[j][c]
            for r in range(n):
                a[r][i] += a[r][j]
            for c in range(n):
                t[i][c] += t[j][c]
            continue
        d = a[pivot][pivot]
        if d > 0:
            n_pos += 1
        else:
            n_neg += 1
        others = [i for i in remaining if i != pivot]
        factors = {i: a[i][pivot] / d for i in others}
        for i in others:
            f = factors[i]
            if not f:
                continue
            for c in range(n):
                a[i][c] -= f * a[pivot][c]
                t[i][c] -= f * t[pivot][c]
        for i in others:
            f = factors[i]
            if not f:
                continue
            for r in range(n):
                a[r][i] -= f * a[r][pivot]
        remaining.remove(pivot)
    radical = [list(t[i]) for i in remaining]
    return Inertia(n_pos, len(remaining), n_neg, radical)


# ---------------------------------------------------------------------------
# sl(2) triples

def sl2_triple(upper, lower, flavors, params: AlgebraParams):
    """(e, h, f) with [h,e]=2e, [h,f]=-2f, [e,f]=h from one whole-chain raiser."""
    l1, l2, l3, l4 = flavors
    e_gen = gen_f(l1, l2, l3, l4, tuple(upper), tuple(lower))
    up, lo = index_words(e_gen)
    if not seq_key(up) > seq_key(lo):
        raise ValueError("upper index word must exceed the lower one")
    e = Combination.term(params, e_gen)
    f_elt = omega(e)
    h_elt = bracket(e, f_elt)
    return e, h_elt, f_elt


# ---------------------------------------------------------------------------
# truncated interior operators and their norms

def _splitting_count(upper, lower, left, right) -> int:
    """Number of outer-padding pairs reproducing both padded words at once."""
    word_up = left + upper + right
    word_lo = left + lower + right
    count = 0
    for a in range(len(left) + len(right) + 1):
        k1 = word_up[:a]
        if word_up[a : a + len(upper)] != upper:
            continue
        l1 = word_up[a + len(upper) :]
        if (
            word_lo[:a] == k1
            and word_lo[a : a + len(lower)] == lower
            and word_lo[a + len(lower) :] == l1
        ):
            count += 1
    return count


def _padding_pairs(params: AlgebraParams, depth: int):
    import itertools

    for a in range(depth + 1):
        for left in itertools.product(params.color_range(), repeat=a):
            for b in range(depth + 1 - a):
                for right in itertools.product(params.color_range(), repeat=b):
                    yield left, right


def truncated_interior_element(upper, lower, depth: int, params: AlgebraParams) -> Element:
    """Interior operator minus its whole-chain corrections up to a padding depth."""
    upper, lower = tuple(upper), tuple(lower)
    items = [(gen_s(upper, lower), Fraction(1))]
    for left, right in _padding_pairs(params, depth):
        for l1 in params.flavor_range():
            for l2 in params.flavor_range():
                items.append(
                    (gen_f(l1, l1, l2, l2, left + upper + right, left + lower + right), -1)
                )
    return Combination.from_items(params, items)


def truncated_interior_norm_check(upper, lower, depth, gamma, params: AlgebraParams) -> bool:
    """Norm identity for the truncated interior operator on a partition weight.

    The interior pairing minus the padded whole-chain corrections must be
    non-negative and must equal the squared norm of the truncated
    operator applied to the concrete symmetrized tensor vector.
    """
    upper, lower = tuple(upper), tuple(lower)
    w = weight_from_partition(gamma, params)
    sigma = Combination.term(params, gen_s(upper, lower))
    value = hermitian_form([sigma], [sigma], w)
    for left, right in _padding_pairs(params, depth):
        s = _splitting_count(upper, lower, left, right)
        for l1 in params.flavor_range():
            for l2 in params.flavor_range():
                value -= s * (
                    w.h_I(l1, left + lower + right, l2)
                    - w.h_I(l1, left + upper + right, l2)
                )
    v = lowest_weight_vector_concrete(gamma, params)
    image = act_tensor(truncated_interior_element(upper, lower, depth, params), v)
    concrete = inner_chain(image, image) / inner_chain(v, v)
    return value == concrete and value >= 0

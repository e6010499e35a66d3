"""Verification suites shared by the CLI check command and the test suite."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .basis import independence_check_b0, to_b0
from .bracket import bracket, sigma_left_expansion, sigma_right_expansion
from .chains import (
    act,
    act_tensor,
    all_chains,
    chain_state,
    equal_on_chains,
    inner_chain,
    lowest_weight_vector_concrete,
)
from .core import (
    AlgebraParams,
    Combination,
    Element,
    Generator,
    gen_f,
    gen_l,
    gen_r,
    gen_s,
)
from .verma import hermitian_form, pbw_words
from .weights import weight_from_partition


def random_generator(rng: random.Random, params: AlgebraParams, max_seq: int = 2) -> Generator:
    def seq():
        n = rng.randint(0, max_seq)
        return tuple(rng.randint(1, params.colors) for _ in range(n))

    def fl():
        return rng.randint(1, params.flavors)

    kind = rng.randrange(4)
    if kind == 0:
        return gen_f(fl(), fl(), fl(), fl(), seq(), seq())
    if kind == 1:
        return gen_l(fl(), fl(), seq(), seq())
    if kind == 2:
        return gen_r(fl(), fl(), seq(), seq())
    return gen_s(seq(), seq())


def random_element(
    rng: random.Random, params: AlgebraParams, max_terms: int = 3, max_seq: int = 2
) -> Element:
    items = []
    for _ in range(rng.randint(1, max_terms)):
        num = rng.randint(-3, 3) or 1
        den = rng.randint(1, 3)
        items.append((random_generator(rng, params, max_seq), Fraction(num, den)))
    return Combination.from_items(params, items)


def _param_cycle():
    return (
        AlgebraParams(1, 1),
        AlgebraParams(2, 1),
        AlgebraParams(1, 2),
        AlgebraParams(2, 2),
    )


# ---------------------------------------------------------------------------

def suite_jacobi(params=None, seed=0, cases=200, max_len=4, max_seq=2):
    """Antisymmetry and the Jacobi identity in canonical form, random triples."""
    del max_len
    rng = random.Random(seed)
    param_list = (params,) if params else _param_cycle()
    failures = 0
    for n in range(cases):
        p = param_list[n % len(param_list)]
        a = Combination.term(p, random_generator(rng, p, max_seq))
        b = Combination.term(p, random_generator(rng, p, max_seq))
        c = Combination.term(p, random_generator(rng, p, max_seq))
        if not to_b0(bracket(a, b) + bracket(b, a), p).is_zero():
            failures += 1
            continue
        jac = (
            bracket(bracket(a, b), c)
            + bracket(bracket(b, c), a)
            + bracket(bracket(c, a), b)
        )
        if not to_b0(jac, p).is_zero():
            failures += 1
    ok = failures == 0
    return ok, [f"jacobi: {cases - failures}/{cases} random triples pass"]


def suite_identities(params=None, seed=0, cases=0, max_len=5, max_total=3):
    """Interior-operator expansions and whole-chain sum identities on chains."""
    del seed, cases
    param_list = (params,) if params else (AlgebraParams(1, 1), AlgebraParams(2, 2))
    lines = []
    ok = True
    for p in param_list:
        checked = 0
        bad = 0
        for up, lo in _seq_pairs(p, max_total):
            sig = Combination.term(p, gen_s(up, lo))
            for expansion in (
                sigma_left_expansion(gen_s(up, lo), p),
                sigma_right_expansion(gen_s(up, lo), p),
            ):
                checked += 1
                if not equal_on_chains(sig, expansion, max_len):
                    bad += 1
            for l1 in p.flavor_range():
                for l2 in p.flavor_range():
                    checked += 2
                    if not _gg_left(p, l1, l2, up, lo, max_len):
                        bad += 1
                    if not _gg_right(p, l1, l2, up, lo, max_len):
                        bad += 1
            checked += 1
            if not _gg_interior(p, up, lo, max_len):
                bad += 1
        lines.append(
            f"identities (colors={p.colors}, flavors={p.flavors}): "
            f"{checked - bad}/{checked} pass"
        )
        ok = ok and bad == 0
    return ok, lines


def _seq_pairs(params: AlgebraParams, max_total: int):
    for a in range(max_total + 1):
        for b in range(max_total + 1 - a):
            for up in itertools.product(params.color_range(), repeat=a):
                for lo in itertools.product(params.color_range(), repeat=b):
                    yield up, lo


def _tails(params: AlgebraParams, max_len: int):
    for n in range(max_len + 1):
        yield from itertools.product(params.color_range(), repeat=n)


def _gg_left(params, l1, l2, up, lo, max_len) -> bool:
    lhs = Combination.term(params, gen_l(l1, l2, up, lo))
    items = []
    for tail in _tails(params, max_len):
        for l3 in params.flavor_range():
            items.append((gen_f(l1, l2, l3, l3, up + tail, lo + tail), 1))
    return equal_on_chains(lhs, Combination.from_items(params, items), max_len)


def _gg_right(params, l1, l2, up, lo, max_len) -> bool:
    lhs = Combination.term(params, gen_r(l1, l2, up, lo))
    items = []
    for head in _tails(params, max_len):
        for l3 in params.flavor_range():
            items.append((gen_f(l3, l3, l1, l2, head + up, head + lo), 1))
    return equal_on_chains(lhs, Combination.from_items(params, items), max_len)


def _gg_interior(params, up, lo, max_len) -> bool:
    lhs = Combination.term(params, gen_s(up, lo))
    items = []
    for head in _tails(params, max_len):
        for tail in _tails(params, max_len - len(head)):
            for l1 in params.flavor_range():
                for l2 in params.flavor_range():
                    items.append((gen_f(l1, l1, l2, l2, head + up + tail, head + lo + tail), 1))
    return equal_on_chains(lhs, Combination.from_items(params, items), max_len)


def suite_independence(params=None, seed=0, cases=0, max_len=0):
    """Exact-rank independence of the canonical basis at desk scale."""
    del seed, cases, max_len
    param_list = (params,) if params else (AlgebraParams(1, 1), AlgebraParams(2, 2))
    lines = []
    ok = True
    for p in param_list:
        for max_size, chain_len in ((1, 3), (2, 4)):
            good = independence_check_b0(p, max_size, chain_len)
            lines.append(
                f"independence (colors={p.colors}, flavors={p.flavors}, "
                f"size<={max_size}, chains<={chain_len}): {'ok' if good else 'FAIL'}"
            )
            ok = ok and good
    return ok, lines


def suite_oracle(params=None, seed=0, cases=0, max_len=0, word_size=2):
    """Module pairings against the symmetrized tensor model, word pairs."""
    del seed, cases, max_len
    param_list = (params,) if params else (AlgebraParams(1, 1), AlgebraParams(2, 2))
    lines = []
    ok = True
    for p in param_list:
        words = pbw_words(p, word_size)
        for gamma in ((1,), (2,), (1, 1)):
            w = weight_from_partition(gamma, p)
            v = lowest_weight_vector_concrete(gamma, p)
            norm = inner_chain(v, v)
            images = [_act_word(word, v, p) for word in words]
            bad = 0
            for i, wi in enumerate(words):
                ei = [Combination.term(p, x) for x in wi]
                for j in range(i, len(words)):
                    lhs = hermitian_form(ei, [Combination.term(p, x) for x in words[j]], w)
                    rhs = inner_chain(images[i], images[j]) / norm
                    if lhs != rhs:
                        bad += 1
            total = len(words) * (len(words) + 1) // 2
            lines.append(
                f"oracle (colors={p.colors}, flavors={p.flavors}, gamma={gamma}): "
                f"{total - bad}/{total} word pairs match"
            )
            ok = ok and bad == 0
    return ok, lines


def _act_word(word, state, params):
    out = state
    for g in reversed(word):
        out = act_tensor(Combination.term(params, g), out)
    return out


def commutator_of_actions_ok(a: Element, b: Element, max_len: int) -> bool:
    """act(bracket(a,b)) equals the commutator of actions on bounded chains."""
    params = a.params
    br = bracket(a, b)
    for c in all_chains(params, max_len):
        psi = chain_state(params, c)
        direct = act(br, psi)
        comm = act(a, act(b, psi)) - act(b, act(a, psi))
        if direct != comm:
            return False
    return True

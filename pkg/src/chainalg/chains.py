"""The defining representation on open matrix chains, and its tensor powers.

A chain is (left flavor, body, right flavor): a conjugate parton, a word
of adjoint partons and a fundamental parton.  States are exact rational
combinations of chains; equality of algebra elements in the open string
algebra means equality of their actions on every chain, which this
module probes up to a chosen body length.

Young symmetrizers cut invariant subspaces out of tensor powers; the
projected tensor of the leading chains in the standard argument
enumeration is a concrete lowest weight vector.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    KIND_F,
    KIND_L,
    KIND_R,
    AlgebraParams,
    Combination,
    Element,
    Generator,
)


@dataclass(frozen=True)
class Chain:
    left: int
    body: tuple
    right: int

    def __repr__(self):
        return render_chain(self)


def chain(left: int, body, right: int) -> Chain:
    return Chain(left, tuple(body), right)


def render_chain(c: Chain) -> str:
    return f"chain({c.left},{c.right})[{','.join(str(i) for i in c.body)}]"


ChainState = Combination  # keys: Chain
TensorState = Combination  # keys: tuple of Chain, fixed length


def chain_state(params: AlgebraParams, c: Chain, coeff=1) -> ChainState:
    return Combination.term(params, c, coeff)


def chain_sort_key(c: Chain):
    return (len(c.body), c.body, c.left, c.right)


# ---------------------------------------------------------------------------
# single-chain action of one generator

def _act_gen_chain(g: Generator, c: Chain):
    """Yield (Chain, coeff) contributions of one generator on one chain."""
    body = c.body
    n = len(body)
    if g.kind == KIND_F:
        l1, l2, l3, l4 = g.flavors
        if c.left == l2 and body == g.lower and c.right == l4:
            yield Chain(l1, g.upper, l3), 1
    elif g.kind == KIND_L:
        l1, l2 = g.flavors
        k = len(g.lower)
        if c.left == l2 and body[:k] == g.lower:
            yield Chain(l1, g.upper + body[k:], c.right), 1
    elif g.kind == KIND_R:
        l1, l2 = g.flavors
        k = len(g.lower)
        if c.right == l2 and (k == 0 or body[-k:] == g.lower):
            head = body[: n - k] if k else body
            yield Chain(c.left, head + g.upper, l1), 1
    else:
        lo, up = g.lower, g.upper
        if not lo and not up:
            # length counter
            yield c, n + 1
        elif not lo:
            # inserter: one copy of the upper word at every gap
            for cut in range(n + 1):
                yield Chain(c.left, body[:cut] + up + body[cut:], c.right), 1
        else:
            # match every occurrence of the lower word, substitute the upper
            k = len(lo)
            for start in range(n - k + 1):
                if body[start : start + k] == lo:
                    yield Chain(c.left, body[:start] + up + body[start + k :], c.right), 1


def act(e: Element, psi: ChainState) -> ChainState:
    """Bilinear extension of the generator action to states."""
    if e.params != psi.params:
        raise ValueError("algebra parameter mismatch between element and state")
    items = []
    for c, w in psi:
        for g, coeff in e:
            for out, mult in _act_gen_chain(g, c):
                items.append((out, coeff * w * mult))
    return Combination.from_items(psi.params, items)


def act_gen(g: Generator, c: Chain, params: AlgebraParams) -> ChainState:
    return Combination.from_items(params, _act_gen_chain(g, c))


def all_chains(params: AlgebraParams, max_len: int):
    """Every basis chain with body length up to max_len."""
    for n in range(max_len + 1):
        for body in itertools.product(params.color_range(), repeat=n):
            for lf in params.flavor_range():
                for rf in params.flavor_range():
                    yield Chain(lf, body, rf)


def equal_on_chains(a: Element, b: Element, max_len: int) -> bool:
    """Whether a and b act identically on every chain of body length <= max_len."""
    params = a.params
    diff = a - b
    if diff.is_zero():
        return True
    for c in all_chains(params, max_len):
        basis = chain_state(params, c)
        if not act(diff, basis).is_zero():
            return False
    return True


# ---------------------------------------------------------------------------
# tensor powers

def tensor_state(params: AlgebraParams, chains_tuple, coeff=1) -> TensorState:
    return Combination.term(params, tuple(chains_tuple), coeff)


def act_tensor(e: Element, psi: TensorState) -> TensorState:
    """Derivation action: sum over slots of the single-factor action."""
    if e.params != psi.params:
        raise ValueError("algebra parameter mismatch between element and state")
    items = []
    for tup, w in psi:
        for slot in range(len(tup)):
            for g, coeff in e:
                for out, mult in _act_gen_chain(g, tup[slot]):
                    items.append(
                        (tup[:slot] + (out,) + tup[slot + 1 :], coeff * w * mult)
                    )
    return Combination.from_items(psi.params, items)


def inner_chain(a: TensorState, b: TensorState) -> Fraction:
    """Pairing in which distinct chain tuples are orthonormal."""
    arities = {len(k) for k in a.keys()} | {len(k) for k in b.keys()}
    if len(arities) > 1:
        raise ValueError("arity mismatch between tensor states")
    total = Fraction(0)
    small, big = (a, b) if len(a) <= len(b) else (b, a)
    for k, c in small:
        total += c * big.get(k)
    return total


# ---------------------------------------------------------------------------
# Young symmetrizers

def _permute_tuple(tup, perm):
    # perm maps destination slot -> source slot
    return tuple(tup[perm[i]] for i in range(len(tup)))


def _perm_sign(perm) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, clen = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


def _group_permutations(blocks, d):
    """All slot permutations preserving each block (as dest -> source maps)."""
    perms = [list(range(d))]
    for block in blocks:
        new = []
        for base in perms:
            for img in itertools.permutations(block):
                p = list(base)
                for pos, src in zip(block, img):
                    p[pos] = base[src]
                new.append(p)
        perms = new
    return [tuple(p) for p in perms]


def canonical_tableau(gamma) -> list:
    """Row-major filling of the partition diagram with slots 0..d-1."""
    rows, k = [], 0
    for part in gamma:
        rows.append(list(range(k, k + part)))
        k += part
    return rows


def young_project(psi: TensorState, gamma) -> TensorState:
    """Row-symmetrize then column-antisymmetrize tensor slots (unnormalized)."""
    gamma = tuple(gamma)
    if any(a < b for a, b in zip(gamma, gamma[1:])) or any(p <= 0 for p in gamma):
        raise ValueError("partition parts must be positive and weakly decreasing")
    d = sum(gamma)
    arities = {len(k) for k in psi.keys()}
    if arities and arities != {d}:
        raise ValueError(f"partition size {d} does not match tensor arity")
    rows = canonical_tableau(gamma)
    cols = []
    for j in range(gamma[0] if gamma else 0):
        col = [row[j] for row in rows if j < len(row)]
        cols.append(col)
    row_perms = _group_permutations(rows, d)
    col_perms = _group_permutations(cols, d)

    sym_items = []
    for tup, c in psi:
        for p in row_perms:
            sym_items.append((_permute_tuple(tup, p), c))
    sym = Combination.from_items(psi.params, sym_items)

    out_items = []
    for tup, c in sym:
        for p in col_perms:
            out_items.append((_permute_tuple(tup, p), c * _perm_sign(p)))
    return Combination.from_items(psi.params, out_items)


def young_scalar(gamma) -> Fraction:
    """The scalar m with (projector)^2 = m * projector: d! / #standard tableaux."""
    gamma = tuple(gamma)
    d = sum(gamma)
    hooks = 1
    for i, part in enumerate(gamma):
        for j in range(part):
            arm = part - j - 1
            leg = sum(1 for ii in range(i + 1, len(gamma)) if gamma[ii] > j)
            hooks *= arm + leg + 1
    # hook length formula: #SYT = d! / prod(hooks), so m = prod(hooks)
    assert math.factorial(d) % hooks == 0
    return Fraction(hooks)


# ---------------------------------------------------------------------------
# concrete lowest weight vectors

class ZeroProjectionError(ValueError):
    """The symmetrizer annihilated the seed tensor."""


def lowest_weight_vector_concrete(gamma, params: AlgebraParams) -> TensorState:
    """Symmetrized tensor of the leading chains of the argument enumeration.

    Row k of the partition contributes its chains from the k-th argument
    (flavors vary fastest, then bodies in the sequence ordering); the
    result is the unnormalized Young projection.
    """
    from .weights import arg_at  # local import: weights depends on basis only

    gamma = tuple(gamma)
    slots = []
    for row_index, part in enumerate(gamma, start=1):
        lf, body, rf = arg_at(row_index, params)
        slots.extend([Chain(lf, body, rf)] * part)
    psi = tensor_state(params, slots)
    out = young_project(psi, gamma)
    if out.is_zero():
        raise ZeroProjectionError(f"partition {gamma} projects the seed tensor to zero")
    return out

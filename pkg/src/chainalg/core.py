"""Generators and exact linear algebra for the open string algebra.

An algebra instance is fixed by two positive integers: the number of
adjoint parton colors (bounding every index-sequence entry) and the
number of fundamental flavors (bounding every flavor index).  A
generator is one of four operator kinds:

    f   flavors (a, b, c, d), replaces a whole chain,
    l   flavors (a, b), acts at the conjugate (left) end,
    r   flavors (a, b), acts at the fundamental (right) end,
    s   no flavors, acts on interior segments of adjoint partons.

Each generator carries an upper and a lower index sequence.  For kinds
f, l, r the sequences may be empty.  Kind s usually has nonempty
sequences, but the three extended forms s[I|], s[|J] and s[|] (inserter,
deleter and length counter) are first-class generators as well.

Elements are finitely supported rational linear combinations of
generators; all arithmetic is exact (fractions.Fraction), never float.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

KIND_F = "f"
KIND_L = "l"
KIND_R = "r"
KIND_S = "s"
KINDS = (KIND_F, KIND_L, KIND_R, KIND_S)

# tie-break priority of the generator ordering: s > r > l > f
_KIND_RANK = {KIND_F: 0, KIND_L: 1, KIND_R: 2, KIND_S: 3}

_N_FLAVORS = {KIND_F: 4, KIND_L: 2, KIND_R: 2, KIND_S: 0}

IntSeq = tuple  # tuple of ints, possibly empty


@dataclass(frozen=True)
class AlgebraParams:
    """Size parameters: adjoint colors and fundamental flavors, both >= 1."""

    colors: int
    flavors: int

    def __post_init__(self):
        if self.colors < 1 or self.flavors < 1:
            raise ValueError("colors and flavors must be positive")

    def color_range(self):
        return range(1, self.colors + 1)

    def flavor_range(self):
        return range(1, self.flavors + 1)


@dataclass(frozen=True)
class Generator:
    """One basis operator: kind, upper/lower index sequences, flavor tuple."""

    kind: str
    upper: IntSeq
    lower: IntSeq
    flavors: tuple = ()

    def __post_init__(self):
        if self.kind not in _KIND_RANK:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if len(self.flavors) != _N_FLAVORS[self.kind]:
            raise ValueError(
                f"kind {self.kind!r} takes {_N_FLAVORS[self.kind]} flavor "
                f"indices, got {len(self.flavors)}"
            )

    def validate(self, params: AlgebraParams) -> None:
        for i in self.upper + self.lower:
            if not 1 <= i <= params.colors:
                raise IndexRangeError(
                    f"color index {i} out of range 1..{params.colors} "
                    f"(lambda={params.colors})"
                )
        for m in self.flavors:
            if not 1 <= m <= params.flavors:
                raise IndexRangeError(
                    f"flavor index {m} out of range 1..{params.flavors} "
                    f"(lambda_f={params.flavors})"
                )

    def __repr__(self):
        return render_generator(self)


class IndexRangeError(ValueError):
    """An integer index fell outside the bounds set by the parameters."""


def gen_f(l1, l2, l3, l4, upper, lower) -> Generator:
    return Generator(KIND_F, tuple(upper), tuple(lower), (l1, l2, l3, l4))


def gen_l(l1, l2, upper, lower) -> Generator:
    return Generator(KIND_L, tuple(upper), tuple(lower), (l1, l2))


def gen_r(l1, l2, upper, lower) -> Generator:
    return Generator(KIND_R, tuple(upper), tuple(lower), (l1, l2))


def gen_s(upper, lower) -> Generator:
    return Generator(KIND_S, tuple(upper), tuple(lower))


# ---------------------------------------------------------------------------
# orderings

def seq_key(seq: IntSeq):
    """Sort key for the sequence ordering: longer wins, then entrywise."""
    return (len(seq), seq)


def seq_compare(a: IntSeq, b: IntSeq) -> int:
    """-1, 0 or +1 comparing index sequences (length first, then lexicographic)."""
    ka, kb = seq_key(tuple(a)), seq_key(tuple(b))
    return (ka > kb) - (ka < kb)


def _flavor_split(g: Generator) -> tuple:
    # (upper flavor word, lower flavor word); lower compares first
    if g.kind == KIND_F:
        l1, l2, l3, l4 = g.flavors
        return (l1, l3), (l2, l4)
    if g.kind in (KIND_L, KIND_R):
        l1, l2 = g.flavors
        return (l1,), (l2,)
    return (), ()


def grade(g: Generator) -> int:
    """Degree in the integer grading: upper length minus lower length."""
    return len(g.upper) - len(g.lower)


def gen_key(g: Generator):
    """Total-order sort key for generators.

    Precedence: grade, total index size, lower sequence, upper sequence,
    kind (s > r > l > f), lower flavor word, upper flavor word.
    """
    up_fl, lo_fl = _flavor_split(g)
    return (
        grade(g),
        len(g.upper) + len(g.lower),
        seq_key(g.lower),
        seq_key(g.upper),
        _KIND_RANK[g.kind],
        lo_fl,
        up_fl,
    )


def gen_compare(x: Generator, y: Generator) -> int:
    """-1, 0 or +1 under the generator ordering (0 only for equal generators)."""
    kx, ky = gen_key(x), gen_key(y)
    return (kx > ky) - (kx < ky)


# ---------------------------------------------------------------------------
# rational linear combinations

def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class Combination:
    """Finitely supported map key -> nonzero Fraction, tied to an AlgebraParams.

    Used for algebra elements (keys are Generators) and for representation
    states (keys are chains, chain tuples or letter words).  Instances are
    treated as immutable; arithmetic returns fresh objects and zero
    coefficients are never stored.
    """

    __slots__ = ("params", "terms")

    def __init__(self, params: AlgebraParams, terms: dict | None = None):
        self.params = params
        clean = {}
        if terms:
            for k, c in terms.items():
                c = _as_fraction(c)
                if c:
                    clean[k] = c
        self.terms = clean

    @classmethod
    def zero(cls, params: AlgebraParams) -> "Combination":
        return cls(params)

    @classmethod
    def term(cls, params: AlgebraParams, key, coeff=1) -> "Combination":
        return cls(params, {key: _as_fraction(coeff)})

    @classmethod
    def from_items(cls, params: AlgebraParams, items: Iterable) -> "Combination":
        acc: dict = {}
        for k, c in items:
            c = _as_fraction(c)
            if c:
                acc[k] = acc.get(k, 0) + c
                if not acc[k]:
                    del acc[k]
        out = cls(params)
        out.terms = acc
        return out

    def items(self):
        return self.terms.items()

    def get(self, key) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def keys(self):
        return self.terms.keys()

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator:
        return iter(self.terms.items())

    def _check(self, other: "Combination"):
        if self.params != other.params:
            raise ValueError("algebra parameter mismatch between operands")

    def __add__(self, other: "Combination") -> "Combination":
        self._check(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            s = acc.get(k, 0) + c
            if s:
                acc[k] = s
            else:
                acc.pop(k, None)
        out = type(self)(self.params)
        out.terms = acc
        return out

    def __sub__(self, other: "Combination") -> "Combination":
        return self + (-other)

    def __neg__(self) -> "Combination":
        out = type(self)(self.params)
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def scaled(self, c) -> "Combination":
        c = _as_fraction(c)
        out = type(self)(self.params)
        if c:
            out.terms = {k: c * v for k, v in self.terms.items()}
        return out

    def __rmul__(self, c) -> "Combination":
        return self.scaled(c)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Combination)
            and self.params == other.params
            and self.terms == other.terms
        )

    __hash__ = None  # mutable dict inside

    def __repr__(self):
        if not self.terms:
            return "0"
        if all(isinstance(k, Generator) for k in self.terms):
            return render_element(self)
        ordered = sorted(self.terms.items(), key=lambda kv: repr(kv[0]))
        return render_terms([(repr(k), c) for k, c in ordered])


Element = Combination  # keys: Generator


def element(params: AlgebraParams, *scaled_gens) -> Element:
    """Build an Element from (coeff, Generator) pairs or bare Generators."""
    items = []
    for t in scaled_gens:
        if isinstance(t, Generator):
            items.append((t, Fraction(1)))
        else:
            c, g = t
            items.append((g, _as_fraction(c)))
    return Combination.from_items(params, items)


# ---------------------------------------------------------------------------
# anti-involution

def omega_gen(g: Generator) -> Generator:
    """Swap upper and lower data: sequences exchanged, flavor pairs transposed."""
    if g.kind == KIND_F:
        l1, l2, l3, l4 = g.flavors
        fl = (l2, l1, l4, l3)
    elif g.kind in (KIND_L, KIND_R):
        l1, l2 = g.flavors
        fl = (l2, l1)
    else:
        fl = ()
    return Generator(g.kind, g.lower, g.upper, fl)


def omega(e: Element) -> Element:
    """Antilinear anti-involution; identity on rational coefficients."""
    return Combination.from_items(e.params, ((omega_gen(g), c) for g, c in e))


# ---------------------------------------------------------------------------
# text rendering (the CLI grammar emits and parses exactly this form)

def _render_seq(seq: IntSeq) -> str:
    return ",".join(str(i) for i in seq)


def render_generator(g: Generator) -> str:
    body = f"[{_render_seq(g.upper)}|{_render_seq(g.lower)}]"
    if g.kind == KIND_F:
        l1, l2, l3, l4 = g.flavors
        return f"f({l1},{l2};{l3},{l4}){body}"
    if g.kind == KIND_L:
        return f"l({g.flavors[0]},{g.flavors[1]}){body}"
    if g.kind == KIND_R:
        return f"r({g.flavors[0]},{g.flavors[1]}){body}"
    return f"s{body}"


def _render_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_terms(pairs: list) -> str:
    """Render (text, coeff) pairs as a signed sum; '1*' is elided."""
    if not pairs:
        return "0"
    chunks = []
    for n, (text, c) in enumerate(pairs):
        mag = abs(c)
        body = text if mag == 1 else f"{_render_coeff(mag)}*{text}"
        if n == 0:
            chunks.append(body if c > 0 else "-" + body)
        else:
            chunks.append((" + " if c > 0 else " - ") + body)
    return "".join(chunks)


def render_element(e: Element) -> str:
    """Canonical rendering: terms ascending in the generator ordering."""
    ordered = sorted(e.terms.items(), key=lambda kv: gen_key(kv[0]))
    return render_terms([(render_generator(g), c) for g, c in ordered])

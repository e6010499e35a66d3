"""Command-line surface: expression grammar, subcommands, file I/O.

Grammar (whitespace insignificant)::

    expr     := ['-'] term (('+'|'-') term)*
    term     := [rational '*'] atom
    rational := integer ['/' positive-integer]
    atom     := 'f(' n ',' n ';' n ',' n ')[' seq '|' seq ']'
              | 'l(' n ',' n ')[' seq '|' seq ']'
              | 'r(' n ',' n ')[' seq '|' seq ']'
              | 's[' seq '|' seq ']'
              | 'chain(' n ',' n ')[' seq ']'
    seq      := empty | integer (',' integer)*

Exit codes: 0 success, 1 check failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import checks
from .basis import to_b0, to_b4
from .bracket import bracket, classify
from .chains import Chain, chain_sort_key, act, render_chain
from .core import (
    AlgebraParams,
    Combination,
    Element,
    Generator,
    IndexRangeError,
    gen_f,
    gen_key,
    gen_l,
    gen_r,
    gen_s,
    render_element,
    render_terms,
)
from .verma import gram_matrix, inertia, render_word
from .weights import check_partition, read_weight, weight_from_partition, write_weight


class ExprSyntaxError(ValueError):
    def __init__(self, column: int, message: str):
        super().__init__(f"syntax error at column {column}: {message}")
        self.column = column


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        col = i + 1
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], col))
            i = j
        elif ch.isalpha():
            j = i
            while j < len(text) and text[j].isalpha():
                j += 1
            tokens.append(("name", text[i:j], col))
            i = j
        elif ch in "()[]|,;*/+-":
            tokens.append(("sym", ch, col))
            i += 1
        else:
            raise ExprSyntaxError(col, f"unexpected character {ch!r}")
    tokens.append(("end", "", len(text) + 1))
    return tokens


class Expression:
    """Parsed sum of scaled generator or chain atoms."""

    def __init__(self, params: AlgebraParams, terms: list):
        self.params = params
        self.terms = terms  # list of (Fraction, Generator | Chain)

    def as_element(self) -> Element:
        if any(isinstance(atom, Chain) for _c, atom in self.terms):
            raise ValueError("expected an algebra expression, found chain terms")
        return Combination.from_items(self.params, ((a, c) for c, a in self.terms))

    def as_chain_state(self) -> Combination:
        if any(isinstance(atom, Generator) for _c, atom in self.terms):
            raise ValueError("expected a chain expression, found generator terms")
        return Combination.from_items(self.params, ((a, c) for c, a in self.terms))


class _Parser:
    def __init__(self, text: str, params: AlgebraParams):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.params = params

    def _peek(self):
        return self.tokens[self.pos]

    def _advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def _expect_sym(self, sym: str):
        kind, val, col = self._peek()
        if kind != "sym" or val != sym:
            raise ExprSyntaxError(col, f"expected {sym!r}")
        return self._advance()

    def _expect_int(self) -> int:
        kind, val, col = self._peek()
        if kind != "int":
            raise ExprSyntaxError(col, "expected an integer")
        self._advance()
        return int(val)

    def _at_sym(self, sym: str) -> bool:
        kind, val, _ = self._peek()
        return kind == "sym" and val == sym

    def parse(self) -> Expression:
        terms = []
        sign = 1
        if self._at_sym("-"):
            self._advance()
            sign = -1
        terms.append(self._term(sign))
        while True:
            kind, val, col = self._peek()
            if kind == "end":
                break
            if kind == "sym" and val in "+-":
                self._advance()
                terms.append(self._term(1 if val == "+" else -1))
            else:
                raise ExprSyntaxError(col, "expected '+', '-' or end of input")
        return Expression(self.params, terms)

    def _term(self, sign: int):
        coeff = Fraction(sign)
        kind, _val, _col = self._peek()
        if kind == "int":
            num = self._expect_int()
            den = 1
            if self._at_sym("/"):
                self._advance()
                den = self._expect_int()
                if den == 0:
                    raise ExprSyntaxError(self.tokens[self.pos - 1][2], "zero denominator")
            coeff *= Fraction(num, den)
            self._expect_sym("*")
        atom = self._atom()
        return (coeff, atom)

    def _seq(self) -> tuple:
        kind, _val, _col = self._peek()
        if kind != "int":
            return ()
        out = [self._expect_int()]
        while self._at_sym(","):
            self._advance()
            out.append(self._expect_int())
        return tuple(out)

    def _flavor_pair(self):
        self._expect_sym("(")
        a = self._expect_int()
        self._expect_sym(",")
        b = self._expect_int()
        return a, b

    def _atom(self):
        kind, val, col = self._peek()
        if kind != "name":
            raise ExprSyntaxError(col, "expected a generator or chain atom")
        self._advance()
        if val == "f":
            a, b = self._flavor_pair()
            self._expect_sym(";")
            c = self._expect_int()
            self._expect_sym(",")
            d = self._expect_int()
            self._expect_sym(")")
            up, lo = self._bracket_pair()
            g = gen_f(a, b, c, d, up, lo)
        elif val == "l":
            a, b = self._flavor_pair()
            self._expect_sym(")")
            up, lo = self._bracket_pair()
            g = gen_l(a, b, up, lo)
        elif val == "r":
            a, b = self._flavor_pair()
            self._expect_sym(")")
            up, lo = self._bracket_pair()
            g = gen_r(a, b, up, lo)
        elif val == "s":
            up, lo = self._bracket_pair()
            g = gen_s(up, lo)
        elif val == "chain":
            a, b = self._flavor_pair()
            self._expect_sym(")")
            self._expect_sym("[")
            body = self._seq()
            self._expect_sym("]")
            ch = Chain(a, body, b)
            _validate_chain(ch, self.params)
            return ch
        else:
            raise ExprSyntaxError(col, f"unknown atom {val!r}")
        g.validate(self.params)
        return g

    def _bracket_pair(self):
        self._expect_sym("[")
        up = self._seq()
        self._expect_sym("|")
        lo = self._seq()
        self._expect_sym("]")
        return up, lo


def _validate_chain(c: Chain, params: AlgebraParams):
    for i in c.body:
        if not 1 <= i <= params.colors:
            raise IndexRangeError(
                f"color index {i} out of range 1..{params.colors} (lambda={params.colors})"
            )
    for m in (c.left, c.right):
        if not 1 <= m <= params.flavors:
            raise IndexRangeError(
                f"flavor index {m} out of range 1..{params.flavors} "
                f"(lambda_f={params.flavors})"
            )


def parse(text: str, params: AlgebraParams) -> Expression:
    """Parse an expression; raises ExprSyntaxError or IndexRangeError."""
    return _Parser(text, params).parse()


def render_chain_state(state: Combination) -> str:
    ordered = sorted(state.terms.items(), key=lambda kv: chain_sort_key(kv[0]))
    return render_terms([(render_chain(c), v) for c, v in ordered])


# ---------------------------------------------------------------------------
# subcommands

def _parse_gamma(text: str) -> tuple:
    if text.startswith("gamma="):
        text = text[len("gamma="):]
    text = text.strip()
    if not text:
        return ()
    return check_partition(int(p) for p in text.split(","))


def _build_argparser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="chainalg",
        description="exact computations in the open string algebra of matrix chains",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def add_params(p):
        p.add_argument("--lambda", dest="colors", type=int, help="number of adjoint colors")
        p.add_argument(
            "--lambda-f", dest="flavors", type=int, help="number of fundamental flavors"
        )

    p = sub.add_parser("bracket", help="Lie bracket of two expressions, canonical form")
    p.add_argument("left")
    p.add_argument("right")
    add_params(p)

    p = sub.add_parser("act", help="act an expression on a chain expression")
    p.add_argument("expr")
    p.add_argument("chain_expr")
    add_params(p)

    p = sub.add_parser("rewrite", help="rewrite an expression into a basis")
    p.add_argument("--basis", choices=("b0", "b4"), required=True)
    p.add_argument("expr")
    add_params(p)

    p = sub.add_parser("classify", help="triangular class of each generator term")
    p.add_argument("expr")
    add_params(p)

    p = sub.add_parser("weight", help="build the weight of a partition")
    p.add_argument("--gamma", required=True)
    p.add_argument("--out")
    add_params(p)

    p = sub.add_parser("gram", help="Gram matrix of module words within a size bound")
    p.add_argument("--weight", dest="weight_file")
    p.add_argument("--gamma")
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--inertia", action="store_true")
    add_params(p)

    p = sub.add_parser("check", help="run a verification suite")
    p.add_argument(
        "--suite",
        choices=("jacobi", "identities", "independence", "oracle"),
        required=True,
    )
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=50)
    p.add_argument("--max-len", type=int, default=4)
    add_params(p)
    return top


class _UsageError(ValueError):
    pass


def _require_params(args) -> AlgebraParams:
    if args.colors is None or args.flavors is None:
        raise _UsageError("--lambda and --lambda-f are required")
    if args.colors < 1 or args.flavors < 1:
        raise _UsageError("--lambda and --lambda-f must be positive")
    return AlgebraParams(args.colors, args.flavors)


def main(argv=None) -> int:
    args = _build_argparser().parse_args(argv)
    try:
        return _dispatch(args)
    except (ExprSyntaxError, IndexRangeError, ValueError) as exc:
        print(f"chainalg: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # downstream consumer (head, less, ...) closed the stream
        return 0


def run(argv) -> int:
    """Entry point used by tests; same as main."""
    return main(argv)


def _dispatch(args) -> int:
    cmd = args.command
    if cmd == "bracket":
        params = _require_params(args)
        a = parse(args.left, params).as_element()
        b = parse(args.right, params).as_element()
        print(render_element(to_b0(bracket(a, b), params)))
        return 0
    if cmd == "act":
        params = _require_params(args)
        e = parse(args.expr, params).as_element()
        psi = parse(args.chain_expr, params).as_chain_state()
        print(render_chain_state(act(e, psi)))
        return 0
    if cmd == "rewrite":
        params = _require_params(args)
        e = parse(args.expr, params).as_element()
        out = to_b0(e, params) if args.basis == "b0" else to_b4(e, params)
        print(render_element(out))
        return 0
    if cmd == "classify":
        params = _require_params(args)
        e = parse(args.expr, params).as_element()
        for g in sorted(e.keys(), key=gen_key):
            print(f"{g!r}: {classify(g).value}")
        return 0
    if cmd == "weight":
        params = _require_params(args)
        w = weight_from_partition(_parse_gamma(args.gamma), params)
        text = write_weight(w)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            print(text, end="")
        return 0
    if cmd == "gram":
        if args.weight_file:
            with open(args.weight_file, encoding="utf-8") as fh:
                w = read_weight(fh.read())
            if (args.colors is not None and w.params.colors != args.colors) or (
                args.flavors is not None and w.params.flavors != args.flavors
            ):
                print("chainalg: weight file parameters disagree with flags", file=sys.stderr)
                return 2
        elif args.gamma is not None:
            params = _require_params(args)
            w = weight_from_partition(_parse_gamma(args.gamma), params)
        else:
            print("chainalg: gram needs --weight or --gamma", file=sys.stderr)
            return 2
        gm = gram_matrix(w, args.max_size)
        print(f"size {len(gm.words)}")
        for i, word in enumerate(gm.words):
            print(f"word {i}: {render_word(word)}")
        for i, row in enumerate(gm.entries):
            body = " ".join(_frac_text(v) for v in row)
            print(f"row {i}: {body}")
        if args.inertia:
            res = inertia(gm)
            print(f"inertia: pos={res.n_pos} zero={res.n_zero} neg={res.n_neg}")
            print(f"radical dim {len(res.radical)}")
            for i, vec in enumerate(res.radical):
                print(f"radical {i}: " + " ".join(_frac_text(v) for v in vec))
        return 0
    if cmd == "check":
        params = _require_params(args)
        fn = {
            "jacobi": checks.suite_jacobi,
            "identities": checks.suite_identities,
            "independence": checks.suite_independence,
            "oracle": checks.suite_oracle,
        }[args.suite]
        ok, lines = fn(params, seed=args.seed, cases=args.cases, max_len=args.max_len)
        for line in lines:
            print(line)
        return 0 if ok else 1
    raise AssertionError(f"unhandled command {cmd}")


def _frac_text(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


if __name__ == "__main__":
    sys.exit(main())

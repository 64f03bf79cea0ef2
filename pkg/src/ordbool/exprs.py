"""The operator expression language: parser, printer and evaluator.

ASCII spellings stand in for the order-theoretic glyphs: ``&`` ``|``
``!`` ``\\`` are the raw operators, a trailing ``'`` picks the
order-refined variant and ``''`` the height-refined one (``\\`` only
has the single-primed form).  ``{a,b}`` is a set literal, ``sup{...}``
and ``inf{...}`` are signed literals, and a bare identifier denotes the
singleton of that element.  Precedence: unary ``!`` binds tightest,
then ``&``/``\\``, then ``|``; binaries associate left.

Calls: meetall, joinall, max, min, maxht, minht, meet1, meet2, join1,
join2, neg1, ht, P, Pmu, mu, indep1, indep2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import EvalTypeError, ParseError, SignedMisuse, UnknownLabel
from .measure import (
    MeasureKind,
    ht_of_set,
    indep_product,
    indep_threshold,
    mu,
    prob_max,
    prob_signed,
    prob_sum,
)
from .ops import (
    AltKind,
    Variant,
    alt_join,
    alt_meet,
    alt_neg1,
    join_all,
    meet_all,
    neg_set,
    set_join,
    set_meet,
    set_minus,
)
from .poset import ElemSet, Extreme, HtExtreme, Poset, extremes, extremes_by_height
from .signed import Sign, SignedSet, signed_height, signed_join, signed_meet, signed_neg


class Node:
    """Base of the expression AST."""


@dataclass(frozen=True)
class Ident(Node):
    name: str


@dataclass(frozen=True)
class SetLit(Node):
    members: tuple[str, ...]  # sorted at construction


@dataclass(frozen=True)
class SignedLit(Node):
    sign: Sign
    members: tuple[str, ...]


@dataclass(frozen=True)
class RatLit(Node):
    value: Fraction


@dataclass(frozen=True)
class Neg(Node):
    variant: Variant
    operand: Node


@dataclass(frozen=True)
class BinOp(Node):
    op: str  # "meet" | "join" | "minus"
    variant: Variant
    left: Node
    right: Node


@dataclass(frozen=True)
class Call(Node):
    fn: str
    args: tuple[Node, ...]


@dataclass(frozen=True)
class ProbValue:
    """A probability plus its unreduced ratio and an out-of-range flag."""

    value: Fraction
    num: int
    den: int
    flagged: bool = False


Value = object  # ElemSet | SignedSet | Fraction | ProbValue | bool | int

_CALL_ARITY = {
    "meetall": (1, None),
    "joinall": (1, None),
    "max": (1, 1),
    "min": (1, 1),
    "maxht": (1, 1),
    "minht": (1, 1),
    "meet1": (2, 2),
    "meet2": (2, 2),
    "join1": (2, 2),
    "join2": (2, 2),
    "neg1": (1, 1),
    "ht": (1, 1),
    "P": (1, 1),
    "Pmu": (1, 1),
    "mu": (1, 1),
    "indep1": (2, 2),
    "indep2": (2, 3),
}

_VARIANTS = (Variant.RAW, Variant.PRIME, Variant.HT_PRIME)
_SUFFIX = {Variant.RAW: "", Variant.PRIME: "'", Variant.HT_PRIME: "''"}


@dataclass(frozen=True)
class _Token:
    kind: str  # WORD AMP BAR BANG DIFF LBRACE RBRACE LPAREN RPAREN COMMA SLASH EOF
    text: str
    variant: Variant | None
    col: int


def _is_word_start(c: str) -> bool:
    return c.isalnum() or c == "_"


def _is_word_char(c: str) -> bool:
    return c.isalnum() or c in "_'"


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        col = i + 1
        if c in "&|!\\":
            primes = 0
            j = i + 1
            while j < n and text[j] == "'" and primes < 2:
                primes += 1
                j += 1
            if c == "\\" and primes > 1:
                raise ParseError("difference has no double-primed form", column=col)
            kind = {"&": "AMP", "|": "BAR", "!": "BANG", "\\": "DIFF"}[c]
            tokens.append(_Token(kind, text[i:j], _VARIANTS[primes], col))
            i = j
            continue
        if c in "{}(),/":
            kind = {
                "{": "LBRACE", "}": "RBRACE", "(": "LPAREN",
                ")": "RPAREN", ",": "COMMA", "/": "SLASH",
            }[c]
            tokens.append(_Token(kind, c, None, col))
            i += 1
            continue
        if _is_word_start(c):
            j = i + 1
            while j < n and _is_word_char(text[j]):
                j += 1
            tokens.append(_Token("WORD", text[i:j], None, col))
            i = j
            continue
        raise ParseError(f"unexpected character {c!r}", column=col)
    tokens.append(_Token("EOF", "", None, n + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self, kind: str | None = None) -> _Token:
        tok = self.tokens[self.pos]
        if kind is not None and tok.kind != kind:
            raise ParseError(f"expected {kind}, found {tok.text or 'end of input'!r}",
                             column=tok.col)
        self.pos += 1
        return tok

    def parse(self) -> Node:
        node = self.join()
        tok = self.peek()
        if tok.kind != "EOF":
            raise ParseError(f"unexpected trailing {tok.text!r}", column=tok.col)
        return node

    def join(self) -> Node:
        left = self.meet()
        while self.peek().kind == "BAR":
            op = self.take()
            left = BinOp("join", op.variant, left, self.meet())
        return left

    def meet(self) -> Node:
        left = self.unary()
        while self.peek().kind in ("AMP", "DIFF"):
            op = self.take()
            name = "meet" if op.kind == "AMP" else "minus"
            left = BinOp(name, op.variant, left, self.unary())
        return left

    def unary(self) -> Node:
        if self.peek().kind == "BANG":
            op = self.take()
            return Neg(op.variant, self.unary())
        return self.primary()

    def brace_members(self) -> tuple[str, ...]:
        self.take("LBRACE")
        members = [self.take("WORD").text]
        while self.peek().kind == "COMMA":
            self.take()
            members.append(self.take("WORD").text)
        self.take("RBRACE")
        return tuple(sorted(set(members)))

    def primary(self) -> Node:
        tok = self.peek()
        if tok.kind == "LPAREN":
            self.take()
            node = self.join()
            self.take("RPAREN")
            return node
        if tok.kind == "LBRACE":
            return SetLit(self.brace_members())
        if tok.kind == "WORD":
            word = self.take()
            nxt = self.peek()
            if word.text in ("sup", "inf") and nxt.kind == "LBRACE":
                sign = Sign.SUP if word.text == "sup" else Sign.INF
                return SignedLit(sign, self.brace_members())
            if nxt.kind == "LPAREN":
                if word.text not in _CALL_ARITY:
                    raise ParseError(f"unknown function {word.text!r}", column=word.col)
                self.take()
                args = [self.join()]
                while self.peek().kind == "COMMA":
                    self.take()
                    args.append(self.join())
                self.take("RPAREN")
                lo, hi = _CALL_ARITY[word.text]
                if len(args) < lo or (hi is not None and len(args) > hi):
                    raise ParseError(
                        f"{word.text} takes {lo}" + ("+" if hi is None else f"..{hi}")
                        + f" arguments, got {len(args)}",
                        column=word.col,
                    )
                return Call(word.text, tuple(args))
            if word.text.isdigit() and nxt.kind == "SLASH":
                self.take()
                den = self.take("WORD")
                if not den.text.isdigit():
                    raise ParseError(f"expected an integer denominator, found {den.text!r}",
                                     column=den.col)
                return RatLit(Fraction(int(word.text), int(den.text)))
            return Ident(word.text)
        raise ParseError(f"expected an expression, found {tok.text or 'end of input'!r}",
                         column=tok.col)


def parse_expr(text: str) -> Node:
    """Parse an expression; raises ParseError with a 1-based column."""
    return _Parser(text).parse()


def _prec(node: Node) -> int:
    if isinstance(node, BinOp):
        return 1 if node.op == "join" else 2
    if isinstance(node, Neg):
        return 3
    return 4


def format_expr(node: Node) -> str:
    """Canonical text form; parse(format(ast)) == ast."""
    return _fmt(node, 0)


def _fmt(node: Node, min_prec: int) -> str:
    if isinstance(node, Ident):
        return node.name
    if isinstance(node, SetLit):
        return "{" + ",".join(node.members) + "}"
    if isinstance(node, SignedLit):
        return node.sign.value + "{" + ",".join(node.members) + "}"
    if isinstance(node, RatLit):
        return f"{node.value.numerator}/{node.value.denominator}"
    if isinstance(node, Call):
        return node.fn + "(" + ",".join(_fmt(a, 0) for a in node.args) + ")"
    if isinstance(node, Neg):
        text = "!" + _SUFFIX[node.variant] + _fmt(node.operand, 3)
        return f"({text})" if _prec(node) < min_prec else text
    assert isinstance(node, BinOp)
    me = _prec(node)
    sym = {"meet": "&", "join": "|", "minus": "\\"}[node.op] + _SUFFIX[node.variant]
    text = f"{_fmt(node.left, me)} {sym} {_fmt(node.right, me + 1)}"
    return f"({text})" if me < min_prec else text


def resolve_label(p: Poset, name: str) -> str:
    """Map an identifier to a poset element; 'empty' aliases the reserved bottom."""
    if name in p:
        return name
    if name == "empty" and "_bot" in p:
        return "_bot"
    raise UnknownLabel(f"{name!r} is not an element of poset {p.name!r}")


def _need_set(value: Value, what: str) -> ElemSet:
    if not isinstance(value, frozenset):
        raise EvalTypeError(f"{what} needs a plain element set")
    return value


def _single(value: ElemSet) -> str:
    if len(value) != 1:
        raise SignedMisuse("a signed operand pairs with a single element, "
                           f"not a {len(value)}-element set")
    return next(iter(value))


def eval_expr(p: Poset, node: Node) -> Value:
    """Evaluate an AST against a poset.

    Element and singleton operands share the set semantics; a signed
    operand routes the operator to the signed variants; P/Pmu/mu/ht
    dispatch to the measures.
    """
    if isinstance(node, Ident):
        return frozenset((resolve_label(p, node.name),))
    if isinstance(node, SetLit):
        return frozenset(resolve_label(p, m) for m in node.members)
    if isinstance(node, SignedLit):
        return SignedSet(node.sign, frozenset(resolve_label(p, m) for m in node.members))
    if isinstance(node, RatLit):
        return node.value
    if isinstance(node, Neg):
        operand = eval_expr(p, node.operand)
        if isinstance(operand, SignedSet):
            if node.variant is not Variant.RAW:
                raise SignedMisuse("refined negation is not defined on signed sets")
            return signed_neg(p, operand)
        return neg_set(p, _need_set(operand, "negation"), node.variant)
    if isinstance(node, BinOp):
        return _eval_binop(p, node)
    assert isinstance(node, Call)
    return _eval_call(p, node)


def _eval_binop(p: Poset, node: BinOp) -> Value:
    left = eval_expr(p, node.left)
    right = eval_expr(p, node.right)
    signed_left = isinstance(left, SignedSet)
    signed_right = isinstance(right, SignedSet)
    if signed_left and signed_right:
        raise SignedMisuse("an operator cannot take signed sets on both sides")
    if signed_left or signed_right:
        if node.op == "minus":
            raise SignedMisuse("difference is not defined on signed sets")
        if node.variant is not Variant.RAW:
            raise SignedMisuse("refined operators are not defined on signed sets")
        s = left if signed_left else right
        y = _single(_need_set(right if signed_left else left, "signed " + node.op))
        return signed_meet(p, y, s) if node.op == "meet" else signed_join(p, y, s)
    lset = _need_set(left, node.op)
    rset = _need_set(right, node.op)
    if node.op == "meet":
        return set_meet(p, lset, rset, node.variant)
    if node.op == "join":
        return set_join(p, lset, rset, node.variant)
    return set_minus(p, lset, rset, node.variant)


def _eval_call(p: Poset, node: Call) -> Value:
    fn = node.fn
    args = [eval_expr(p, a) for a in node.args]
    if fn in ("meetall", "joinall"):
        union: set[str] = set()
        for a in args:
            union |= _need_set(a, fn)
        xs = sorted(union)
        return meet_all(p, xs, Variant.RAW) if fn == "meetall" else join_all(p, xs, Variant.RAW)
    if fn in ("max", "min"):
        which = Extreme.MAX if fn == "max" else Extreme.MIN
        return extremes(p, _need_set(args[0], fn), which)
    if fn in ("maxht", "minht"):
        which = HtExtreme.MAXHT if fn == "maxht" else HtExtreme.MINHT
        return extremes_by_height(p, _need_set(args[0], fn), which)
    if fn in ("meet1", "meet2", "join1", "join2"):
        kind = AltKind.PAIRWISE if fn.endswith("1") else AltKind.UNION_BASED
        a = _need_set(args[0], fn)
        b = _need_set(args[1], fn)
        return alt_meet(p, a, b, kind) if fn.startswith("meet") else alt_join(p, a, b, kind)
    if fn == "neg1":
        return alt_neg1(p, _need_set(args[0], fn))
    if fn == "ht":
        if isinstance(args[0], SignedSet):
            return signed_height(p, args[0])
        return ht_of_set(p, _need_set(args[0], fn))
    if fn == "P":
        if isinstance(args[0], SignedSet):
            value = prob_signed(p, args[0])
            return ProbValue(value, signed_height(p, args[0]), p.height_of[p.top],
                             flagged=not 0 <= value <= 1)
        X = _need_set(args[0], fn)
        return ProbValue(prob_max(p, X), ht_of_set(p, X), p.height_of[p.top])
    if fn == "Pmu":
        if isinstance(args[0], SignedSet):
            raise SignedMisuse("the summed measure is not defined on signed sets")
        X = _need_set(args[0], fn)
        return ProbValue(prob_sum(p, X), mu(p, X), mu(p, p.ground))
    if fn == "mu":
        return mu(p, _need_set(args[0], fn))
    if fn == "indep1":
        return indep_product(p, _need_set(args[0], fn), _need_set(args[1], fn),
                             MeasureKind.MAX_HEIGHT)
    assert fn == "indep2"
    alpha = None
    if len(args) == 3:
        if not isinstance(args[2], Fraction):
            raise EvalTypeError("indep2 takes a rational threshold like 1/2")
        alpha = args[2]
    return indep_threshold(p, _need_set(args[0], fn), _need_set(args[1], fn), alpha,
                           MeasureKind.MAX_HEIGHT)


def format_value(value: Value) -> str:
    """Canonical printed form of an evaluation result."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, frozenset):
        return "{" + ",".join(sorted(value)) + "}"
    if isinstance(value, SignedSet):
        return value.sign.value + "{" + ",".join(sorted(value.carrier)) + "}"
    if isinstance(value, ProbValue):
        text = str(value.value)
        if (value.num, value.den) != (value.value.numerator, value.value.denominator):
            text += f" ({value.num}/{value.den})"
        if value.flagged:
            text += " [out-of-range]"
        return text
    return str(value)

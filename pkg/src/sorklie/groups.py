"""Group expressions: parsing, pretty-printing, and free subgroup rank rules.

The evaluator implements the reduction calculus: products add, free products
of nontrivial factors (not both of order two) give max{1, left, right},
solvable-by-anything split or central extensions are transparent, and finite
index changes nothing.  General extensions only yield an upper bound, which
is kept strictly separate from exact evaluation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

from .errors import ExprSyntaxError, InvalidRealForm, InvalidType, RuleNotApplicable
from .realforms import (
    RealFormDescriptor,
    compact_form,
    complex_simple,
    exceptional_form,
    nu_simple,
    sl_H,
    sl_R,
    so,
    so_star,
    sp,
    sp_R,
    split_form,
    su,
)
from .roots import RootSystemType


class GroupExpr:
    """Base class for AST nodes.  All nodes are immutable values."""


@dataclass(frozen=True)
class SimpleLie(GroupExpr):
    descriptor: RealFormDescriptor


@dataclass(frozen=True)
class SolvableAtom(GroupExpr):
    """An infinite solvable atom with free subgroup rank zero: Z, R^n, or a
    generic solvable group."""

    label: str  # "Z", "R^3", "solvable"


@dataclass(frozen=True)
class FiniteAtom(GroupExpr):
    order: int

    def __post_init__(self):
        if self.order < 1:
            raise ExprSyntaxError("finite group order must be >= 1", 0)


@dataclass(frozen=True)
class DirectProduct(GroupExpr):
    factors: tuple[GroupExpr, ...]

    def __post_init__(self):
        if not self.factors:
            raise ValueError("direct product needs at least one factor")


@dataclass(frozen=True)
class FreeProduct(GroupExpr):
    left: GroupExpr
    right: GroupExpr


@dataclass(frozen=True)
class Extension(GroupExpr):
    kernel: GroupExpr
    quotient: GroupExpr
    mode: str  # "split" | "central" | "general"


@dataclass(frozen=True)
class FiniteIndex(GroupExpr):
    inner: GroupExpr


def _is_trivial(e: GroupExpr) -> bool:
    if isinstance(e, FiniteAtom):
        return e.order == 1
    if isinstance(e, DirectProduct):
        return all(_is_trivial(f) for f in e.factors)
    if isinstance(e, FreeProduct):
        return _is_trivial(e.left) and _is_trivial(e.right)
    if isinstance(e, FiniteIndex):
        return _is_trivial(e.inner)
    return False


def _has_order_two(e: GroupExpr) -> bool:
    if isinstance(e, FiniteAtom):
        return e.order == 2
    if isinstance(e, FiniteIndex):
        return _has_order_two(e.inner)
    return False


def nu_eval(e: GroupExpr) -> int:
    """Exact free subgroup rank of a well-formed expression.

    Raises :class:`RuleNotApplicable` where the calculus only proves an
    inequality (general-mode extensions) or its hypotheses fail (free
    products with a trivial factor or two order-two factors, extensions
    with non-solvable kernel).
    """
    return _eval(e, bound_only=False)


def nu_upper_bound(e: GroupExpr) -> int:
    """Upper bound for the free subgroup rank; equals nu_eval except that
    general-mode solvable-kernel extensions contribute the quotient's bound."""
    return _eval(e, bound_only=True)


def _eval(e: GroupExpr, bound_only: bool) -> int:
    if isinstance(e, SimpleLie):
        return nu_simple(e.descriptor).nu
    if isinstance(e, (SolvableAtom, FiniteAtom)):
        return 0
    if isinstance(e, DirectProduct):
        return sum(_eval(f, bound_only) for f in e.factors)
    if isinstance(e, FreeProduct):
        if _is_trivial(e.left) or _is_trivial(e.right):
            raise RuleNotApplicable(
                "free product rule needs both factors nontrivial"
            )
        if _has_order_two(e.left) and _has_order_two(e.right):
            raise RuleNotApplicable(
                "free product rule excludes Z/2 * Z/2 (infinite dihedral)"
            )
        return max(1, _eval(e.left, bound_only), _eval(e.right, bound_only))
    if isinstance(e, Extension):
        if _eval(e.kernel, bound_only) != 0:
            raise RuleNotApplicable(
                "extension rule needs a kernel of free subgroup rank zero"
            )
        if e.mode in ("split", "central"):
            return _eval(e.quotient, bound_only)
        if bound_only:
            return _eval(e.quotient, bound_only)
        raise RuleNotApplicable(
            "general extensions only give an upper bound; use nu_upper_bound"
        )
    if isinstance(e, FiniteIndex):
        return _eval(e.inner, bound_only)
    raise TypeError(f"not a group expression: {e!r}")


def simple_factors(e: GroupExpr) -> list[RealFormDescriptor]:
    """All simple Lie atoms in the expression, in left-to-right order."""
    if isinstance(e, SimpleLie):
        return [e.descriptor]
    if isinstance(e, DirectProduct):
        return [d for f in e.factors for d in simple_factors(f)]
    if isinstance(e, FreeProduct):
        return simple_factors(e.left) + simple_factors(e.right)
    if isinstance(e, Extension):
        return simple_factors(e.kernel) + simple_factors(e.quotient)
    if isinstance(e, FiniteIndex):
        return simple_factors(e.inner)
    return []


# --- lexer -----------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<name>[A-Za-z][A-Za-z0-9]*\*?)|(?P<int>-?\d+)|(?P<sym>[()^/,*]))"
)


@dataclass(frozen=True)
class _Token:
    kind: str  # "name" | "int" | "sym" | "end"
    text: str
    offset: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            off = len(text) - len(stripped)
            raise ExprSyntaxError(f"unexpected character {stripped[0]!r}", off)
        if m.group("name") is not None:
            name = m.group("name")
            # a trailing '*' belongs to the name only for so*(...)
            if name.endswith("*") and name[:-1].lower() != "so":
                name = name[:-1]
                tokens.append(_Token("name", name, m.start("name")))
                tokens.append(_Token("sym", "*", m.end("name") - 1))
            else:
                tokens.append(_Token("name", name, m.start("name")))
        elif m.group("int") is not None:
            tokens.append(_Token("int", m.group("int"), m.start("int")))
        else:
            tokens.append(_Token("sym", m.group("sym"), m.start("sym")))
        pos = m.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


# --- parser ----------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def next(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_sym(self, sym: str) -> _Token:
        tok = self.next()
        if tok.kind != "sym" or tok.text != sym:
            raise ExprSyntaxError(f"expected {sym!r}", tok.offset)
        return tok

    def expect_int(self) -> int:
        tok = self.next()
        if tok.kind != "int":
            raise ExprSyntaxError("expected an integer", tok.offset)
        return int(tok.text)

    def parse(self) -> GroupExpr:
        e = self.parse_expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ExprSyntaxError(f"unexpected trailing input {tok.text!r}", tok.offset)
        return e

    def parse_expr(self) -> GroupExpr:
        e = self.parse_term()
        while True:
            tok = self.peek()
            if tok.kind == "name" and tok.text == "x":
                self.next()
                rhs = self.parse_term()
                e = _direct_product(e, rhs)
            elif tok.kind == "sym" and tok.text == "*":
                self.next()
                rhs = self.parse_term()
                e = FreeProduct(e, rhs)
            else:
                return e

    def parse_term(self) -> GroupExpr:
        atom = self.parse_atom()
        tok = self.peek()
        if tok.kind == "sym" and tok.text == "^":
            self.next()
            power_tok = self.peek()
            power = self.expect_int()
            if power < 1:
                raise ExprSyntaxError("power must be >= 1", power_tok.offset)
            if power == 1:
                return atom
            return DirectProduct((atom,) * power)
        return atom

    def parse_atom(self) -> GroupExpr:
        tok = self.next()
        if tok.kind == "sym" and tok.text == "(":
            e = self.parse_expr()
            self.expect_sym(")")
            return e
        if tok.kind != "name":
            raise ExprSyntaxError(f"expected an atom, got {tok.text!r}", tok.offset)
        name = tok.text
        lname = name.lower()
        if lname == "ext":
            self.expect_sym("(")
            kernel = self.parse_expr()
            self.expect_sym(",")
            quotient = self.parse_expr()
            self.expect_sym(",")
            mode_tok = self.next()
            if mode_tok.kind != "name" or mode_tok.text.lower() not in (
                "split", "central", "general",
            ):
                raise ExprSyntaxError("expected split, central, or general",
                                      mode_tok.offset)
            self.expect_sym(")")
            return Extension(kernel, quotient, mode_tok.text.lower())
        if lname == "fi":
            self.expect_sym("(")
            inner = self.parse_expr()
            self.expect_sym(")")
            return FiniteIndex(inner)
        if name == "Z":
            nxt = self.peek()
            if nxt.kind == "sym" and nxt.text == "/":
                self.next()
                order_tok = self.peek()
                order = self.expect_int()
                if order < 1:
                    raise ExprSyntaxError("finite order must be >= 1",
                                          order_tok.offset)
                return FiniteAtom(order)
            return SolvableAtom("Z")
        if name == "R":
            nxt = self.peek()
            if nxt.kind == "sym" and nxt.text == "^":
                self.next()
                n = self.expect_int()
                return SolvableAtom(f"R^{n}")
            return SolvableAtom("R^1")
        if lname == "solvable":
            return SolvableAtom("solvable")
        return SimpleLie(self.parse_descriptor(name, tok.offset))

    def parse_descriptor(self, name: str, offset: int) -> RealFormDescriptor:
        lname = name.lower()
        try:
            if lname in ("complex", "split", "compact"):
                self.expect_sym("(")
                t = self.parse_type()
                self.expect_sym(")")
                builder = {"complex": complex_simple, "split": split_form,
                           "compact": compact_form}[lname]
                return builder(t)
            if re.fullmatch(r"[EFG][2-8]", name):
                self.expect_sym("(")
                sig = self.expect_int()
                self.expect_sym(")")
                return exceptional_form(name[0], int(name[1]), sig)
            if lname in ("su", "so", "sp", "sl", "so*"):
                args = self.parse_args()
                return _classical_descriptor(lname, args, offset)
        except (InvalidRealForm, InvalidType) as err:
            raise InvalidRealForm(f"{err} (at offset {offset})") from err
        raise ExprSyntaxError(f"unknown atom {name!r}", offset)

    def parse_args(self) -> list:
        """Argument list: integers or the field markers R / H."""
        self.expect_sym("(")
        args: list = []
        while True:
            tok = self.next()
            if tok.kind == "int":
                args.append(int(tok.text))
            elif tok.kind == "name" and tok.text.upper() in ("R", "H"):
                args.append(tok.text.upper())
            else:
                raise ExprSyntaxError("expected an argument", tok.offset)
            tok = self.next()
            if tok.kind == "sym" and tok.text == ",":
                continue
            if tok.kind == "sym" and tok.text == ")":
                return args
            raise ExprSyntaxError("expected ',' or ')'", tok.offset)

    def parse_type(self) -> RootSystemType:
        tok = self.next()
        if tok.kind != "name":
            raise ExprSyntaxError("expected a root system type like A3", tok.offset)
        try:
            return RootSystemType.parse(tok.text)
        except InvalidType as err:
            raise ExprSyntaxError(str(err), tok.offset) from err


def _classical_descriptor(lname: str, args: list, offset: int) -> RealFormDescriptor:
    def bad() -> ExprSyntaxError:
        return ExprSyntaxError(f"bad arguments for {lname}{tuple(args)!r}", offset)

    ints = [a for a in args if isinstance(a, int)]
    if lname == "su":
        if len(args) == 1 and len(ints) == 1:
            return su(ints[0], 0)
        if len(args) == 2 and len(ints) == 2:
            return su(*ints)
        raise bad()
    if lname == "sl":
        if len(args) == 2 and len(ints) == 1 and args[1] == "R":
            return sl_R(ints[0])
        if len(args) == 2 and len(ints) == 1 and args[1] == "H":
            return sl_H(ints[0])
        raise bad()
    if lname == "so":
        if len(args) == 1 and len(ints) == 1:
            return so(ints[0], 0)
        if len(args) == 2 and len(ints) == 2:
            return so(*ints)
        raise bad()
    if lname == "so*":
        if len(args) == 1 and len(ints) == 1:
            return so_star(ints[0])
        raise bad()
    if lname == "sp":
        if len(args) == 1 and len(ints) == 1:
            return sp(ints[0], 0)
        if len(args) == 2 and len(ints) == 1 and args[1] == "R":
            return sp_R(ints[0])
        if len(args) == 2 and len(ints) == 2:
            return sp(*ints)
        raise bad()
    raise bad()  # pragma: no cover


def _direct_product(left: GroupExpr, right: GroupExpr) -> DirectProduct:
    lf = left.factors if isinstance(left, DirectProduct) else (left,)
    rf = right.factors if isinstance(right, DirectProduct) else (right,)
    return DirectProduct(lf + rf)


def parse_group_expr(text: str) -> GroupExpr:
    """Parse a group expression.  Whitespace-insensitive and deterministic;
    raises :class:`ExprSyntaxError` with a byte offset on malformed input."""
    return _Parser(text).parse()


def pretty(e: GroupExpr) -> str:
    """Canonical text form; parse(pretty(e)) == e for parser-producible ASTs."""
    if isinstance(e, SimpleLie):
        return str(e.descriptor)
    if isinstance(e, SolvableAtom):
        return e.label
    if isinstance(e, FiniteAtom):
        return f"Z/{e.order}"
    if isinstance(e, DirectProduct):
        return " x ".join(_pretty_child(f) for f in e.factors)
    if isinstance(e, FreeProduct):
        return f"{_pretty_child(e.left)} * {_pretty_child(e.right)}"
    if isinstance(e, Extension):
        return f"ext({pretty(e.kernel)}, {pretty(e.quotient)}, {e.mode})"
    if isinstance(e, FiniteIndex):
        return f"fi({pretty(e.inner)})"
    raise TypeError(f"not a group expression: {e!r}")


def _pretty_child(e: GroupExpr) -> str:
    if isinstance(e, (DirectProduct, FreeProduct)):
        return f"({pretty(e)})"
    return pretty(e)

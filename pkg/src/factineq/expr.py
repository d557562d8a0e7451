"""The claim mini-language: AST, recursive-descent parser, printer, evaluator.

Grammar (highest binding last)::

    expr    := term (('+'|'-') term)*
    term    := unary (('*'|'/') unary)*
    unary   := '-' unary | power
    power   := postfix ('^' unary)?
    postfix := atom '!'*
    atom    := INT | 'k' | 'n' | '(' expr ')'

The only variables are ``k`` (summation index) and ``n`` (range end).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DivisionByZeroError,
    DomainError,
    EvaluationError,
    ParseError,
    ResourceLimitError,
    UnboundVariableError,
)
from .numeric import factorial

# Largest exponent accepted by '^'; keeps a typo like 2^(10!) from running away.
EXPONENT_CAP = 100_000

VARIABLES = ("k", "n")


class Expr:
    """Base class of immutable expression nodes."""

    __slots__ = ()

    def __str__(self):
        return pretty(self)

    def free_vars(self):
        out = set()
        stack = [self]
        while stack:
            node = stack.pop()
            if isinstance(node, Var):
                out.add(node.name)
            else:
                stack.extend(node.children())
        return out

    def children(self):
        return ()


@dataclass(frozen=True)
class Int(Expr):
    value: int

    def __post_init__(self):
        if not isinstance(self.value, int) or self.value < 0:
            raise ValueError(f"integer literal must be a nonnegative int, got {self.value!r}")


@dataclass(frozen=True)
class Var(Expr):
    name: str

    def __post_init__(self):
        if self.name not in VARIABLES:
            raise ValueError(f"unknown variable {self.name!r}")


@dataclass(frozen=True)
class Neg(Expr):
    operand: Expr

    def children(self):
        return (self.operand,)


@dataclass(frozen=True)
class Factorial(Expr):
    operand: Expr

    def children(self):
        return (self.operand,)


@dataclass(frozen=True)
class _Binary(Expr):
    left: Expr
    right: Expr

    def children(self):
        return (self.left, self.right)


class Add(_Binary):
    pass


class Sub(_Binary):
    pass


class Mul(_Binary):
    pass


class Div(_Binary):
    pass


class Pow(_Binary):
    pass


# Binding strength of each printed form; mirrors the grammar levels.
_EXPR, _TERM, _UNARY, _POWER, _POSTFIX, _ATOM = range(6)
_SYMBOL = {Add: "+", Sub: "-", Mul: "*", Div: "/", Pow: "^"}


def _level(node):
    if isinstance(node, (Add, Sub)):
        return _EXPR
    if isinstance(node, (Mul, Div)):
        return _TERM
    if isinstance(node, Neg):
        return _UNARY
    if isinstance(node, Pow):
        return _POWER
    if isinstance(node, Factorial):
        return _POSTFIX
    return _ATOM


def pretty(node):
    """Render ``node`` with the minimal parentheses that reparse to the same tree."""

    def wrap(child, needed):
        text = pretty(child)
        return f"({text})" if _level(child) < needed else text

    if isinstance(node, Int):
        return str(node.value)
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Neg):
        return "-" + wrap(node.operand, _UNARY)
    if isinstance(node, Factorial):
        return wrap(node.operand, _POSTFIX) + "!"
    if isinstance(node, Pow):
        return f"{wrap(node.left, _POSTFIX)}^{wrap(node.right, _UNARY)}"
    if isinstance(node, (Add, Sub)):
        return f"{wrap(node.left, _EXPR)} {_SYMBOL[type(node)]} {wrap(node.right, _TERM)}"
    if isinstance(node, (Mul, Div)):
        return f"{wrap(node.left, _TERM)} {_SYMBOL[type(node)]} {wrap(node.right, _UNARY)}"
    raise TypeError(f"not an expression node: {node!r}")


# --- parsing -----------------------------------------------------------------

_PUNCT = "+-*/^!()"


def _tokenize(text):
    """Yield (kind, value, byte_offset); kind is 'int', 'var', a punctuation char, or 'eof'."""
    tokens = []
    i = 0
    byte = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            byte += len(ch.encode("utf-8"))
            i += 1
            continue
        start_byte = byte
        if ch in "0123456789":
            j = i
            while j < len(text) and text[j] in "0123456789":
                j += 1
            tokens.append(("int", int(text[i:j]), start_byte))
            byte += j - i
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            if word not in VARIABLES:
                raise ParseError(f"unknown identifier {word!r}", start_byte, "'k' or 'n'", text)
            tokens.append(("var", word, start_byte))
            byte += len(word.encode("utf-8"))
            i = j
        elif ch in _PUNCT:
            tokens.append((ch, ch, start_byte))
            byte += 1
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", start_byte, None, text)
    tokens.append(("eof", None, byte))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    @property
    def kind(self):
        return self.tokens[self.pos][0]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected):
        kind, value, offset = self.tokens[self.pos]
        found = "end of input" if kind == "eof" else repr(str(value))
        raise ParseError(f"unexpected {found}", offset, expected, self.text)

    def expr(self):
        node = self.term()
        while self.kind in ("+", "-"):
            op = self.advance()[0]
            node = (Add if op == "+" else Sub)(node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.kind in ("*", "/"):
            op = self.advance()[0]
            node = (Mul if op == "*" else Div)(node, self.unary())
        return node

    def unary(self):
        if self.kind == "-":
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self):
        base = self.postfix()
        if self.kind == "^":
            self.advance()
            return Pow(base, self.unary())
        return base

    def postfix(self):
        node = self.atom()
        while self.kind == "!":
            self.advance()
            node = Factorial(node)
        return node

    def atom(self):
        kind = self.kind
        if kind == "int":
            return Int(self.advance()[1])
        if kind == "var":
            return Var(self.advance()[1])
        if kind == "(":
            self.advance()
            node = self.expr()
            if self.kind != ")":
                self.fail("')'")
            self.advance()
            return node
        self.fail("integer, 'k', 'n' or '('")


def parse(text):
    """Parse ``text`` into an :class:`Expr`; raises :class:`ParseError`."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    parser = _Parser(text)
    node = parser.expr()
    if parser.kind != "eof":
        parser.fail("operator or end of input")
    return node


# --- evaluation --------------------------------------------------------------


def evaluate(node, k=None, n=None):
    """Exact value of ``node`` with the given bindings, as a Fraction."""
    env = {"k": k, "n": n}
    return _eval(node, env)


def _eval(node, env):
    if isinstance(node, Int):
        return Fraction(node.value)
    if isinstance(node, Var):
        value = env[node.name]
        if value is None:
            raise UnboundVariableError(f"variable {node.name} is unbound", node)
        return Fraction(value)
    if isinstance(node, Neg):
        return -_eval(node.operand, env)
    if isinstance(node, Factorial):
        arg = _eval(node.operand, env)
        if arg.denominator != 1 or arg < 0:
            raise DomainError(f"factorial of {'non-integer' if arg.denominator != 1 else 'negative'} value {arg} in {pretty(node)}", node)
        return Fraction(factorial(arg.numerator))
    left = _eval(node.left, env)
    right = _eval(node.right, env)
    if isinstance(node, Add):
        return left + right
    if isinstance(node, Sub):
        return left - right
    if isinstance(node, Mul):
        return left * right
    if isinstance(node, Div):
        if right == 0:
            raise DivisionByZeroError(f"division by zero in {pretty(node)}", node)
        return left / right
    if isinstance(node, Pow):
        if right.denominator != 1 or right < 0:
            raise DomainError(f"exponent {right} is not a nonnegative integer in {pretty(node)}", node)
        if right.numerator > EXPONENT_CAP:
            raise ResourceLimitError(f"exponent {right} exceeds the exponent cap {EXPONENT_CAP} in {pretty(node)}")
        return left ** right.numerator
    raise EvaluationError(f"cannot evaluate {node!r}", node)

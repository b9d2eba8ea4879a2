# Copyright 2023 Julian Knutsen
#
# Permission is hereby granted, free of charge, to any person obtaining a copy of
# this software and associated documentation files (the “Software”), to deal in
# the Software without restriction, including without limitation the rights to use,
# copy, modify, merge, publish, distribute, sublicense, and/or sell copies of the
# Software, and to permit persons to whom the Software is furnished to do so,
# subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED “AS IS”, WITHOUT WARRANTY OF ANY KIND,
# EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
# OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
# NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
# HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
# WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
# FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
# OTHER DEALINGS IN THE SOFTWARE.

"""Closed-form expression trees: the right-hand side of every identity.

Trees are immutable. The textual form is fully parenthesized prefix notation::

    (div (mul 7 zeta3) (mul 8 (pow pi 2)))

Literals are integers or rationals written ``p/q``; atoms that are not literals
must be registered constant names.
"""

import abc
import dataclasses
import fractions
import logging
import math
import re
import typing

from idverify import exceptions
from idverify.constants import registry

logger = logging.getLogger(__name__)

Operand = typing.Union["ClosedForm", int, fractions.Fraction, str]


class ClosedForm(abc.ABC):
    @abc.abstractmethod
    def evaluate(self) -> float:
        pass

    @abc.abstractmethod
    def to_prefix(self) -> str:
        pass

    @abc.abstractmethod
    def depth(self) -> int:
        pass

    def __str__(self):
        return self.to_prefix()


@dataclasses.dataclass(frozen=True)
class Num(ClosedForm):
    value: fractions.Fraction

    def __post_init__(self):
        if not isinstance(self.value, fractions.Fraction):
            object.__setattr__(self, "value", fractions.Fraction(self.value))

    def evaluate(self) -> float:
        return float(self.value)

    def to_prefix(self) -> str:
        if self.value.denominator == 1:
            return str(self.value.numerator)
        return f"{self.value.numerator}/{self.value.denominator}"

    def depth(self) -> int:
        return 1


@dataclasses.dataclass(frozen=True)
class Const(ClosedForm):
    name: str

    def __post_init__(self):
        if not registry.is_registered(self.name):
            raise exceptions.UnknownNameError(f"unknown constant: {self.name}")

    def evaluate(self) -> float:
        return registry.const_value(self.name)

    def to_prefix(self) -> str:
        return self.name

    def depth(self) -> int:
        return 1


def _checked_log(x: float) -> float:
    if x <= 0:
        raise exceptions.DomainError(f"log of non-positive value {x}")
    return math.log(x)


def _checked_sqrt(x: float) -> float:
    if x < 0:
        raise exceptions.DomainError(f"sqrt of negative value {x}")
    return math.sqrt(x)


def _checked_tan(x: float) -> float:
    if math.cos(x) == 0.0:
        raise exceptions.DomainError(f"tan undefined at {x}")
    return math.tan(x)


def _checked_div(x: float, y: float) -> float:
    if y == 0.0:
        raise exceptions.DomainError("division by zero")
    return x / y


def _checked_pow(x: float, y: float) -> float:
    if x == 0.0 and y < 0:
        raise exceptions.DomainError("zero raised to a negative power")
    if x < 0 and not float(y).is_integer():
        raise exceptions.DomainError(f"negative base {x} with non-integer exponent {y}")
    return math.pow(x, y)


UNARY_OPS: dict[str, typing.Callable[[float], float]] = {
    "neg": lambda x: -x,
    "sqrt": _checked_sqrt,
    "exp": math.exp,
    "log": _checked_log,
    "sin": math.sin,
    "cos": math.cos,
    "tan": _checked_tan,
    "sinh": math.sinh,
    "cosh": math.cosh,
    "arctan": math.atan,
    "arcsinh": math.asinh,
}

BINARY_OPS: dict[str, typing.Callable[[float, float], float]] = {
    "add": lambda x, y: x + y,
    "sub": lambda x, y: x - y,
    "mul": lambda x, y: x * y,
    "div": _checked_div,
    "pow": _checked_pow,
}


def _finite(value: float, op: str) -> float:
    if not math.isfinite(value):
        raise exceptions.DomainError(f"{op} produced a non-finite value")
    return value


@dataclasses.dataclass(frozen=True)
class Unary(ClosedForm):
    op: str
    arg: ClosedForm

    def __post_init__(self):
        if self.op not in UNARY_OPS:
            raise exceptions.ValidationError(f"unknown unary op: {self.op}")

    def evaluate(self) -> float:
        try:
            return _finite(UNARY_OPS[self.op](self.arg.evaluate()), self.op)
        except OverflowError as exc:
            raise exceptions.DomainError(f"{self.op} overflowed") from exc

    def to_prefix(self) -> str:
        return f"({self.op} {self.arg.to_prefix()})"

    def depth(self) -> int:
        return 1 + self.arg.depth()


@dataclasses.dataclass(frozen=True)
class Binary(ClosedForm):
    op: str
    left: ClosedForm
    right: ClosedForm

    def __post_init__(self):
        if self.op not in BINARY_OPS:
            raise exceptions.ValidationError(f"unknown binary op: {self.op}")

    def evaluate(self) -> float:
        try:
            value = BINARY_OPS[self.op](self.left.evaluate(), self.right.evaluate())
        except OverflowError as exc:
            raise exceptions.DomainError(f"{self.op} overflowed") from exc
        return _finite(value, self.op)

    def to_prefix(self) -> str:
        return f"({self.op} {self.left.to_prefix()} {self.right.to_prefix()})"

    def depth(self) -> int:
        return 1 + max(self.left.depth(), self.right.depth())


def cf_eval(expr: ClosedForm) -> float:
    return expr.evaluate()


# builders


def wrap(x: Operand) -> ClosedForm:
    if isinstance(x, ClosedForm):
        return x
    if isinstance(x, str):
        return Const(x)
    if isinstance(x, bool) or not isinstance(x, (int, fractions.Fraction)):
        raise exceptions.ValidationError(f"cannot build a closed form from {x!r}")
    return Num(fractions.Fraction(x))


def num(p: int, q: int = 1) -> Num:
    return Num(fractions.Fraction(p, q))


def const(name: str) -> Const:
    return Const(name)


def _fold(op: str, args: tuple[Operand, ...]) -> ClosedForm:
    if len(args) < 2:
        raise exceptions.ValidationError(f"{op} needs at least two operands")
    acc = wrap(args[0])
    for arg in args[1:]:
        acc = Binary(op, acc, wrap(arg))
    return acc


def add(*args: Operand) -> ClosedForm:
    return _fold("add", args)


def mul(*args: Operand) -> ClosedForm:
    return _fold("mul", args)


def sub(x: Operand, y: Operand) -> ClosedForm:
    return Binary("sub", wrap(x), wrap(y))


def div(x: Operand, y: Operand) -> ClosedForm:
    return Binary("div", wrap(x), wrap(y))


def pow_(x: Operand, y: Operand) -> ClosedForm:
    return Binary("pow", wrap(x), wrap(y))


def _unary(op: str) -> typing.Callable[[Operand], ClosedForm]:
    def build(x: Operand) -> ClosedForm:
        return Unary(op, wrap(x))

    build.__name__ = op
    return build


neg = _unary("neg")
sqrt = _unary("sqrt")
exp = _unary("exp")
log = _unary("log")
sin = _unary("sin")
cos = _unary("cos")
tan = _unary("tan")
sinh = _unary("sinh")
cosh = _unary("cosh")
arctan = _unary("arctan")
arcsinh = _unary("arcsinh")


# parser

_TOKEN_RE = re.compile(r"\(|\)|[^\s()]+")
_LITERAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def _tokenize(text: str) -> list[str]:
    tokens = _TOKEN_RE.findall(text)
    if "".join(tokens) != re.sub(r"\s+", "", text):
        raise exceptions.ParseError(f"unexpected characters in {text!r}")
    return tokens


def _parse_atom(token: str) -> ClosedForm:
    if _LITERAL_RE.match(token):
        try:
            return Num(fractions.Fraction(token))
        except ZeroDivisionError as exc:
            raise exceptions.ParseError(f"zero denominator in {token}") from exc
    if registry.is_registered(token):
        return Const(token)
    raise exceptions.ParseError(f"unknown atom: {token}")


def _parse(tokens: list[str], pos: int) -> tuple[ClosedForm, int]:
    if pos >= len(tokens):
        raise exceptions.ParseError("unexpected end of input")

    token = tokens[pos]
    if token == ")":
        raise exceptions.ParseError(f"unexpected ')' at token {pos}")
    if token != "(":
        return _parse_atom(token), pos + 1

    if pos + 1 >= len(tokens):
        raise exceptions.ParseError("unexpected end of input after '('")
    op = tokens[pos + 1]
    args = []
    pos += 2
    while pos < len(tokens) and tokens[pos] != ")":
        arg, pos = _parse(tokens, pos)
        args.append(arg)
    if pos >= len(tokens):
        raise exceptions.ParseError("missing ')'")

    if op in UNARY_OPS and len(args) == 1:
        return Unary(op, args[0]), pos + 1
    if op in BINARY_OPS and len(args) == 2:
        return Binary(op, args[0], args[1]), pos + 1
    raise exceptions.ParseError(f"bad operator or arity: ({op} with {len(args)} args)")


def parse_closed_form(text: str) -> ClosedForm:
    tokens = _tokenize(text)
    if not tokens:
        raise exceptions.ParseError("empty expression")
    expr, pos = _parse(tokens, 0)
    if pos != len(tokens):
        raise exceptions.ParseError(f"trailing tokens after position {pos}")
    return expr

"""A small expression language for power series.

Grammar (Python precedence, parsed with :mod:`ast`)::

    expr   := expr ('+' | '-') expr | expr ('*' | '/' | '@' | '∘') expr
            | '-' expr | expr ('^' | '**') integer | call | atom
    call   := name '(' expr [',' expr] ')'
    name   := sqrt | exp | log | revert | compose | cosh | sinh | sech
    atom   := 'x' | integer | parameter | '(' expr ')'

``a @ b`` and ``a ∘ b`` mean composition a(b(x)).  Juxtaposition such as
``4x`` or ``2(1+x)`` is read as multiplication.  Division cancels common
powers of x, so ``(1-sqrt(1-4x))/(2x)`` is the Catalan series; each such
cancellation costs one order, which is why expressions are evaluated with
some slack above the requested order.  Parameters (e.g. ``r``) are supplied
as rationals through ``env``.
"""

from __future__ import annotations

import ast
import re
from fractions import Fraction
from typing import Mapping, Union

from .errors import NoSeriesSqrt, OrderExceeded, ParseError
from .exact import rational_sqrt
from .powerseries import PowerSeries

Value = Union[Fraction, PowerSeries]

DEFAULT_SLACK = 8

_FUNCTIONS = {"sqrt", "exp", "log", "revert", "compose", "cosh", "sinh", "sech"}


def _preprocess(text: str) -> str:
    s = text.replace("∘", "@").replace("^", "**").replace("−", "-").replace("·", "*")
    s = re.sub(r"(\d)\s*(?=[A-Za-z(])", r"\1*", s)
    s = re.sub(r"\)\s*(?=[A-Za-z0-9(])", ")*", s)
    s = re.sub(r"\bx\s*(?=\()", "x*", s)
    return s


class _Evaluator:
    def __init__(self, order: int, env: Mapping[str, Fraction]):
        self.order = order
        self.env = dict(env)

    def series(self, v: Value) -> PowerSeries:
        if isinstance(v, PowerSeries):
            return v
        return PowerSeries.constant(v, self.order)

    def eval(self, node: ast.AST) -> Value:
        method = getattr(self, "_" + type(node).__name__, None)
        if method is None:
            raise ParseError(f"unsupported syntax: {type(node).__name__}", getattr(node, "col_offset", None))
        return method(node)

    def _Expression(self, node):
        return self.eval(node.body)

    def _Constant(self, node):
        if isinstance(node.value, bool) or not isinstance(node.value, int):
            raise ParseError(f"only integer literals are allowed, got {node.value!r}", node.col_offset)
        return Fraction(node.value)

    def _Name(self, node):
        if node.id == "x":
            return PowerSeries.x(self.order)
        if node.id in self.env:
            return Fraction(self.env[node.id])
        raise ParseError(f"unknown name {node.id!r}", node.col_offset)

    def _UnaryOp(self, node):
        v = self.eval(node.operand)
        if isinstance(node.op, ast.USub):
            return -v
        if isinstance(node.op, ast.UAdd):
            return v
        raise ParseError("unsupported unary operator", node.col_offset)

    def _BinOp(self, node):
        left = self.eval(node.left)
        right = self.eval(node.right)
        op = node.op
        if isinstance(op, ast.Add):
            return left + right
        if isinstance(op, ast.Sub):
            return left - right
        if isinstance(op, ast.Mult):
            return left * right
        if isinstance(op, ast.Div):
            if isinstance(right, Fraction):
                if right == 0:
                    raise ParseError("division by zero", node.col_offset)
                return left / right
            return self.series(left).divide_exact(right)
        if isinstance(op, ast.Pow):
            if not isinstance(right, Fraction) or right.denominator != 1:
                raise ParseError("exponent must be an integer constant", node.right.col_offset)
            k = int(right)
            if isinstance(left, Fraction):
                if left == 0 and k < 0:
                    raise ParseError("0 raised to a negative power", node.col_offset)
                return left**k
            return left**k
        if isinstance(op, ast.MatMult):
            return self.series(left).compose(self.series(right))
        raise ParseError("unsupported operator", node.col_offset)

    def _Call(self, node):
        if not isinstance(node.func, ast.Name) or node.func.id not in _FUNCTIONS:
            raise ParseError("unknown function", node.col_offset)
        name = node.func.id
        args = [self.eval(a) for a in node.args]
        if node.keywords:
            raise ParseError("keyword arguments are not supported", node.col_offset)
        expected = 2 if name == "compose" else 1
        if len(args) != expected:
            raise ParseError(f"{name} takes {expected} argument(s)", node.col_offset)
        if name == "compose":
            return self.series(args[0]).compose(self.series(args[1]))
        (a,) = args
        if name == "sqrt" and isinstance(a, Fraction):
            root = rational_sqrt(a)
            if root is None:
                raise NoSeriesSqrt(f"{a} is not a rational square")
            return root
        s = self.series(a)
        if name == "sqrt":
            return s.sqrt()
        if name == "exp":
            return s.exp()
        if name == "log":
            return s.log()
        if name == "revert":
            return s.revert()
        if name == "cosh":
            return (s.exp() + (-s).exp()) / 2
        if name == "sinh":
            return (s.exp() - (-s).exp()) / 2
        if name == "sech":
            return 2 / (s.exp() + (-s).exp())
        raise ParseError(f"unknown function {name}", node.col_offset)  # pragma: no cover


def parse_series(
    text: str,
    order: int,
    env: Mapping[str, Fraction] | None = None,
    slack: int = DEFAULT_SLACK,
) -> PowerSeries:
    """Evaluate an expression in x to a PowerSeries of exactly ``order``."""
    source = _preprocess(text)
    try:
        tree = ast.parse(source.strip(), mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse {text!r}: {exc.msg}", exc.offset) from None
    value = _Evaluator(order + slack, env or {}).eval(tree)
    if isinstance(value, Fraction):
        return PowerSeries.constant(value, order)
    if value.order < order:
        raise OrderExceeded(
            f"{text!r} is only known to order {value.order}; increase slack to reach order {order}"
        )
    return value.truncate(order)

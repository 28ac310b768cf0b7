"""Plain-text expression grammar for polynomials and rational functions.

Integers, variables a1.., b1.., c0..c99, z1.., t, the token INF, operators
+ - * / ^ and parentheses. Named macros expand to predefined values.
"""
import ast
import re
from typing import Dict, Mapping, Optional

from services.algebra.mpoly import MPoly
from services.algebra.ratfn import RatFn
from services.algebra.varids import T, VarId, alpha, beta, c, z
from services.errors import ExpressionError

_VARIABLE = re.compile(r"^(a|b|c|z)(\d{1,2})$")
_ALLOWED = re.compile(r"^[\sA-Za-z0-9_+\-*/^().]*$")


def _variable(name: str) -> Optional[VarId]:
    if name == "t":
        return T
    match = _VARIABLE.match(name)
    if not match:
        return None
    prefix, index = match.group(1), int(match.group(2))
    if prefix == "c":
        return c(index)
    if index < 1:
        return None
    return {"a": alpha, "b": beta, "z": z}[prefix](index)


def parse_expression(text: str, macros: Optional[Mapping[str, RatFn]] = None) -> RatFn:
    """Parse text into a RatFn; '/' keeps the divisor as denominator factors."""
    macros = dict(macros or {})
    if not text.strip():
        raise ExpressionError("empty expression", 1)
    if not _ALLOWED.match(text):
        bad = next(i for i, ch in enumerate(text) if not _ALLOWED.match(ch))
        raise ExpressionError(f"unexpected character {text[bad]!r}", bad + 1)
    source = text.replace("^", "**")
    try:
        tree = ast.parse(source.strip(), mode="eval")
    except SyntaxError as e:
        raise ExpressionError("syntax error", e.offset) from None

    def column(node: ast.AST) -> int:
        return getattr(node, "col_offset", 0) + 1

    def integer(node: ast.AST) -> int:
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return node.value
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            value = integer(node.operand)
            return -value if isinstance(node.op, ast.USub) else value
        raise ExpressionError("exponent must be an integer literal", column(node))

    def _eval(node: ast.AST) -> RatFn:
        if isinstance(node, ast.Constant):
            if isinstance(node.value, bool) or not isinstance(node.value, int):
                raise ExpressionError(f"unsupported literal {node.value!r}", column(node))
            return RatFn(node.value)
        if isinstance(node, ast.Name):
            if node.id == "INF":
                return RatFn.INF()
            if node.id in macros:
                return macros[node.id]
            var = _variable(node.id)
            if var is None:
                raise ExpressionError(f"unknown name {node.id!r}", column(node))
            return RatFn.from_poly(MPoly.var(var))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            value = _eval(node.operand)
            return -value if isinstance(node.op, ast.USub) else value
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                return _eval(node.left) ** integer(node.right)
            left, right = _eval(node.left), _eval(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                return left / right
        raise ExpressionError(f"unsupported syntax {type(node).__name__}", column(node))

    return _eval(tree.body)


def parse_polynomial(text: str, macros: Optional[Mapping[str, RatFn]] = None) -> MPoly:
    return parse_expression(text, macros).to_poly()


def macro_table(definitions: Dict[str, str]) -> Dict[str, RatFn]:
    """Parse macro definitions in order; later ones may use earlier ones."""
    table: Dict[str, RatFn] = {}
    for name, body in definitions.items():
        table[name] = parse_expression(body, table)
    return table

"""Text and JSON encodings of forms and combinant families.

Rationals are always strings (``"3"``, ``"-1/2"``); nothing passes through
floating point.  Forms are ``{"order": d, "coeffs": [...]}`` in the raw
monomial basis unless ``binomial=True``.
"""

from __future__ import annotations

import ast
import json
from fractions import Fraction

from .binform import BinaryForm, from_binomial, to_binomial
from .combinant import CombinantVector


class ParseError(ValueError):
    pass


def rational_str(x) -> str:
    return str(Fraction(x))


def parse_rational(x) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise ParseError(f"not an exact rational: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            pass
    raise ParseError(f"malformed rational: {x!r}")


def form_to_json(f: BinaryForm, binomial=False) -> dict:
    coeffs = to_binomial(f) if binomial else f.coeffs
    return {"order": f.order, "coeffs": [rational_str(c) for c in coeffs]}


def form_from_json(obj, binomial=False) -> BinaryForm:
    if isinstance(obj, dict):
        if "coeffs" not in obj:
            raise ParseError("form object needs a 'coeffs' entry")
        coeffs = obj["coeffs"]
        order = obj.get("order")
    elif isinstance(obj, list):
        coeffs, order = obj, None
    else:
        raise ParseError(f"cannot read a form from {obj!r}")
    if not isinstance(coeffs, list) or not coeffs:
        raise ParseError("coefficient list must be nonempty")
    values = [parse_rational(c) for c in coeffs]
    if order is not None and (not isinstance(order, int) or order != len(values) - 1):
        raise ParseError(f"order {order!r} disagrees with {len(values)} coefficients")
    return from_binomial(values) if binomial else BinaryForm(values)


# polynomial expressions in x1, x2 ------------------------------------------

def _poly_add(p, q, sign=1):
    out = dict(p)
    for m, c in q.items():
        out[m] = out.get(m, 0) + sign * c
    return {m: c for m, c in out.items() if c}


def _poly_mul(p, q):
    out = {}
    for (a1, b1), c1 in p.items():
        for (a2, b2), c2 in q.items():
            m = (a1 + a2, b1 + b2)
            out[m] = out.get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c}


def _constant(p):
    if not p:
        return Fraction(0)
    if set(p) != {(0, 0)}:
        return None
    return p[(0, 0)]


def _eval(node):
    if isinstance(node, ast.Expression):
        return _eval(node.body)
    if isinstance(node, ast.Constant):
        if isinstance(node.value, int) and not isinstance(node.value, bool):
            return {(0, 0): Fraction(node.value)} if node.value else {}
        raise ParseError(f"unsupported constant {node.value!r}")
    if isinstance(node, ast.Name):
        if node.id == "x1":
            return {(1, 0): Fraction(1)}
        if node.id == "x2":
            return {(0, 1): Fraction(1)}
        raise ParseError(f"unknown variable {node.id!r}; use x1 and x2")
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        p = _eval(node.operand)
        return {m: -c for m, c in p.items()} if isinstance(node.op, ast.USub) else p
    if isinstance(node, ast.BinOp):
        left, right = _eval(node.left), _eval(node.right)
        if isinstance(node.op, ast.Add):
            return _poly_add(left, right)
        if isinstance(node.op, ast.Sub):
            return _poly_add(left, right, -1)
        if isinstance(node.op, ast.Mult):
            return _poly_mul(left, right)
        if isinstance(node.op, ast.Div):
            c = _constant(right)
            if not c:
                raise ParseError("can only divide by a nonzero constant")
            return {m: v / c for m, v in left.items()}
        if isinstance(node.op, ast.Pow):
            e = _constant(right)
            if e is None or e.denominator != 1 or e < 0:
                raise ParseError("exponents must be nonnegative integers")
            out = {(0, 0): Fraction(1)}
            for _ in range(int(e)):
                out = _poly_mul(out, left)
            return out
    raise ParseError(f"unsupported syntax: {ast.dump(node)}")


def parse_expression(text: str) -> BinaryForm:
    """Parse e.g. ``"3*x1^2*x2 - 1/2*x2^3"`` into a form; must be homogeneous."""
    try:
        tree = ast.parse(text.replace("^", "**").strip(), mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse expression {text!r}") from exc
    poly = _eval(tree)
    if not poly:
        return BinaryForm.zero(0)
    degrees = {a + b for a, b in poly}
    if len(degrees) != 1:
        raise ParseError(f"expression is not homogeneous (degrees {sorted(degrees)})")
    d = degrees.pop()
    return BinaryForm([poly.get((d - j, j), 0) for j in range(d + 1)], d)


def parse_form(text, binomial=False) -> BinaryForm:
    """A form from JSON (array or object) or from a polynomial expression."""
    if not isinstance(text, str):
        return form_from_json(text, binomial)
    text = text.strip()
    if not text:
        raise ParseError("empty input")
    if text[0] in "[{":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"malformed JSON: {exc}") from exc
        return form_from_json(obj, binomial)
    return parse_expression(text)


def combinants_to_json(E: CombinantVector, binomial=False) -> dict:
    return {
        "r": E.r,
        "d": E.d,
        "orders": {str(q): n for q, n in E.orders().items()},
        "components": {str(q): form_to_json(f, binomial) for q, f in E.components.items()},
    }


def combinants_from_json(obj, binomial=False) -> CombinantVector:
    if not isinstance(obj, dict) or "r" not in obj or "d" not in obj:
        raise ParseError("combinant file needs 'r' and 'd'")
    comps = obj.get("components")
    if comps is None:
        comps = {k: v for k, v in obj.items() if k.isdigit()}
    try:
        parsed = {int(q): form_from_json(f, binomial) for q, f in comps.items()}
    except (TypeError, AttributeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"bad component table: {exc}") from exc
    return CombinantVector(int(obj["r"]), int(obj["d"]), parsed)

"""Text syntax for algebra elements: parser and deterministic printer.

Grammar (whitespace insensitive):

    sum     := ["-"] tensor { ("+" | "-") tensor }
    tensor  := product [ "#" product ]          (single tensor level)
    product := factor { ("*" | "/") factor }    (division by scalars only)
    factor  := atom [ "^" integer ]
    atom    := integer | "q" | "k1" | "k2"
             | ("E" | "F" | "h" | "C") "[" integer "]"
             | "(" sum ")"

The printer emits monomials sorted by grading then structure, with
coefficients in canonical Q(q) form, and round-trips through the parser.
"""

from __future__ import annotations

from .scalars import QONE, QVAR, QScalar, pformat
from .superalg import (Element, Monomial, ONE_M, TensorElement, gen_C, gen_E,
                       gen_F, gen_h, gen_k1, gen_k2)


class ParseError(ValueError):
    pass


class DslExpr:
    """Parse-tree node: kind plus children (subtrees or literal values)."""

    __slots__ = ("kind", "children")

    def __init__(self, kind, *children):
        self.kind = kind
        self.children = children

    def __repr__(self):
        inner = ", ".join(repr(c) for c in self.children)
        return f"DslExpr({self.kind!r}{', ' if inner else ''}{inner})"


# -- tokenizer ---------------------------------------------------------------

_SYMBOLS = "+-*/^()[]#"


def _tokenize(src):
    toks = []
    i, n = 0, len(src)
    while i < n:
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            toks.append(("int", int(src[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            toks.append(("name", src[i:j], i))
            i = j
            continue
        if ch in _SYMBOLS:
            toks.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r} at position {i}")
    toks.append(("end", None, n))
    return toks


class _Parser:
    def __init__(self, src):
        self.src = src
        self.toks = _tokenize(src)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos][0]

    def next(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect(self, kind):
        t = self.next()
        if t[0] != kind:
            raise ParseError(f"expected {kind!r} at position {t[2]}, found {t[1]!r}")
        return t

    def parse(self):
        e = self.sum()
        t = self.next()
        if t[0] != "end":
            raise ParseError(f"trailing input at position {t[2]}: {t[1]!r}")
        return e

    def sum(self):
        if self.peek() == "-":
            self.next()
            acc = DslExpr("neg", self.tensor())
        else:
            acc = self.tensor()
        while self.peek() in ("+", "-"):
            op = self.next()[0]
            rhs = self.tensor()
            acc = DslExpr("add" if op == "+" else "sub", acc, rhs)
        return acc

    def tensor(self):
        lhs = self.product()
        if self.peek() != "#":
            return lhs
        self.next()
        rhs = self.product()
        if self.peek() == "#":
            raise ParseError("only one tensor level is supported")
        return DslExpr("tensor", lhs, rhs)

    def product(self):
        acc = self.factor()
        while self.peek() in ("*", "/"):
            op = self.next()[0]
            rhs = self.factor()
            acc = DslExpr("mul" if op == "*" else "div", acc, rhs)
        return acc

    def factor(self):
        base = self.atom()
        if self.peek() == "^":
            self.next()
            n = self._signed_int()
            return DslExpr("pow", base, DslExpr("int", n))
        return base

    def _signed_int(self):
        sign = 1
        if self.peek() == "-":
            self.next()
            sign = -1
        t = self.expect("int")
        return sign * t[1]

    def atom(self):
        t = self.next()
        kind, val, pos = t
        if kind == "int":
            return DslExpr("int", val)
        if kind == "(":
            inner = self.sum()
            self.expect(")")
            return inner
        if kind == "name":
            if val == "q":
                return DslExpr("q")
            if val in ("k1", "k2"):
                return DslExpr("k", val)
            if val in ("E", "F", "h", "C"):
                self.expect("[")
                idx = self._signed_int()
                self.expect("]")
                if val in ("h", "C") and idx == 0:
                    raise ParseError(f"{val}[0] is not a generator")
                return DslExpr("gen", val, idx)
            raise ParseError(f"unknown name {val!r} at position {pos}")
        raise ParseError(f"unexpected token {val!r} at position {pos}")


# -- evaluation ----------------------------------------------------------------

_GEN = {"E": gen_E, "F": gen_F, "h": gen_h, "C": gen_C}


def eval_expr(node):
    k = node.kind
    if k == "int":
        return Element.from_scalar(node.children[0])
    if k == "q":
        return Element.from_scalar(QVAR)
    if k == "k":
        return gen_k1() if node.children[0] == "k1" else gen_k2()
    if k == "gen":
        return _GEN[node.children[0]](node.children[1])
    if k == "neg":
        return -eval_expr(node.children[0])
    if k in ("add", "sub"):
        a = eval_expr(node.children[0])
        b = eval_expr(node.children[1])
        if isinstance(a, TensorElement) != isinstance(b, TensorElement):
            raise ParseError("cannot add a tensor to a non-tensor")
        return a + b if k == "add" else a - b
    if k == "mul":
        a = eval_expr(node.children[0])
        b = eval_expr(node.children[1])
        if isinstance(a, TensorElement) != isinstance(b, TensorElement):
            raise ParseError("cannot multiply a tensor by a non-tensor")
        return a * b
    if k == "div":
        a = eval_expr(node.children[0])
        b = eval_expr(node.children[1])
        c = _as_scalar(b)
        if c is None:
            raise ParseError("division is only defined by scalar subexpressions")
        if c.is_zero():
            raise ParseError("division by zero")
        return a.scale(c.inverse())
    if k == "pow":
        a = eval_expr(node.children[0])
        n = node.children[1].children[0]
        try:
            return a ** n
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    if k == "tensor":
        a = eval_expr(node.children[0])
        b = eval_expr(node.children[1])
        if isinstance(a, TensorElement) or isinstance(b, TensorElement):
            raise ParseError("nested tensors are not supported")
        return TensorElement.of(a, b)
    raise ParseError(f"unknown node kind {k!r}")


def _as_scalar(x):
    if isinstance(x, TensorElement):
        return None
    if x.is_zero():
        return QScalar()
    if len(x.terms) == 1 and ONE_M in x.terms:
        return x.terms[ONE_M]
    return None


def parse_element(src):
    """Parse a source string into an Element or TensorElement."""
    return eval_expr(_Parser(src).parse())


# -- printing --------------------------------------------------------------------

def format_monomial(m):
    parts = []
    for n in m.f:
        parts.append(f"F[{n}]")
    for name, e in (("k1", m.k1), ("k2", m.k2)):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    for s, mult in m.h:
        parts.append(f"h[{s}]" + (f"^{mult}" if mult > 1 else ""))
    for s, mult in m.c:
        parts.append(f"C[{s}]" + (f"^{mult}" if mult > 1 else ""))
    for n in m.e:
        parts.append(f"E[{n}]")
    return "*".join(parts) if parts else "1"


def _scalar_factor(c):
    """Coefficient as a leading product factor, parenthesized when composite."""
    s = str(c)
    plain = (len(c.num) <= 1 or sum(1 for x in c.num if x) == 1) and c.den == (1,)
    if plain and not s.startswith("-"):
        return s
    if s.startswith("(") or "/" in s:
        return s
    return f"({s})"


def _sign_split(c):
    """(sign, |c|) splitting off the sign of the leading numerator coefficient."""
    if c.num and c.num[-1] < 0:
        return "-", -c
    return "+", c


def _format_terms(items):
    out = []
    for sign, body in items:
        if not out:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f"{'+' if sign == '+' else '-'} {body}")
    return " ".join(out) if out else "0"


def format_element(x):
    if isinstance(x, TensorElement):
        return format_tensor(x)
    items = []
    for m in sorted(x.terms, key=Monomial.sort_key):
        sign, c = _sign_split(x.terms[m])
        ms = format_monomial(m)
        if m.is_one():
            body = str(c) if (c.den == (1,) and len([v for v in c.num if v]) <= 1) else f"({c})"
        elif c.is_one():
            body = ms
        else:
            body = f"{_scalar_factor(c)}*{ms}"
        items.append((sign, body))
    return _format_terms(items)


def format_tensor(x):
    items = []
    for m1, m2 in sorted(x.terms, key=lambda p: (p[0].sort_key(), p[1].sort_key())):
        sign, c = _sign_split(x.terms[(m1, m2)])
        left = format_monomial(m1)
        if not c.is_one():
            left = f"{_scalar_factor(c)}*{left}"
        items.append((sign, f"{left} # {format_monomial(m2)}"))
    return _format_terms(items)


def format_scalar(c):
    return str(c)


__all__ = ["DslExpr", "ParseError", "parse_element", "format_element",
           "format_tensor", "format_monomial", "format_scalar"]

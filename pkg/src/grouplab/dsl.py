"""Group-expression language.

Grammar::

    expr       := term ( "x" term )*
    term       := named | semidirect | "(" expr ")"
    named      := ("C"|"D"|"Q"|"S"|"A") int | "E(" int "," int ")"
                | "Heis(" int ")" | "SL2(" int ")" | "GL2(" int ")"
    semidirect := "sd(" expr "," expr "," matrix ")"
    matrix     := "[" row ("," row)* "]"
    row        := "[" int ("," int)* "]"

Whitespace between tokens is ignored. Products associate to the left.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import ParameterRangeError, ParseError
from .numtheory import is_prime


@dataclass(frozen=True)
class Named:
    family: str
    params: tuple[int, ...]


@dataclass(frozen=True)
class Product:
    left: "GroupSpec"
    right: "GroupSpec"


@dataclass(frozen=True)
class Semidirect:
    normal: "GroupSpec"
    acting: "GroupSpec"
    matrix: tuple[tuple[int, ...], ...]


GroupSpec = Union[Named, Product, Semidirect]

MAX_MATRIX_PRIME = 31
# longest first so "SL2(" wins over "S"
_KEYWORDS = ("Heis(", "SL2(", "GL2(", "sd(", "E(")
_LETTERS = "CDQSA"


def cyclic_factors(spec: GroupSpec) -> tuple[int, ...] | None:
    """Moduli of a spec built only from cyclic groups, else None."""
    if isinstance(spec, Named):
        if spec.family == "C":
            return spec.params
        if spec.family == "E":
            p, k = spec.params
            return (p,) * k
        return None
    if isinstance(spec, Product):
        left, right = cyclic_factors(spec.left), cyclic_factors(spec.right)
        if left is None or right is None:
            return None
        return left + right
    return None


def _check_named(family: str, params: tuple[int, ...], text: str, pos: int) -> None:
    def bad(msg):
        raise ParameterRangeError(msg, pos, text)

    if family == "C" and params[0] < 1:
        bad("C n needs n >= 1")
    elif family == "D" and params[0] < 3:
        bad("D n needs n >= 3")
    elif family == "Q":
        n = params[0]
        if n < 8 or n & (n - 1):
            bad("Q n needs n = 2^k with k >= 3")
    elif family in "SA" and params[0] < 1:
        bad(f"{family} n needs n >= 1")
    elif family == "E":
        p, k = params
        if not is_prime(p) or k < 1:
            bad("E(p,k) needs p prime and k >= 1")
    elif family == "Heis":
        p = params[0]
        if p == 2 or not is_prime(p):
            bad("Heis(p) needs an odd prime p")
    elif family in ("SL2", "GL2"):
        p = params[0]
        if not is_prime(p) or p > MAX_MATRIX_PRIME:
            bad(f"{family}(p) needs a prime p <= {MAX_MATRIX_PRIME}")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, expected: str):
        found = repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"
        raise ParseError(f"expected {expected}, found {found}", self.pos, self.text)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, token: str) -> bool:
        self.skip()
        return self.text.startswith(token, self.pos)

    def expect(self, token: str):
        if not self.peek(token):
            self.error(repr(token))
        self.pos += len(token)

    def integer(self) -> int:
        self.skip()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        digits = self.text[start:self.pos]
        if digits in ("", "-"):
            self.pos = start
            self.error("integer")
        return int(digits)

    def parse(self) -> GroupSpec:
        spec = self.expr()
        self.skip()
        if self.pos != len(self.text):
            self.error("'x' or end of input")
        return spec

    def expr(self) -> GroupSpec:
        spec = self.term()
        while self.peek("x"):
            self.pos += 1
            spec = Product(spec, self.term())
        return spec

    def term(self) -> GroupSpec:
        self.skip()
        start = self.pos
        if self.peek("("):
            self.pos += 1
            spec = self.expr()
            self.expect(")")
            return spec
        if self.peek("sd("):
            return self.semidirect()
        for kw in _KEYWORDS:
            if self.peek(kw):
                self.pos += len(kw)
                family = kw[:-1]
                params = (self.integer(),)
                if family == "E":
                    self.expect(",")
                    params += (self.integer(),)
                self.expect(")")
                _check_named(family, params, self.text, start)
                return Named(family, params)
        if self.pos < len(self.text) and self.text[self.pos] in _LETTERS:
            family = self.text[self.pos]
            self.pos += 1
            params = (self.integer(),)
            _check_named(family, params, self.text, start)
            return Named(family, params)
        self.error("group name, 'sd(' or '('")

    def semidirect(self) -> Semidirect:
        self.expect("sd(")
        self.skip()
        normal_at = self.pos
        normal = self.expr()
        self.expect(",")
        self.skip()
        acting_at = self.pos
        acting = self.expr()
        self.expect(",")
        self.skip()
        matrix_at = self.pos
        matrix = self.matrix()
        self.expect(")")
        moduli = cyclic_factors(normal)
        if moduli is None:
            raise ParameterRangeError("normal part must be a product of cyclic groups", normal_at, self.text)
        if not (isinstance(acting, Named) and acting.family == "C"):
            raise ParameterRangeError("acting part must be a single cyclic group C n", acting_at, self.text)
        if len(matrix) != len(moduli) or any(len(r) != len(moduli) for r in matrix):
            raise ParameterRangeError(
                f"matrix must be {len(moduli)}x{len(moduli)} for this normal part", matrix_at, self.text
            )
        return Semidirect(normal, acting, matrix)

    def matrix(self) -> tuple[tuple[int, ...], ...]:
        self.expect("[")
        rows = [self.row()]
        while self.peek(","):
            self.pos += 1
            rows.append(self.row())
        self.expect("]")
        return tuple(rows)

    def row(self) -> tuple[int, ...]:
        self.expect("[")
        vals = [self.integer()]
        while self.peek(","):
            self.pos += 1
            vals.append(self.integer())
        self.expect("]")
        return tuple(vals)


def parse_group_expr(text: str) -> GroupSpec:
    """Parse a group expression; raises :class:`ParseError` with a position."""
    return _Parser(text).parse()


def format_spec(spec: GroupSpec) -> str:
    """Canonical text for ``spec``; ``parse_group_expr`` inverts it."""
    if isinstance(spec, Named):
        f, ps = spec.family, spec.params
        if f in _LETTERS:
            return f"{f}{ps[0]}"
        return f"{f}({','.join(map(str, ps))})"
    if isinstance(spec, Product):
        right = format_spec(spec.right)
        if isinstance(spec.right, Product):
            right = f"({right})"
        return f"{format_spec(spec.left)} x {right}"
    matrix = "[" + ",".join("[" + ",".join(map(str, r)) + "]" for r in spec.matrix) + "]"
    return f"sd({format_spec(spec.normal)}, {format_spec(spec.acting)}, {matrix})"

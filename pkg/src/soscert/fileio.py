"""Text formats: polynomial grammar, zeros files, certificate files.

Polynomial grammar (documented in the README):
  expression  :=  term (('+' | '-') term)*
  term        :=  factor (['*' | '/'] factor)*     (adjacency = multiplication)
  factor      :=  atom ('^' integer)*
  atom        :=  integer | name | '(' expression ')' | '-' factor
Coefficients are integers or integer/integer; names are variables or the
field generator.  Whitespace and newlines inside an expression are ignored.

A zeros file holds one point per line:
  minpoly: <polynomial in Z> ; coords: <expr>, <expr>, ... [; label: text]
Lines starting with '#' are comments.  Omitting `minpoly:` (or giving a
degree-1 one) declares a rational point.  The generator is named `a`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Any, Iterable

from .multipoly import MultiPoly
from .numberfield import AlgebraicNumber, NumberField

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[() ^*/+-]))")


class ParseError(ValueError):
    pass


def _tokenize(text: str) -> list[str]:
    tokens: list[str] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r} at offset {pos}")
        tok = m.group(1) or m.group(2) or m.group(3)
        tok = "^" if tok == "**" else tok
        if tok.strip():
            tokens.append(tok)
        pos = m.end()
    return tokens


class _Parser:
    """Recursive descent over the token list; produces MultiPoly values."""

    def __init__(self, tokens: list[str], variables: tuple[str, ...],
                 field: NumberField | None, extra_names: dict[str, Any]):
        self.tokens = tokens
        self.pos = 0
        self.vars = variables
        self.field = field
        self.extra = extra_names

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of expression")
        self.pos += 1
        return tok

    def parse(self) -> MultiPoly:
        value = self.expression()
        if self.peek() is not None:
            raise ParseError(f"trailing input near {self.peek()!r}")
        return value

    def expression(self) -> MultiPoly:
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> MultiPoly:
        value = self.factor()
        while True:
            tok = self.peek()
            if tok in ("*", "/"):
                op = self.take()
                rhs = self.factor()
                if op == "*":
                    value = value * rhs
                else:
                    if not rhs.is_constant():
                        raise ParseError("division only by constants")
                    value = value / rhs.constant_value()
            elif tok is not None and tok not in ("+", "-", ")", "^"):
                value = value * self.factor()
            else:
                return value

    def factor(self) -> MultiPoly:
        value = self.atom()
        while self.peek() == "^":
            self.take()
            exp_tok = self.take()
            if not exp_tok.isdigit():
                raise ParseError(f"exponent must be a non-negative integer, got {exp_tok!r}")
            value = value ** int(exp_tok)
        return value

    def atom(self) -> MultiPoly:
        tok = self.take()
        if tok == "-":
            return -self.factor()
        if tok == "+":
            return self.factor()
        if tok == "(":
            value = self.expression()
            if self.take() != ")":
                raise ParseError("missing closing parenthesis")
            return value
        if tok.isdigit():
            return MultiPoly.constant(self.vars, Fraction(int(tok)))
        if tok in self.vars:
            return MultiPoly.variable(self.vars, tok)
        if tok in self.extra:
            return MultiPoly.constant(self.vars, self.extra[tok])
        if self.field is not None and tok == self.field.name:
            return MultiPoly.constant(self.vars, self.field.gen())
        raise ParseError(f"unknown name {tok!r}")


def names_in(text: str) -> list[str]:
    """Names in first-occurrence order; used to infer variables."""
    seen: list[str] = []
    for tok in _tokenize(text):
        if tok[0].isalpha() and tok not in seen:
            seen.append(tok)
    return seen


def parse_polynomial(text: str, variables: Iterable[str] | None = None,
                     field: NumberField | None = None,
                     extra_names: dict[str, Any] | None = None) -> MultiPoly:
    """Parse an expression; variables are inferred when not supplied."""
    tokens = _tokenize(text)
    if variables is None:
        reserved = {field.name} if field is not None else set()
        reserved.update(extra_names or ())
        variables = tuple(n for n in names_in(text) if n not in reserved)
    return _Parser(tokens, tuple(variables), field, extra_names or {}).parse()


def parse_univariate(text: str, var: str = "Z") -> list[Fraction]:
    """A polynomial in a single named variable as an ascending list."""
    poly = parse_polynomial(text, variables=(var,))
    out = [Fraction(0)] * (poly.total_degree() + 1)
    for mono, coef in poly.terms.items():
        out[mono[0]] = coef
    return out


# -- zeros files -------------------------------------------------------------


def parse_zero_line(line: str, variables: tuple[str, ...]) -> tuple[
        NumberField | None, list[Any], str]:
    """One `minpoly: ... ; coords: ...` line -> (field, coords, label)."""
    field: NumberField | None = None
    coords_text: str | None = None
    label = ""
    for part in line.split(";"):
        part = part.strip()
        if not part:
            continue
        key, _, rest = part.partition(":")
        key = key.strip().lower()
        if key == "minpoly":
            mp = parse_univariate(rest)
            if len(mp) > 2:
                field = NumberField(mp, "a")
        elif key == "coords":
            coords_text = rest
        elif key == "label":
            label = rest.strip()
        else:
            raise ParseError(f"unknown zeros-file key {key!r}")
    if coords_text is None:
        raise ParseError("zero line is missing `coords:`")
    exprs = _split_top_level(coords_text)
    if len(exprs) != len(variables):
        raise ParseError(f"expected {len(variables)} coordinates, got {len(exprs)}")
    coords = []
    for ex in exprs:
        poly = parse_polynomial(ex, variables=(), field=field)
        coords.append(poly.constant_value())
    return field, coords, label


def _split_top_level(text: str) -> list[str]:
    parts: list[str] = []
    depth = 0
    cur = ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    if cur.strip():
        parts.append(cur)
    return [p.strip() for p in parts]


def parse_zeros_file(text: str, variables: tuple[str, ...]) -> list[tuple[
        NumberField | None, list[Any], str]]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        out.append(parse_zero_line(line, variables))
    return out


# -- certificate files -------------------------------------------------------


def format_value(v: Any) -> str:
    return str(v)


def write_certificate_text(cert) -> str:
    """Serialize a Certificate; see read_certificate_text for the format."""
    lines = ["certificate"]
    lines.append("vars: " + ", ".join(cert.basis.variables))
    field = cert.field
    if field is not None:
        mp = " + ".join(_mp_term(c, i) for i, c in enumerate(field.minpoly_primitive) if c)
        lines.append(f"minpoly: {mp}")
        lines.append(f"generator: {field.name}")
    lines.append("coefficients: " + ", ".join(format_value(c) for c in cert.coefficients))
    for poly in cert.polynomials:
        lines.append("polynomial: " + str(poly))
    lines.append("gram:")
    for row in cert.gram:
        lines.append(",".join(format_value(v) for v in row))
    lines.append("end")
    return "\n".join(lines) + "\n"


def _mp_term(c: Fraction, i: int) -> str:
    if i == 0:
        return str(c)
    z = "Z" if i == 1 else f"Z^{i}"
    return z if c == 1 else f"{c}*{z}"


def read_certificate_text(text: str):
    """Parse the `certificate ... end` block into a Certificate."""
    from .cert import Certificate
    from .gram import monomial_basis

    lines = [ln.rstrip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln.strip() and not ln.strip().startswith("#")]
    if not lines or lines[0].strip() != "certificate" or lines[-1].strip() != "end":
        raise ParseError("certificate file must start with `certificate` and end with `end`")
    variables: tuple[str, ...] | None = None
    field: NumberField | None = None
    gen_name = "a"
    minpoly: list[Fraction] | None = None
    coeff_text: str | None = None
    poly_texts: list[str] = []
    gram_rows: list[str] = []
    in_gram = False
    for ln in lines[1:-1]:
        stripped = ln.strip()
        if in_gram:
            gram_rows.append(stripped)
            continue
        key, _, rest = stripped.partition(":")
        key = key.strip().lower()
        if key == "vars":
            variables = tuple(v.strip() for v in rest.split(",") if v.strip())
        elif key == "minpoly":
            minpoly = parse_univariate(rest)
        elif key == "generator":
            gen_name = rest.strip()
        elif key == "coefficients":
            coeff_text = rest
        elif key == "polynomial":
            poly_texts.append(rest)
        elif key == "gram":
            in_gram = True
        else:
            raise ParseError(f"unknown certificate key {key!r}")
    if variables is None or coeff_text is None or not poly_texts:
        raise ParseError("certificate file missing vars/coefficients/polynomials")
    if minpoly is not None:
        field = NumberField(minpoly, gen_name)
    coefficients = []
    for ex in _split_top_level(coeff_text):
        poly = parse_polynomial(ex, variables=(), field=field)
        coefficients.append(poly.constant_value())
    polynomials = [parse_polynomial(t, variables=variables, field=field)
                   for t in poly_texts]
    gram = []
    for row in gram_rows:
        vals = []
        for piece in row.split(","):
            poly = parse_polynomial(piece, variables=(), field=field)
            vals.append(poly.constant_value())
        gram.append(vals)
    degrees = {p.total_degree() for p in polynomials}
    if len(degrees) != 1:
        raise ParseError("certificate polynomials must share a degree")
    basis = monomial_basis(variables, degrees.pop())
    return Certificate(coefficients=coefficients, polynomials=polynomials,
                       gram=gram, basis=basis, field=field)

"""Parser for the identity language.

Grammar (whitespace is insignificant; products of term atoms are written by
juxtaposition, products inside unit expressions with * and /):

    identity := term '=' term
    term     := ['-'] prod (('+'|'-') prod)*
    prod     := atom (atom)*
    atom     := INT | 'eta' | 'eps' | 'h' | '[' usum ']' | '<' usum '>'
              | '(' term ')' | atom '^' INT
    usum     := ['-'] uexpr (('+'|'-') uexpr)*
    uexpr    := uatom (('*'|'/') uatom)*
    uatom    := IDENT | INT | '-' uatom | '(' usum ')' | uatom '^' INT

    hypotheses := 'unit' '(' usum ')' (',' 'unit' '(' usum ')')*

Compared to the strictest reading of the grammar this accepts sums directly
inside [..], <..> and unit(..) without extra parentheses, a leading minus
sign, and ^ exponents on unit atoms; rendered unit expressions round-trip.
Parse errors carry 1-based line and column numbers.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kmwterm as km


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} at line {line}, column {col}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    kind: str  # INT, IDENT, or a literal symbol
    text: str
    line: int
    col: int


_SYMBOLS = "+-*/^()[]<>=,"


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(Token("INT", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("IDENT", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in _SYMBOLS:
            tokens.append(Token(ch, ch, line, col))
            col += 1
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("EOF", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.text or 'end of input'!r}",
                             tok.line, tok.col)
        return self.next()

    def fail(self, message: str):
        tok = self.peek()
        raise ParseError(message, tok.line, tok.col)

    # terms ----------------------------------------------------------------

    def parse_term(self) -> km.Term:
        negate = False
        if self.peek().kind == "-":
            self.next()
            negate = True
        term = self.parse_prod()
        if negate:
            term = -term
        while self.peek().kind in ("+", "-"):
            op = self.next().kind
            rhs = self.parse_prod()
            term = term + rhs if op == "+" else term - rhs
        return term

    def parse_prod(self) -> km.Term:
        term = self.parse_atom()
        while self.peek().kind in ("INT", "IDENT", "[", "<", "("):
            term = term * self.parse_atom()
        return term

    def parse_atom(self) -> km.Term:
        tok = self.peek()
        if tok.kind == "INT":
            self.next()
            term = km.integer(int(tok.text))
        elif tok.kind == "IDENT":
            if tok.text == "eta":
                self.next()
                term = km.eta()
            elif tok.text == "eps":
                self.next()
                term = km.epsilon()
            elif tok.text == "h":
                self.next()
                term = km.hyperbolic()
            else:
                self.fail(f"unexpected identifier {tok.text!r} in term position")
        elif tok.kind == "[":
            self.next()
            u = self.parse_usum()
            self.expect("]")
            term = km.bracket(u)
        elif tok.kind == "<":
            self.next()
            u = self.parse_usum()
            self.expect(">")
            term = km.angle(u)
        elif tok.kind == "(":
            self.next()
            term = self.parse_term()
            self.expect(")")
        else:
            self.fail(f"unexpected token {tok.text or 'end of input'!r} in term position")
        while self.peek().kind == "^":
            self.next()
            exp = self.expect("INT")
            term = term ** int(exp.text)
        return term

    # unit expressions -----------------------------------------------------

    def parse_usum(self) -> km.Unit:
        parts = []
        negate = False
        if self.peek().kind == "-":
            self.next()
            negate = True
        first = self.parse_uexpr()
        parts.append(-first if negate else first)
        while self.peek().kind in ("+", "-"):
            op = self.next().kind
            nxt = self.parse_uexpr()
            parts.append(nxt if op == "+" else -nxt)
        tok = self.peek()
        try:
            return km.usum(parts) if len(parts) > 1 else parts[0]
        except km.UnitExprError as exc:
            raise ParseError(str(exc), tok.line, tok.col) from None

    def parse_uexpr(self) -> km.Unit:
        u = self.parse_uatom()
        while self.peek().kind in ("*", "/"):
            op = self.next().kind
            v = self.parse_uatom()
            u = u * v if op == "*" else u / v
        return u

    def parse_uatom(self) -> km.Unit:
        tok = self.peek()
        if tok.kind == "-":
            self.next()
            u = -self.parse_uatom()
        elif tok.kind == "INT":
            self.next()
            if tok.text == "0":
                raise ParseError("0 is not a unit", tok.line, tok.col)
            u = km.uint(int(tok.text))
        elif tok.kind == "IDENT":
            self.next()
            u = km.uvar(tok.text)
        elif tok.kind == "(":
            self.next()
            u = self.parse_usum()
            self.expect(")")
        else:
            self.fail(f"unexpected token {tok.text or 'end of input'!r} in unit expression")
        while self.peek().kind == "^":
            self.next()
            neg = False
            if self.peek().kind == "-":
                self.next()
                neg = True
            exp = self.expect("INT")
            n = int(exp.text)
            u = u ** (-n if neg else n)
        return u


def parse_term(text: str) -> km.Term:
    p = _Parser(text)
    term = p.parse_term()
    p.expect("EOF")
    return term


def parse_unit(text: str) -> km.Unit:
    p = _Parser(text)
    u = p.parse_usum()
    p.expect("EOF")
    return u


def parse_hypotheses(text: str) -> tuple[km.Unit, ...]:
    """Parse a 'unit(expr), unit(expr), ...' clause list."""
    if not text.strip():
        return ()
    p = _Parser(text)
    out = []
    while True:
        tok = p.expect("IDENT")
        if tok.text != "unit":
            raise ParseError(f"expected 'unit', found {tok.text!r}", tok.line, tok.col)
        p.expect("(")
        out.append(p.parse_usum())
        p.expect(")")
        if p.peek().kind == ",":
            p.next()
            continue
        p.expect("EOF")
        return tuple(out)


def parse_identity(text: str, hypotheses: str = "", name: str = "") -> km.Identity:
    """Parse 'lhs = rhs' with an optional hypothesis clause list."""
    p = _Parser(text)
    lhs = p.parse_term()
    p.expect("=")
    rhs = p.parse_term()
    p.expect("EOF")
    hyps = parse_hypotheses(hypotheses)
    try:
        return km.Identity(lhs, rhs, hyps, name)
    except km.IdentityError as exc:
        raise ParseError(str(exc), 1, 1) from None

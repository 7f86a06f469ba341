"""Recursive-descent parser for polynomial expressions.

Grammar (offsets are byte positions into the input):

    expr     := [('+'|'-')] term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := atom ['^' ['-'] integer]
    atom     := rational | symbol | '(' expr ')'
    rational := integer ['/' integer]

Negative exponents are accepted only on the Laurent symbols q and x.
The output is a canonical MultiPoly; render() output parses back to the
same polynomial.
"""

from __future__ import annotations

from fractions import Fraction

from .polyring import QidError, MultiPoly, SYMBOL_BY_NAME


class ExprSyntaxError(QidError):
    def __init__(self, position: int, expected: set[str], found: str):
        self.position = position
        self.expected = set(expected)
        super().__init__(
            f"at offset {position}: expected {', '.join(sorted(expected))}, "
            f"found {found}")


_PUNCT = set("+-*^()/")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
        elif c.isalpha() or c == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
        elif c in _PUNCT:
            tokens.append((c, c, i))
            i += 1
        else:
            raise ExprSyntaxError(i, {"expression"}, repr(c))
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def take(self, kind: str) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        if tok[0] != kind:
            raise ExprSyntaxError(tok[2], {kind}, tok[1] or "end of input")
        self.pos += 1
        return tok

    def fail(self, expected: set[str]):
        tok = self.peek()
        raise ExprSyntaxError(tok[2], expected, tok[1] or "end of input")

    def expr(self) -> MultiPoly:
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take(self.peek()[0])[0] == "-" else 1
        result = self.term()
        if sign < 0:
            result = -result
        while self.peek()[0] in ("+", "-"):
            op = self.take(self.peek()[0])[0]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> MultiPoly:
        result = self.factor()
        while self.peek()[0] == "*":
            self.take("*")
            result = result * self.factor()
        return result

    def factor(self) -> MultiPoly:
        base, laurent_sym = self.atom()
        if self.peek()[0] != "^":
            return base
        self.take("^")
        negative = False
        if self.peek()[0] == "-":
            self.take("-")
            negative = True
        tok = self.take("int")
        exponent = int(tok[1])
        if negative:
            if laurent_sym is None:
                raise ExprSyntaxError(tok[2], {"nonnegative exponent"},
                                      f"-{tok[1]} (negative exponents only on q, x)")
            exponent = -exponent
        return base ** exponent

    def atom(self) -> tuple[MultiPoly, str | None]:
        kind, value, pos = self.peek()
        if kind == "int":
            self.take("int")
            num = int(value)
            if self.peek()[0] == "/":
                self.take("/")
                den_tok = self.take("int")
                den = int(den_tok[1])
                if den == 0:
                    raise ExprSyntaxError(den_tok[2], {"nonzero denominator"}, "0")
                return MultiPoly.const(Fraction(num, den)), None
            return MultiPoly.const(num), None
        if kind == "name":
            self.take("name")
            sym = SYMBOL_BY_NAME.get(value)
            if sym is None:
                raise ExprSyntaxError(pos, set(SYMBOL_BY_NAME), value)
            return MultiPoly.var(sym), value if sym.laurent_allowed else None
        if kind == "(":
            self.take("(")
            inner = self.expr()
            self.take(")")
            return inner, None
        self.fail({"rational", "symbol", "("})


def parse_expr(text: str) -> MultiPoly:
    """Parse text into a canonical MultiPoly; raises ExprSyntaxError."""
    parser = _Parser(text)
    result = parser.expr()
    parser.take("end")
    return result

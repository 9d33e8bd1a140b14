"""Text syntax for wedges and mixed x/∂ words.

    expr    := term ('+' term)*
    term    := factor (('*' | '^')? factor)*
    factor  := '[' scalar ',' scalar ']'? atom | '[' scalar ',' scalar ']'
    atom    := 'x' INT | 'd' INT | INT | 'neg' '(' expr ')' | '(' expr ')'

``*``, ``^`` and juxtaposition all concatenate words; a word made of x
letters only reads as the wedge of those letters.  An integer literal k
stands for k copies of the unit.
"""

import re
import warnings
from dataclasses import dataclass

from .clifford import D, X, MixedElement, clifford_act, format_words
from .exterior import WedgeElement, to_text
from .semiring import get_semiring


class ParseError(ValueError):
    def __init__(self, message, line, col):
        super().__init__(f"line {line}, col {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


class VanishingWarning(UserWarning):
    """A word with a repeated x letter was dropped."""


@dataclass
class Token:
    kind: str
    text: str
    line: int
    col: int


_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<pair>\[[^\]]*\])
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<int>\d+)
  | (?P<op>[+*^()])
""", re.VERBOSE)


def tokenize(src):
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        col = pos - line_start + 1
        if m is None:
            raise ParseError(f"unexpected character {src[pos]!r}", line, col)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind != "ws":
            tokens.append(Token(kind, m.group(), line, col))
        pos = m.end()
    tokens.append(Token("end", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, src, sr, n):
        self.tokens = tokenize(src)
        self.i = 0
        self.sr = sr
        self.n = n

    @property
    def tok(self):
        return self.tokens[self.i]

    def fail(self, message, tok=None):
        tok = tok or self.tok
        raise ParseError(message, tok.line, tok.col)

    def take(self, text=None):
        tok = self.tok
        if text is not None and tok.text != text:
            self.fail(f"expected {text!r}, found {tok.text or 'end of input'!r}")
        self.i += 1
        return tok

    def parse(self):
        if self.tok.kind == "end":
            self.fail("empty expression")
        value = self.expr()
        if self.tok.kind != "end":
            self.fail(f"unexpected {self.tok.text!r}")
        return value

    def expr(self):
        value = self.term()
        while self.tok.text == "+":
            self.take()
            value = value + self.term()
        return value

    def _starts_factor(self):
        t = self.tok
        return t.kind in ("pair", "ident", "int") or t.text == "("

    def term(self):
        value = self.factor()
        while True:
            if self.tok.text in ("*", "^"):
                self.take()
            elif not self._starts_factor():
                return value
            value = value * self.factor()

    def factor(self):
        sr = self.sr
        if self.tok.kind == "pair":
            coeff = self.pair_literal(self.take())
            scalar = MixedElement(sr, {(): coeff})
            if self._starts_factor() and self.tok.kind != "pair":
                return scalar * self.atom()
            return scalar
        return self.atom()

    def pair_literal(self, tok):
        body = tok.text[1:-1].split(",")
        if len(body) != 2:
            self.fail("coefficient must look like [p,n]", tok)
        try:
            return self.sr.pair(self.sr.parse_scalar(body[0]), self.sr.parse_scalar(body[1]))
        except (ValueError, ZeroDivisionError) as exc:
            self.fail(f"bad coefficient {tok.text}: {exc}", tok)

    def atom(self):
        sr = self.sr
        tok = self.tok
        if tok.text == "(":
            self.take()
            value = self.expr()
            self.take(")")
            return value
        if tok.kind == "int":
            self.take()
            return MixedElement(sr, {(): sr.pair(sr.from_int(int(tok.text)))})
        if tok.kind == "ident":
            self.take()
            if tok.text == "neg":
                self.take("(")
                value = self.expr()
                self.take(")")
                return value.negate()
            m = re.fullmatch(r"([xd])(\d+)", tok.text)
            if m is None:
                self.fail(f"unknown atom {tok.text!r}", tok)
            index = int(m.group(2))
            if self.n is not None and index >= self.n:
                self.fail(f"index {index} out of rank bound n={self.n}", tok)
            kind = X if m.group(1) == "x" else D
            return MixedElement.word(sr, ((kind, index),))
        self.fail(f"unexpected {tok.text or 'end of input'!r}")


def parse_mixed(src, semiring="nat", n=None):
    """Parse to a sum of mixed words (no rewriting)."""
    return _Parser(src, get_semiring(semiring), n).parse()


def mixed_to_wedge(e, n=None):
    """Read an x-only sum of words as a wedge; repeated letters vanish with a warning."""
    sr = e.sr
    if any(kind == D for word in e.coeffs for kind, _ in word):
        raise ValueError("expression contains d letters; it is not a wedge")
    out = WedgeElement(sr, {}, n)
    for word, c in e.coeffs.items():
        exps = tuple(i for _, i in word)
        if len(set(exps)) != len(exps):
            warnings.warn(f"{'^'.join(f'x{i}' for i in exps)} has a repeated factor and vanishes",
                          VanishingWarning, stacklevel=2)
            continue
        out = out + WedgeElement.basis(sr, exps, n, c)
    return out


def parse_wedge(src, semiring="nat", n=None):
    return mixed_to_wedge(parse_mixed(src, semiring, n), n)


def parse_expression(src, semiring="nat", n=None):
    """A WedgeElement when only x letters occur, otherwise a MixedElement."""
    e = parse_mixed(src, semiring, n)
    if any(kind == D for word in e.coeffs for kind, _ in word):
        return e
    return mixed_to_wedge(e, n)


def evaluate(src, semiring="nat", n=None, B=None):
    """Parse and let the result act on 1, giving a wedge."""
    e = parse_expression(src, semiring, n)
    if isinstance(e, WedgeElement):
        return e
    return clifford_act(e, WedgeElement.one(e.sr, n), B)


def format_expression(e):
    if isinstance(e, WedgeElement):
        return to_text(e)
    return format_words(e)

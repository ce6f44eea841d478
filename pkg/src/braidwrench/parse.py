"""
Text syntax for braid words.

    word   := term*
    term   := factor ('^' int)?
    factor := gen | '(' word ')'
    gen    := 's' uint | 'S' uint        (capital S is the inverse)
    int    := '-'? uint

Whitespace separates terms and is otherwise ignored.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord
from .errors import BadParams, ParseError


@dataclass(frozen=True)
class ParsedInput:
    strands: int
    word: BraidWord


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def uint(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected a number", start)
        return int(self.text[start : self.pos])

    def word(self) -> list[int]:
        out: list[int] = []
        while self.peek() not in ("", ")"):
            out.extend(self.term())
        return out

    def term(self) -> list[int]:
        base = self.factor()
        if self.peek() == "^":
            self.pos += 1
            self.skip_ws()
            neg = False
            if self.pos < len(self.text) and self.text[self.pos] == "-":
                neg = True
                self.pos += 1
            k = self.uint()
            if neg:
                base = [-g for g in reversed(base)]
            return base * k
        return base

    def factor(self) -> list[int]:
        c = self.peek()
        if c == "(":
            open_at = self.pos
            self.pos += 1
            inner = self.word()
            if self.peek() != ")":
                raise ParseError("unclosed '('", open_at)
            self.pos += 1
            return inner
        if c in ("s", "S"):
            at = self.pos
            self.pos += 1
            i = self.uint()
            if i < 1:
                raise ParseError("generator index must be at least 1", at)
            return [i if c == "s" else -i]
        raise ParseError(f"unexpected {c!r}" if c else "unexpected end of input", self.pos)


def parse_letters(text: str) -> list[int]:
    p = _Parser(text)
    letters = p.word()
    if p.peek() != "":
        raise ParseError("unbalanced ')'", p.pos)
    return letters


def parse_braid(text: str, n: int | None = None) -> ParsedInput:
    letters = parse_letters(text)
    needed = 1 + max((abs(g) for g in letters), default=0)
    if n is None:
        n = needed
    elif n < needed:
        raise BadParams(f"word uses s{needed - 1} but only {n} strands were given")
    return ParsedInput(n, BraidWord(n, tuple(letters)))


def format_braid(w: BraidWord) -> str:
    return str(w)

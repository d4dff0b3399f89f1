"""A tiny whitespace-skipping cursor used by all the textual parsers."""

from __future__ import annotations

import re

from .errors import ParseError

_NAT = re.compile(r"[0-9]+")


class Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int | None = None) -> ParseError:
        return ParseError(message, self.text, self.pos if pos is None else pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self, literal: str) -> bool:
        self.skip_ws()
        return self.text.startswith(literal, self.pos)

    def accept(self, literal: str) -> bool:
        if self.peek(literal):
            self.pos += len(literal)
            return True
        return False

    def expect(self, literal: str) -> None:
        if not self.accept(literal):
            found = self.text[self.pos:self.pos + 8] or "end of input"
            raise self.error(f"expected {literal!r}, found {found!r}")

    def read_nat(self) -> int:
        self.skip_ws()
        m = _NAT.match(self.text, self.pos)
        if m is None:
            raise self.error("expected a natural number")
        self.pos = m.end()
        return int(m.group())

    def read_int(self) -> int:
        sign = -1 if self.accept("-") else 1
        return sign * self.read_nat()

    def read_prime(self) -> int:
        # local import: foundations imports this module
        from .foundations import is_prime

        self.skip_ws()
        start = self.pos
        n = self.read_nat()
        if not is_prime(n):
            raise self.error(f"{n} is not prime", start)
        return n

    def finish(self) -> None:
        if not self.at_end():
            raise self.error(f"unexpected trailing input {self.text[self.pos:]!r}")

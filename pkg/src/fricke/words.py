"""Reduced words in the free group on two generators, plus a tiny expression
language for typing them.

A word is stored in syllable (run-length) form: a tuple of pairs
``(generator, exponent)`` with alternating generators and nonzero integer
exponents, so high powers such as ``[x^40, y^40]`` stay four syllables long.
The identity is the empty tuple.

Text grammar (whitespace ignored)::

    expr   := factor+
    factor := atom ('^' int)?
    atom   := 'x' | 'y' | '(' expr ')' | '[' expr ',' expr ']'

``[a, b]`` denotes the commutator ``a b a^-1 b^-1``.  Only lowercase
generators are accepted; inverses are written with exponents (``x^-1``).
Empty input parses to the identity so that formatting round-trips.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

__all__ = ["AbelianImage", "FreeWord", "WordSyntaxError", "commutator", "parse"]

GENERATORS = ("x", "y")


class AbelianImage(NamedTuple):
    """Exponent sums of a word; (0, 0) exactly for the derived subgroup."""

    ex: int
    ey: int


class WordSyntaxError(ValueError):
    """Malformed word text; ``position`` is the 0-based offending index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _reduce(syllables: Iterable[tuple[str, int]]) -> tuple[tuple[str, int], ...]:
    stack: list[tuple[str, int]] = []
    for gen, exp in syllables:
        if gen not in GENERATORS:
            raise ValueError(f"unknown generator {gen!r}")
        exp = int(exp)
        if exp == 0:
            continue
        if stack and stack[-1][0] == gen:
            merged = stack[-1][1] + exp
            stack.pop()
            if merged:
                stack.append((gen, merged))
        else:
            stack.append((gen, exp))
    return tuple(stack)


class FreeWord:
    """A reduced word in the free group F2 = <x, y>."""

    __slots__ = ("_syllables",)

    def __init__(self, syllables: Iterable[tuple[str, int]] = ()):
        self._syllables = _reduce(syllables)

    @classmethod
    def identity(cls) -> "FreeWord":
        return cls()

    @classmethod
    def generator(cls, name: str, exponent: int = 1) -> "FreeWord":
        return cls([(name, exponent)])

    @property
    def syllables(self) -> tuple[tuple[str, int], ...]:
        return self._syllables

    @property
    def is_identity(self) -> bool:
        return not self._syllables

    @property
    def syllable_length(self) -> int:
        return len(self._syllables)

    @property
    def letter_length(self) -> int:
        return sum(abs(e) for _, e in self._syllables)

    def letters(self) -> Iterator[tuple[str, int]]:
        """Yield single letters as (generator, +1 or -1), left to right."""
        for gen, exp in self._syllables:
            step = 1 if exp > 0 else -1
            for _ in range(abs(exp)):
                yield gen, step

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        if not isinstance(other, FreeWord):
            return NotImplemented
        return FreeWord(self._syllables + other._syllables)

    def inverse(self) -> "FreeWord":
        return FreeWord([(g, -e) for g, e in reversed(self._syllables)])

    __invert__ = inverse

    def __pow__(self, k: int) -> "FreeWord":
        if not isinstance(k, int):
            return NotImplemented
        if k == 0:
            return FreeWord()
        base = self if k > 0 else self.inverse()
        result = FreeWord()
        for _ in range(abs(k)):
            result = result * base
        return result

    def abelianization(self) -> AbelianImage:
        ex = sum(e for g, e in self._syllables if g == "x")
        ey = sum(e for g, e in self._syllables if g == "y")
        return AbelianImage(ex, ey)

    @property
    def in_derived_subgroup(self) -> bool:
        return self.abelianization() == (0, 0)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FreeWord) and self._syllables == other._syllables

    def __hash__(self) -> int:
        return hash(self._syllables)

    def __str__(self) -> str:
        return "".join(
            g if e == 1 else f"{g}^{e}" for g, e in self._syllables
        )

    def __repr__(self) -> str:
        return f"FreeWord({str(self)!r})"


def commutator(a: FreeWord, b: FreeWord) -> FreeWord:
    """The commutator a b a^-1 b^-1."""
    return a * b * a.inverse() * b.inverse()


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str | None:
        self._skip_ws()
        if self.pos >= len(self.text):
            return None
        return self.text[self.pos]

    def expect(self, char: str) -> None:
        got = self.peek()
        if got != char:
            raise WordSyntaxError(f"expected {char!r}", self.pos)
        self.pos += 1

    def parse_int(self) -> int:
        self._skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise WordSyntaxError("expected integer exponent", start)
        return int(self.text[start : self.pos])

    def parse_atom(self) -> FreeWord:
        ch = self.peek()
        if ch is None:
            raise WordSyntaxError("expected atom", self.pos)
        if ch in GENERATORS:
            self.pos += 1
            return FreeWord.generator(ch)
        if ch in ("X", "Y"):
            raise WordSyntaxError(
                "uppercase generators are not allowed, write x^-1 or y^-1",
                self.pos,
            )
        if ch == "(":
            self.pos += 1
            inner = self.parse_expr()
            self.expect(")")
            return inner
        if ch == "[":
            self.pos += 1
            left = self.parse_expr()
            self.expect(",")
            right = self.parse_expr()
            self.expect("]")
            return commutator(left, right)
        raise WordSyntaxError(f"unexpected character {ch!r}", self.pos)

    def parse_factor(self) -> FreeWord:
        atom = self.parse_atom()
        if self.peek() == "^":
            self.pos += 1
            return atom ** self.parse_int()
        return atom

    def parse_expr(self) -> FreeWord:
        word = FreeWord()
        ch = self.peek()
        if ch is None or ch in (")", "]", ","):
            raise WordSyntaxError("expected at least one factor", self.pos)
        while True:
            word = word * self.parse_factor()
            ch = self.peek()
            if ch is None or ch in (")", "]", ","):
                return word


def parse(text: str) -> FreeWord:
    """Parse ``text`` into a reduced :class:`FreeWord`.

    Raises :class:`WordSyntaxError` with the character position on bad input.
    Empty (or all-whitespace) text yields the identity word.
    """
    parser = _Parser(text)
    if parser.peek() is None:
        return FreeWord()
    word = parser.parse_expr()
    ch = parser.peek()
    if ch is not None:
        raise WordSyntaxError(f"unexpected character {ch!r}", parser.pos)
    return word

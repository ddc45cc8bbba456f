"""Free-group word algebra: symbols, alphabets, and freely reduced words.

Conventions
-----------
A word is a sequence of letters (symbol, sign) with sign in {+1, -1},
kept *freely reduced* at all times: no adjacent (g,+1)(g,-1) or
(g,-1)(g,+1).  The empty word is the identity.  Because every operation
re-reduces eagerly, two words are equal in the free group iff they are
structurally equal, which is what all downstream equality checks rely on.

Symbols render as ``name`` + optional ``index`` (``GenSym("d", 1)`` is
``d1``); parsing splits a maximal trailing run of digits back into the
index, so rendering round-trips.  Exponents are not run-length compressed
in the data; ``format_word`` may compress for display only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping


class MissingImageError(KeyError):
    """A substitution was asked for a symbol with no assigned image."""


class AlphabetError(ValueError):
    """Duplicate symbol in an alphabet, or a word using a foreign symbol."""


@dataclass(frozen=True)
class GenSym:
    """A generator symbol: a short name plus an optional subscript."""

    name: str
    index: int | None = None

    def __post_init__(self):
        if not self.name:
            raise ValueError("empty symbol name")
        if self.name[-1].isdigit():
            # trailing digits belong in the index so that str() round-trips
            raise ValueError(f"symbol name {self.name!r} must not end in a digit")
        if self.index is not None and self.index < 0:
            raise ValueError("negative symbol index")

    @staticmethod
    def parse(token: str) -> "GenSym":
        """Inverse of ``str``: split a maximal trailing digit run into the index."""
        i = len(token)
        while i > 0 and token[i - 1].isdigit():
            i -= 1
        if i == len(token):
            return GenSym(token)
        return GenSym(token[:i], int(token[i:]))

    def __str__(self) -> str:
        return self.name if self.index is None else f"{self.name}{self.index}"

    def __repr__(self) -> str:
        return f"GenSym({str(self)!r})"


Letter = tuple[GenSym, int]


def _reduce_into(out: list[Letter], letters: Iterable[Letter]) -> list[Letter]:
    for sym, sign in letters:
        if sign not in (1, -1):
            raise ValueError(f"letter sign must be +-1, got {sign}")
        if out and out[-1][0] == sym and out[-1][1] == -sign:
            out.pop()
        else:
            out.append((sym, sign))
    return out


@dataclass(frozen=True)
class Word:
    """A freely reduced word; build with ``Word.of`` (which reduces)."""

    letters: tuple[Letter, ...] = ()

    @staticmethod
    def of(letters: Iterable[Letter]) -> "Word":
        return Word(tuple(_reduce_into([], letters)))

    @staticmethod
    def identity() -> "Word":
        return Word()

    @staticmethod
    def gen(sym: GenSym, sign: int = 1) -> "Word":
        return Word.of([(sym, sign)])

    def __mul__(self, other: "Word") -> "Word":
        out = list(self.letters)
        return Word(tuple(_reduce_into(out, other.letters)))

    def inverse(self) -> "Word":
        return Word(tuple((s, -e) for s, e in reversed(self.letters)))

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        out: list[Letter] = []
        for _ in range(abs(n)):
            _reduce_into(out, base.letters)
        return Word(tuple(out))

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def symbols(self) -> set[GenSym]:
        return {s for s, _ in self.letters}

    def cyclically_reduced(self) -> "Word":
        ls = self.letters
        i, j = 0, len(ls)
        while j - i >= 2 and ls[i][0] == ls[j - 1][0] and ls[i][1] == -ls[j - 1][1]:
            i += 1
            j -= 1
        return Word(ls[i:j])

    def exponent_sums(self) -> dict[GenSym, int]:
        sums: dict[GenSym, int] = {}
        for s, e in self.letters:
            sums[s] = sums.get(s, 0) + e
        return sums

    def substitute(self, images: Mapping[GenSym, "Word"]) -> "Word":
        out: list[Letter] = []
        for sym, sign in self.letters:
            if sym not in images:
                raise MissingImageError(f"no image for {sym}")
            img = images[sym]
            _reduce_into(out, img.letters if sign > 0 else img.inverse().letters)
        return Word(tuple(out))

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"


def reduce(letters: Iterable[Letter]) -> Word:
    """Free-group normal form of a raw letter sequence."""
    return Word.of(letters)


def multiply(u: Word, v: Word) -> Word:
    return u * v


def invert(w: Word) -> Word:
    return w.inverse()


def substitute(w: Word, images: Mapping[GenSym, Word]) -> Word:
    """Apply the homomorphism sending each symbol to its image word."""
    return w.substitute(images)


class Alphabet:
    """An ordered, duplicate-free sequence of symbols.

    The order is significant: it fixes relation-matrix columns, braid
    strand indices, and every deterministic tie-break in the package.
    ``encode``/``decode`` translate words to signed 1-based integers for
    the hot loops (coset enumeration, relator rewriting).
    """

    def __init__(self, symbols: Iterable[GenSym]):
        self.symbols: tuple[GenSym, ...] = tuple(symbols)
        self._pos: dict[GenSym, int] = {}
        for i, s in enumerate(self.symbols):
            if s in self._pos:
                raise AlphabetError(f"duplicate symbol {s}")
            self._pos[s] = i

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[GenSym]:
        return iter(self.symbols)

    def __contains__(self, sym: GenSym) -> bool:
        return sym in self._pos

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def index(self, sym: GenSym) -> int:
        try:
            return self._pos[sym]
        except KeyError:
            raise AlphabetError(f"symbol {sym} not in alphabet") from None

    def check_word(self, w: Word) -> Word:
        for s, _ in w.letters:
            if s not in self._pos:
                raise AlphabetError(f"word uses foreign symbol {s}")
        return w

    def extend(self, symbols: Iterable[GenSym]) -> "Alphabet":
        return Alphabet(self.symbols + tuple(symbols))

    def encode(self, w: Word) -> tuple[int, ...]:
        pos = self._pos
        try:
            return tuple((pos[s] + 1) * e for s, e in w.letters)
        except KeyError as exc:
            raise AlphabetError(f"word uses foreign symbol {exc.args[0]}") from None

    def decode(self, ints: Iterable[int]) -> Word:
        syms = self.symbols
        return Word(tuple((syms[abs(i) - 1], 1 if i > 0 else -1) for i in ints))

    def __repr__(self) -> str:
        return f"Alphabet([{', '.join(str(s) for s in self.symbols)}])"


def alphabet(*names: str) -> Alphabet:
    """Convenience: ``alphabet("d1", "d2", "G")``."""
    return Alphabet(GenSym.parse(n) for n in names)


def format_word(w: Word, compress: bool = True) -> str:
    """Render a word; ``'`` marks inverses, ``^n`` compresses runs for display."""
    if not w.letters:
        return "1"
    parts: list[str] = []
    i = 0
    ls = w.letters
    while i < len(ls):
        sym, sign = ls[i]
        j = i
        while j < len(ls) and ls[j] == (sym, sign):
            j += 1
        run = j - i
        tok = str(sym) + ("'" if sign < 0 else "")
        if compress and run > 1:
            parts.append(f"{str(sym)}^{run * sign}")
        else:
            parts.extend([tok] * run)
        i = j
    return " ".join(parts)

"""Positive presentations and words over X ∪ X⁻¹.

Generators are single lowercase characters; the formal inverse of a
generator is the corresponding uppercase character. A word is stored as
its plain string form, so ``Word("aB")`` is a·b⁻¹.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Union


class PresentationError(ValueError):
    """Raised for malformed presentation files or words.

    ``line`` and ``column`` are 1-based and may be ``None`` when the error
    is not tied to a position in a file.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


def invert_letter(c: str) -> str:
    return c.swapcase()


@dataclass(frozen=True, order=True)
class Word:
    text: str

    def __post_init__(self):
        if not isinstance(self.text, str):
            raise TypeError(f"Word expects a str, got {type(self.text).__name__}")
        if not self.text:
            raise PresentationError("empty word")
        for c in self.text:
            if not c.isalpha() or len(c.lower()) != 1 or c.lower() == c.upper():
                raise PresentationError(f"invalid letter {c!r}")

    def __str__(self) -> str:
        return self.text

    def __repr__(self) -> str:
        return f"Word({self.text!r})"

    def __len__(self) -> int:
        return len(self.text)

    def __iter__(self) -> Iterator[str]:
        return iter(self.text)

    def __getitem__(self, i):
        return self.text[i]

    def __add__(self, other: "Word | str") -> "Word":
        return Word(self.text + str(other))

    def __contains__(self, other: "Word | str") -> bool:
        return str(other) in self.text

    @property
    def is_positive(self) -> bool:
        return self.text.islower()

    def inverse(self) -> "Word":
        return Word(self.text[::-1].swapcase())

    def letters(self) -> frozenset[str]:
        """Generators used by the word, ignoring sign."""
        return frozenset(self.text.lower())


WordLike = Union[Word, str]


def as_word(w: WordLike) -> Word:
    return w if isinstance(w, Word) else Word(w)


def invert_word(w: WordLike) -> Word:
    return as_word(w).inverse()


def parse_word(text: str, alphabet: Iterable[str]) -> Word:
    """Parse ``text`` as a word over ``alphabet`` and its inverses.

    >>> parse_word("aB", "ab")
    Word('aB')
    """
    text = text.strip()
    if not text:
        raise PresentationError("empty word")
    letters = set(alphabet)
    for col, c in enumerate(text, start=1):
        if c.lower() not in letters or c.lower() == c.upper():
            raise PresentationError(f"unknown letter {c!r} in word {text!r}", column=col)
    return Word(text)


@dataclass(frozen=True)
class Relation:
    lhs: Word
    rhs: Word

    def __post_init__(self):
        for side in (self.lhs, self.rhs):
            if not side.is_positive:
                raise PresentationError(f"relation side {side} is not a positive word")
        if self.lhs == self.rhs:
            raise PresentationError(f"trivial relation {self.lhs} = {self.rhs}")

    def __str__(self) -> str:
        return f"{self.lhs} = {self.rhs}"

    def sides(self) -> tuple[Word, Word]:
        return (self.lhs, self.rhs)

    def other(self, side: str) -> Word:
        """The side opposite to ``side`` ("lhs" or "rhs")."""
        if side == "lhs":
            return self.rhs
        if side == "rhs":
            return self.lhs
        raise ValueError(f"side must be 'lhs' or 'rhs', not {side!r}")

    def side(self, side: str) -> Word:
        if side == "lhs":
            return self.lhs
        if side == "rhs":
            return self.rhs
        raise ValueError(f"side must be 'lhs' or 'rhs', not {side!r}")


@dataclass(frozen=True)
class Presentation:
    alphabet: tuple[str, ...]
    relations: tuple[Relation, ...] = ()

    def __post_init__(self):
        if not self.alphabet:
            raise PresentationError("alphabet is empty")
        seen = set()
        for x in self.alphabet:
            if len(x) != 1 or not x.isalpha() or not x.islower():
                raise PresentationError(f"generator {x!r} is not a single lowercase letter")
            if x in seen:
                raise PresentationError(f"duplicate alphabet letter {x!r}")
            seen.add(x)
        for rel in self.relations:
            for side in rel.sides():
                extra = side.letters() - seen
                if extra:
                    raise PresentationError(
                        f"unknown letter {sorted(extra)[0]!r} in relation {rel}")

    @classmethod
    def build(cls, alphabet: Iterable[str], relations: Iterable[tuple[str, str]] = ()) -> "Presentation":
        """Convenience constructor: ``Presentation.build("ab", [("ab", "ba")])``."""
        rels = tuple(Relation(as_word(u), as_word(v)) for u, v in relations)
        return cls(tuple(alphabet), rels)

    def rwords(self) -> list[Word]:
        """Distinct relation sides, in order of first appearance."""
        out: list[Word] = []
        for rel in self.relations:
            for side in rel.sides():
                if side not in out:
                    out.append(side)
        return out

    def word(self, text: str) -> Word:
        return parse_word(text, self.alphabet)

    def __str__(self) -> str:
        rels = ", ".join(str(r) for r in self.relations)
        return f"<{','.join(self.alphabet)} | {rels}>"


def _strip_comment(line: str) -> str:
    i = line.find("#")
    return line if i < 0 else line[:i]


def _parse_side(text: str, alphabet: set[str], lineno: int, col0: int) -> Word:
    stripped = text.strip()
    if not stripped:
        raise PresentationError("empty relation side", lineno, col0)
    col = col0 + (len(text) - len(text.lstrip()))
    for i, c in enumerate(stripped):
        if c.isspace():
            raise PresentationError("whitespace inside a word", lineno, col + i)
        if c not in alphabet:
            if c.lower() in alphabet:
                raise PresentationError(f"relation letter {c!r} is not positive", lineno, col + i)
            raise PresentationError(f"unknown letter {c!r}", lineno, col + i)
    return Word(stripped)


def parse_presentation(text: str) -> Presentation:
    """Parse the presentation file format.

    The first non-blank line lists the generators separated by single
    spaces; every later non-blank line is ``LHS = RHS``. ``#`` starts a
    comment.
    """
    alphabet: list[str] | None = None
    relations: list[Relation] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).rstrip()
        if not line.strip():
            continue
        if alphabet is None:
            alphabet = []
            for col, tok in _tokens(line):
                if len(tok) != 1 or not tok.isalpha() or not tok.islower():
                    raise PresentationError(
                        f"generator {tok!r} is not a single lowercase letter", lineno, col)
                if tok in alphabet:
                    raise PresentationError(f"duplicate alphabet letter {tok!r}", lineno, col)
                alphabet.append(tok)
            continue
        if line.count("=") != 1:
            col = line.find("=", line.find("=") + 1) + 1 if "=" in line else 1
            raise PresentationError("expected exactly one '=' in relation", lineno, col)
        eq = line.index("=")
        letters = set(alphabet)
        lhs = _parse_side(line[:eq], letters, lineno, 1)
        rhs = _parse_side(line[eq + 1:], letters, lineno, eq + 2)
        if lhs == rhs:
            raise PresentationError(f"trivial relation {lhs} = {rhs}", lineno, 1)
        relations.append(Relation(lhs, rhs))
    if alphabet is None:
        raise PresentationError("missing alphabet line")
    return Presentation(tuple(alphabet), tuple(relations))


def _tokens(line: str) -> Iterator[tuple[int, str]]:
    col = 0
    for tok in line.split(" "):
        col += 1
        if tok:
            yield col, tok
        col += len(tok)


def load_presentation(path) -> Presentation:
    with open(path, encoding="utf-8") as f:
        return parse_presentation(f.read())

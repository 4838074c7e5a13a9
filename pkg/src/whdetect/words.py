"""Words over a generating alphabet with inverses, and group presentations.

A word is a sequence of letters ``(generator_index, sign)`` with sign in
``{+1, -1}``.  Words are always stored freely reduced; the empty word is the
identity.  Presentations are lists of relator words over a declared alphabet.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Letter = tuple[int, int]


class WordError(ValueError):
    """Malformed word text or a word referencing an undeclared generator."""


class PresentationError(ValueError):
    """Malformed presentation text or inconsistent presentation data."""


@dataclass(frozen=True)
class Generator:
    """A named generator with a dense index into the alphabet."""

    index: int
    name: str

    def __post_init__(self) -> None:
        if self.index < 0:
            raise PresentationError(f"generator index must be >= 0, got {self.index}")
        if not self.name:
            raise PresentationError("generator name must be nonempty")


def free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    """Cancel adjacent inverse pairs until none remain.

    Idempotent; the result represents the same free-group element.
    """
    stack: list[Letter] = []
    for g, s in letters:
        if stack and stack[-1][0] == g and stack[-1][1] == -s:
            stack.pop()
        else:
            stack.append((g, s))
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """A freely reduced word.  The empty word is the identity."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        reduced = free_reduce(self.letters)
        object.__setattr__(self, "letters", reduced)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def inverse(self) -> "Word":
        """Reversed letters with flipped signs."""
        return Word(tuple((g, -s) for g, s in reversed(self.letters)))

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        out = Word()
        for _ in range(n):
            out = out * self
        return out

    def max_generator(self) -> int:
        """Largest generator index used, or -1 for the empty word."""
        return max((g for g, _ in self.letters), default=-1)

    def display(self, alphabet: Sequence[Generator]) -> str:
        if not self.letters:
            return "1"
        parts = []
        i = 0
        letters = self.letters
        while i < len(letters):
            g, s = letters[i]
            run = 1
            while i + run < len(letters) and letters[i + run] == (g, s):
                run += 1
            exp = s * run
            name = alphabet[g].name
            parts.append(name if exp == 1 else f"{name}^{exp}")
            i += run
        return " ".join(parts)


def invert_word(w: Word) -> Word:
    return w.inverse()


def commutator(u: Word, v: Word) -> Word:
    """[u, v] = u v u^-1 v^-1."""
    return u * v * u.inverse() * v.inverse()


_TOKEN = re.compile(r"([A-Za-z_][A-Za-z_0-9']*)(?:\s*\^\s*(-?\d+))?")


def parse_word(text: str, alphabet: Sequence[Generator]) -> Word:
    """Parse word text like ``x^-1 a x a`` over the given alphabet.

    Inverses may be written ``a^-1`` or as the uppercase of a lowercase
    generator name.  Returns the freely reduced word.
    """
    by_name = {g.name: g.index for g in alphabet}
    letters: list[Letter] = []
    pos = 0
    text = text.strip()
    if text in ("", "1"):
        return Word()
    while pos < len(text):
        if text[pos].isspace() or text[pos] == "*":
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise WordError(f"malformed word at {text[pos:]!r}")
        name, exp_s = m.group(1), m.group(2)
        sign = 1
        if name not in by_name:
            # uppercase convention for the inverse of a lowercase generator
            if name.lower() in by_name and name != name.lower():
                name = name.lower()
                sign = -1
            else:
                raise WordError(f"unknown generator {name!r}")
        idx = by_name[name]
        exp = sign * (1 if exp_s is None else int(exp_s))
        letters.extend([(idx, 1 if exp > 0 else -1)] * abs(exp))
        pos = m.end()
    return Word(tuple(letters))


@dataclass(frozen=True)
class Presentation:
    """A finite group presentation: generators plus relator words."""

    generators: tuple[Generator, ...]
    relators: tuple[Word, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise PresentationError(f"duplicate generator names in {names}")
        for i, g in enumerate(self.generators):
            if g.index != i:
                raise PresentationError("generator indices must be dense 0..n-1")
        n = len(self.generators)
        for r in self.relators:
            if r.max_generator() >= n:
                raise PresentationError(
                    f"relator references undeclared generator index {r.max_generator()}"
                )

    @property
    def rank(self) -> int:
        return len(self.generators)

    def display(self) -> str:
        gens = ", ".join(g.name for g in self.generators)
        rels = ", ".join(r.display(self.generators) for r in self.relators)
        return f"gens: {gens}; rels: {rels}"


def make_presentation(gen_names: Sequence[str], relator_texts: Sequence[str]) -> Presentation:
    """Build a presentation from generator names and relator strings.

    A relator string may be an equation ``u = v``; it is normalized to the
    relator u v^-1.
    """
    gens = tuple(Generator(i, n) for i, n in enumerate(gen_names))
    rels = []
    for t in relator_texts:
        if "=" in t:
            lhs, rhs = t.split("=", 1)
            w = parse_word(lhs, gens) * parse_word(rhs, gens).inverse()
        else:
            w = parse_word(t, gens)
        rels.append(w)
    return Presentation(gens, tuple(rels))


def parse_presentation(text: str) -> Presentation:
    """Parse the text format ``gens: a, x; rels: a^4, x^2 a^-2, x^-1 a x a``.

    Whitespace-insensitive; relators comma-separated; equations allowed.
    """
    parts = [p.strip() for p in text.split(";")]
    gen_names: list[str] | None = None
    rel_texts: list[str] = []
    for part in parts:
        if not part:
            continue
        key, _, rest = part.partition(":")
        key = key.strip().lower()
        if key == "gens":
            gen_names = [n.strip() for n in rest.split(",") if n.strip()]
        elif key == "rels":
            rel_texts = [t for t in (s.strip() for s in rest.split(",")) if t]
        else:
            raise PresentationError(f"unknown section {key!r}")
    if gen_names is None:
        raise PresentationError("missing 'gens:' section")
    return make_presentation(gen_names, rel_texts)

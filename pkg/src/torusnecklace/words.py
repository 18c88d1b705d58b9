"""Free-group words over named generators.

A word is stored in run-length form: a tuple of ``(name, exponent)`` syllables,
freely reduced, with no two adjacent syllables on the same generator and no zero
exponents.  Generator names are short strings such as ``"x3"``, ``"y"``, ``"a12"``.

Text grammar::

    word   := letter ("." letter)* | "1"
    letter := name ("^" signed-int)?
    name   := family [index]        e.g. x1, y, a12, s3
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping, Sequence, Union

FAMILY_ORDER = ("x", "y", "z", "a", "b", "s", "m", "t")

_NAME_RE = re.compile(r"^([A-Za-z_]+?)(\d*)$")
_LETTER_RE = re.compile(r"^([A-Za-z_]+\d*)(?:\^(-?\d+))?$")

Syllable = tuple[str, int]


def split_name(name: str) -> tuple[str, int | None]:
    """Split a generator name into its family tag and optional index."""
    match = _NAME_RE.match(name)
    if not match:
        raise ValueError(f"invalid generator name {name!r}")
    family, index = match.groups()
    return family, int(index) if index else None


def generator_key(name: str) -> tuple:
    """Sort key: fixed family order, then user families alphabetically, then index."""
    family, index = split_name(name)
    if family in FAMILY_ORDER:
        rank: tuple = (0, FAMILY_ORDER.index(family))
    else:
        rank = (1, family)
    return rank + (-1 if index is None else index,)


def sort_generators(names: Iterable[str]) -> list[str]:
    return sorted(set(names), key=generator_key)


def _reduce(syllables: Iterable[Syllable]) -> tuple[Syllable, ...]:
    stack: list[Syllable] = []
    for name, exp in syllables:
        if exp == 0:
            continue
        if stack and stack[-1][0] == name:
            total = stack[-1][1] + exp
            if total:
                stack[-1] = (name, total)
            else:
                stack.pop()
        else:
            stack.append((name, exp))
    return tuple(stack)


class Word:
    """An immutable, freely reduced element of a free group."""

    __slots__ = ("_syllables", "_hash")

    def __init__(self, syllables: Iterable[Syllable] = ()):
        self._syllables = _reduce(syllables)
        self._hash = hash(self._syllables)

    @classmethod
    def gen(cls, name: str, exp: int = 1) -> Word:
        return cls(((name, exp),))

    @classmethod
    def parse(cls, text: str) -> Word:
        text = text.strip()
        if text in ("1", ""):
            return cls()
        syllables = []
        for part in text.split("."):
            match = _LETTER_RE.match(part.strip())
            if not match:
                raise ValueError(f"cannot parse letter {part!r} in {text!r}")
            name, exp = match.groups()
            split_name(name)
            syllables.append((name, int(exp) if exp is not None else 1))
        return cls(syllables)

    @property
    def syllables(self) -> tuple[Syllable, ...]:
        return self._syllables

    def letters(self) -> list[Syllable]:
        """Expanded form: one ``(name, +1 or -1)`` entry per letter."""
        out = []
        for name, exp in self._syllables:
            sign = 1 if exp > 0 else -1
            out.extend([(name, sign)] * abs(exp))
        return out

    def generators(self) -> set[str]:
        return {name for name, _ in self._syllables}

    def exponent_sum(self, name: str) -> int:
        return sum(exp for gen, exp in self._syllables if gen == name)

    def inverse(self) -> Word:
        return Word((name, -exp) for name, exp in reversed(self._syllables))

    def __invert__(self) -> Word:
        return self.inverse()

    def __mul__(self, other: Word) -> Word:
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self._syllables + other._syllables)

    def __pow__(self, k: int) -> Word:
        if k < 0:
            return self.inverse() ** (-k)
        if len(self._syllables) == 1:
            name, exp = self._syllables[0]
            return Word(((name, exp * k),))
        result, base = Word(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __len__(self) -> int:
        return sum(abs(exp) for _, exp in self._syllables)

    def __bool__(self) -> bool:
        return bool(self._syllables)

    def __iter__(self) -> Iterator[Syllable]:
        return iter(self._syllables)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Word):
            return self._syllables == other._syllables
        return NotImplemented

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        if not self._syllables:
            return "1"
        return ".".join(name if exp == 1 else f"{name}^{exp}" for name, exp in self._syllables)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


WordLike = Union[Word, str, Sequence[Syllable]]

IDENTITY = Word()


def as_word(w: WordLike) -> Word:
    if isinstance(w, Word):
        return w
    if isinstance(w, str):
        return Word.parse(w)
    return Word(w)


def reduce(raw: Iterable[Syllable | str]) -> Word:
    """Freely reduce a raw sequence of letters (``(name, exp)`` pairs or letter strings)."""
    syllables = []
    for item in raw:
        if isinstance(item, str):
            syllables.extend(Word.parse(item).syllables)
        else:
            syllables.append(item)
    return Word(syllables)


def gen(name: str, exp: int = 1) -> Word:
    return Word.gen(name, exp)


def product(words: Iterable[Word]) -> Word:
    syllables: list[Syllable] = []
    for w in words:
        syllables.extend(w.syllables)
    return Word(syllables)


def chain(family: str, lo: int, hi: int) -> Word:
    """The product ``f_lo f_(lo+1) ... f_hi``; the identity when ``hi < lo``."""
    return Word((f"{family}{i}", 1) for i in range(lo, hi + 1))


def conj(h: Word, g: Word) -> Word:
    """``h g h^-1``."""
    return h * g * h.inverse()


def commutator(a: Word, b: Word) -> Word:
    return a * b * a.inverse() * b.inverse()


class MissingImageError(KeyError):
    pass


def substitute(w: Word, images: Mapping[str, Word]) -> Word:
    """Apply the homomorphism given on generators by ``images``."""
    syllables: list[Syllable] = []
    for name, exp in w:
        try:
            image = images[name]
        except KeyError:
            raise MissingImageError(f"no image for generator {name!r}") from None
        syllables.extend((image ** exp).syllables)
    return Word(syllables)


def cyclic_reduce(w: Word) -> Word:
    syl = list(w.syllables)
    while len(syl) >= 2 and syl[0][0] == syl[-1][0]:
        name = syl[0][0]
        total = syl[0][1] + syl[-1][1]
        if len(syl) == 2:
            syl = [(name, total)] if total else []
            break
        syl = syl[1:-1]
        if total:
            syl = [(name, total)] + syl
    return Word(syl)


def _rotations_contain(letters: list[Syllable], target: list[Syllable]) -> bool:
    if len(letters) != len(target):
        return False
    if not letters:
        return True
    doubled = letters + letters
    n = len(target)
    # KMP search of target inside doubled
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k and target[i] != target[k]:
            k = fail[k - 1]
        if target[i] == target[k]:
            k += 1
        fail[i] = k
    k = 0
    for item in doubled[:-1]:
        while k and item != target[k]:
            k = fail[k - 1]
        if item == target[k]:
            k += 1
            if k == n:
                return True
    return False


def cyclic_equivalent(w1: Word, w2: Word, allow_inversion: bool = False) -> bool:
    """Whether the cyclic reductions of ``w1`` and ``w2`` agree up to rotation.

    With ``allow_inversion`` the inverse of ``w2`` is also tried, so relators that
    define the same normal subgroup generator compare equal.
    """
    a = cyclic_reduce(w1).letters()
    b = cyclic_reduce(w2).letters()
    if _rotations_contain(a, b):
        return True
    return allow_inversion and _rotations_contain(a, cyclic_reduce(w2.inverse()).letters())


def cyclic_key(w: Word, allow_inversion: bool = True) -> tuple:
    """Canonical representative of the cyclic class: least rotation (and inverse rotation)."""
    candidates = [cyclic_reduce(w).letters()]
    if allow_inversion:
        candidates.append(cyclic_reduce(w.inverse()).letters())
    best = None
    for letters in candidates:
        for i in range(max(len(letters), 1)):
            rot = tuple(letters[i:] + letters[:i])
            if best is None or rot < best:
                best = rot
    return best

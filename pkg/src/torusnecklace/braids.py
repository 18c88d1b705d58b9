"""Braid words, the Artin action on free groups, permutations and strand removal."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .words import Word, gen


@dataclass(frozen=True)
class BraidWord:
    """A braid on ``strands`` strands given as a word in the elementary crossings.

    ``crossings`` holds ``(i, sign)`` pairs for ``s_i^sign`` with ``1 <= i < strands``.
    """

    strands: int
    crossings: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        crossings = tuple((int(i), int(s)) for i, s in self.crossings)
        for i, s in crossings:
            if not 1 <= i <= self.strands - 1:
                raise ValueError(f"crossing index {i} outside [1, {self.strands - 1}]")
            if s not in (1, -1):
                raise ValueError(f"crossing sign must be +1 or -1, got {s}")
        object.__setattr__(self, "crossings", crossings)

    @classmethod
    def from_indices(cls, strands: int, indices: Iterable[int]) -> BraidWord:
        """Signed indices: ``3`` is ``s3`` and ``-3`` its inverse."""
        return cls(strands, tuple((abs(i), 1 if i > 0 else -1) for i in indices))

    @classmethod
    def parse(cls, strands: int, text: str) -> BraidWord:
        text = text.strip()
        if text in ("", "1"):
            return cls(strands)
        crossings = []
        for name, exp in Word.parse(text):
            if not name.startswith("s") or not name[1:].isdigit():
                raise ValueError(f"braid letters must be s<i>, got {name!r}")
            sign = 1 if exp > 0 else -1
            crossings.extend([(int(name[1:]), sign)] * abs(exp))
        return cls(strands, tuple(crossings))

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.strands != other.strands:
            raise ValueError("cannot multiply braids with different strand counts")
        return BraidWord(self.strands, self.crossings + other.crossings)

    def __pow__(self, k: int) -> BraidWord:
        base = self if k >= 0 else self.inverse()
        return BraidWord(self.strands, base.crossings * abs(k))

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple((i, -s) for i, s in reversed(self.crossings)))

    def embed(self, strands: int) -> BraidWord:
        """The same crossings seen in a braid group with more strands."""
        if strands < self.strands:
            raise ValueError("cannot embed into fewer strands")
        return BraidWord(strands, self.crossings)

    def __len__(self) -> int:
        return len(self.crossings)

    def __str__(self) -> str:
        if not self.crossings:
            return "1"
        return ".".join(f"s{i}" if s > 0 else f"s{i}^-1" for i, s in self.crossings)


def crossing_images(i: int, sign: int) -> dict[str, Word]:
    """Images of ``x_i`` and ``x_(i+1)`` under one crossing; other generators are fixed."""
    xi, xj = gen(f"x{i}"), gen(f"x{i + 1}")
    if sign > 0:
        return {f"x{i}": xi * xj * xi.inverse(), f"x{i + 1}": xi}
    return {f"x{i}": xj, f"x{i + 1}": xj.inverse() * xi * xj}


def _check_alphabet(beta: BraidWord, w: Word) -> None:
    for name in w.generators():
        if not (name.startswith("x") and name[1:].isdigit() and 1 <= int(name[1:]) <= beta.strands):
            raise ValueError(f"generator {name!r} is not one of x1..x{beta.strands}")


def artin_act(beta: BraidWord, w: Word) -> Word:
    """Right Artin action ``w . beta``, processing crossings from left to right."""
    _check_alphabet(beta, w)
    result = w
    for i, sign in beta.crossings:
        images = crossing_images(i, sign)
        syllables = []
        for name, exp in result:
            if name in images:
                syllables.extend((images[name] ** exp).syllables)
            else:
                syllables.append((name, exp))
        result = Word(syllables)
    return result


def artin_images(beta: BraidWord) -> dict[str, Word]:
    """The automorphism induced by ``beta``, as images of ``x1 .. xn``."""
    return {f"x{i}": artin_act(beta, gen(f"x{i}")) for i in range(1, beta.strands + 1)}


def underlying_permutation(beta: BraidWord) -> tuple[list[int], list[list[int]]]:
    """The permutation ``start -> end`` (1-based, as a list indexed from 0) and its cycles."""
    n = beta.strands
    at = list(range(1, n + 1))  # at[p] = strand currently in position p+1
    for i, _ in beta.crossings:
        at[i - 1], at[i] = at[i], at[i - 1]
    perm = [0] * n
    for pos, strand in enumerate(at, start=1):
        perm[strand - 1] = pos
    return perm, permutation_cycles(perm)


def permutation_cycles(perm: Sequence[int]) -> list[list[int]]:
    seen: set[int] = set()
    cycles = []
    for start in range(1, len(perm) + 1):
        if start in seen:
            continue
        cycle = []
        k = start
        while k not in seen:
            seen.add(k)
            cycle.append(k)
            k = perm[k - 1]
        cycles.append(cycle)
    return cycles


def remove_strands(beta: BraidWord, removed: Iterable[int]) -> BraidWord:
    """Forget the strands starting at the given positions.

    The set must be stabilised by the underlying permutation.  Crossings touching a
    removed strand are deleted; the others are renumbered among the surviving strands.
    """
    removed = set(removed)
    n = beta.strands
    for p in removed:
        if not 1 <= p <= n:
            raise ValueError(f"strand {p} outside [1, {n}]")
    perm, _ = underlying_permutation(beta)
    if {perm[p - 1] for p in removed} != removed:
        raise ValueError(f"the braid permutation does not stabilise {sorted(removed)}")
    if len(removed) == n:
        raise ValueError("cannot remove every strand")
    at = list(range(1, n + 1))
    kept = []
    for i, sign in beta.crossings:
        left, right = at[i - 1], at[i]
        if left not in removed and right not in removed:
            new_index = sum(1 for s in at[:i] if s not in removed)
            kept.append((new_index, sign))
        at[i - 1], at[i] = right, left
    return BraidWord(n - len(removed), tuple(kept))

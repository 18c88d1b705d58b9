"""The named braids behind torus necklaces and key-chain links, with closed-form actions.

The closed forms below are written directly from the displayed formulas for each
family; :func:`closed_form_action` never composes crossings.  Tests compare them with
:func:`torusnecklace.braids.artin_act` applied to :func:`build`.

Conjugation ``h g h^-1`` is expanded eagerly into reduced words.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import decompose
from .braids import BraidWord
from .words import Word, chain, conj, gen

KINDS = ("U", "D", "V", "Beta", "BetaPow", "HalfTwist", "Necklace", "KeyChain")


@dataclass(frozen=True)
class NecklaceSpec:
    """Which braid to build.

    ``kind`` is one of ``U(s,t)``, ``D(s,t)``, ``V(n)``, ``Beta(n)``, ``BetaPow(n, power)``,
    ``HalfTwist(n)``, ``Necklace(n, m)``, ``KeyChain(k)``.  ``ambient`` defaults to the
    natural strand count of the kind.
    """

    kind: str
    n: int = 0
    m: int = 0
    s: int = 0
    t: int = 0
    k: int = 0
    power: int = 0
    ambient: int | None = None

    def natural_strands(self) -> int:
        if self.kind in ("U", "D"):
            return self.t + 1
        if self.kind in ("V", "Necklace"):
            return self.n + 2
        if self.kind in ("Beta", "BetaPow"):
            return self.n + 1
        if self.kind == "HalfTwist":
            return self.n
        if self.kind == "KeyChain":
            return self.k + 1
        raise ValueError(f"unknown kind {self.kind!r}")

    @property
    def strands(self) -> int:
        natural = self.natural_strands()
        if self.ambient is None:
            return natural
        if self.ambient < natural:
            raise ValueError(f"{self.kind} needs at least {natural} strands, got {self.ambient}")
        return self.ambient

    def validate(self) -> None:
        kind = self.kind
        if kind in ("U", "D"):
            if not 1 <= self.s <= self.t:
                raise ValueError(f"{kind} needs 1 <= s <= t, got s={self.s}, t={self.t}")
        elif kind in ("V", "Beta", "BetaPow", "HalfTwist"):
            if self.n < 1:
                raise ValueError(f"{kind} needs n >= 1")
            if kind == "BetaPow" and self.power < 0:
                raise ValueError("BetaPow needs a nonnegative power")
        elif kind == "Necklace":
            if self.n < 1 or self.m < 1:
                raise ValueError("Necklace needs n, m >= 1")
        elif kind == "KeyChain":
            if self.k < 0:
                raise ValueError("KeyChain needs k >= 0")
        else:
            raise ValueError(f"unknown kind {kind!r}")
        self.strands  # ambient check


def _up(s: int, t: int) -> list[int]:
    return list(range(s, t + 1))


def _down(s: int, t: int) -> list[int]:
    return list(range(t, s - 1, -1))


def _indices(spec: NecklaceSpec) -> list[int]:
    kind = spec.kind
    if kind == "U":
        return _up(spec.s, spec.t)
    if kind == "D":
        return _down(spec.s, spec.t)
    if kind == "V":
        return _down(1, spec.n + 1) + _up(1, spec.n + 1)
    if kind == "Beta":
        return _up(1, spec.n) + [spec.n]
    if kind == "BetaPow":
        return (_up(1, spec.n) + [spec.n]) * spec.power
    if kind == "HalfTwist":
        out: list[int] = []
        for j in range(spec.n - 1, 0, -1):
            out += _up(1, j)
        return out
    if kind == "Necklace":
        n = spec.n
        return _down(1, n + 1) + _up(1, n + 1) + (_up(1, n - 1) + [n, n]) * spec.m
    if kind == "KeyChain":
        k = spec.k
        return _down(2, k) + [1, 1] + _up(2, k) if k >= 1 else []
    raise ValueError(f"unknown kind {kind!r}")


def build(spec: NecklaceSpec) -> BraidWord:
    """The literal braid word for ``spec``."""
    spec.validate()
    return BraidWord.from_indices(spec.strands, _indices(spec))


def necklace(n: int, m: int) -> BraidWord:
    return build(NecklaceSpec("Necklace", n=n, m=m))


def key_chain(k: int) -> BraidWord:
    return build(NecklaceSpec("KeyChain", k=k))


def half_twist(n: int, ambient: int | None = None) -> BraidWord:
    return build(NecklaceSpec("HalfTwist", n=n, ambient=ambient))


def x(i: int) -> Word:
    return gen(f"x{i}")


def _identity_map(strands: int) -> dict[str, Word]:
    return {f"x{i}": x(i) for i in range(1, strands + 1)}


def _u_action(s: int, t: int, images: dict[str, Word]) -> None:
    images[f"x{s}"] = conj(chain("x", s, t), x(t + 1))
    for i in range(s + 1, t + 2):
        images[f"x{i}"] = x(i - 1)


def _d_action(s: int, t: int, images: dict[str, Word]) -> None:
    for i in range(s, t + 1):
        images[f"x{i}"] = conj(x(s), x(i + 1))
    images[f"x{t + 1}"] = x(s)


def _beta_power_action(n: int, power: int, images: dict[str, Word]) -> None:
    # power = q*n + r; q = 0 and r = 0 are the degenerate branches of the same formula
    q, r = divmod(power, n)
    loop = chain("x", 1, n + 1)
    for i in range(1, r + 1):
        images[f"x{i}"] = conj(loop ** (q + 1), x(n - r + i))
    for i in range(r + 1, n + 1):
        images[f"x{i}"] = conj(loop ** q, x(i - r))
    images[f"x{n + 1}"] = conj(loop ** q * chain("x", n - r + 1, n), x(n + 1))


def _half_twist_action(n: int, images: dict[str, Word]) -> None:
    for i in range(1, n + 1):
        images[f"x{i}"] = conj(chain("x", 1, n - i), x(n - i + 1))


def _necklace_action(n: int, m: int, images: dict[str, Word]) -> None:
    dec = decompose(n, m)
    q, r = dec.q, dec.r
    loop = chain("x", 1, n + 1)
    full = chain("x", 1, n + 2)
    for i in range(1, r + 1):
        images[f"x{i}"] = conj(full * loop ** q, x(n - r + i))
    for i in range(r + 1, n + 1):
        images[f"x{i}"] = conj(full * loop ** (q - 1), x(i - r))
    images[f"x{n + 1}"] = conj(full * loop ** (q - 1) * chain("x", n - r + 1, n), x(n + 1))
    images[f"x{n + 2}"] = conj(loop, x(n + 2))


def closed_form_action(spec: NecklaceSpec) -> dict[str, Word]:
    """Images of every ambient generator under the braid of ``spec``, from closed formulas."""
    spec.validate()
    kind = spec.kind
    images = _identity_map(spec.strands)
    if kind == "U":
        _u_action(spec.s, spec.t, images)
    elif kind == "D":
        _d_action(spec.s, spec.t, images)
    elif kind == "V":
        n = spec.n
        loop = chain("x", 1, n + 1)
        conjugator = conj(loop, x(n + 2))
        for i in range(1, n + 2):
            images[f"x{i}"] = conj(conjugator, x(i))
        images[f"x{n + 2}"] = conjugator
    elif kind == "Beta":
        _beta_power_action(spec.n, 1, images)
    elif kind == "BetaPow":
        _beta_power_action(spec.n, spec.power, images)
    elif kind == "HalfTwist":
        _half_twist_action(spec.n, images)
    elif kind == "Necklace":
        _necklace_action(spec.n, spec.m, images)
    else:
        raise ValueError(f"no closed form for {kind!r}")
    return images

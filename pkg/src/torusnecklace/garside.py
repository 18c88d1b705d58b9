"""Word problem in circular groups ``G(n, m)`` through greedy Garside normal forms.

``G(n, m)`` is generated by ``a_1 .. a_n`` subject to: all ``n`` cyclic windows
``a_i a_(i+1) ... a_(i+m-1)`` (indices mod n) are equal.  Their common value is the
Garside element ``D``.  Simple elements are windows ``(start, length)`` with
``0 <= length <= m``; length 0 is the identity and length ``m`` is ``D``.

Conventions used throughout:

* starts are residues ``0 .. n-1`` internally (``a_1`` is start 0) and 1-based in text;
* ``tau(x) = D^-1 x D`` shifts every start by ``+m``;
* a normal form is ``D^p s_1 ... s_k`` with each ``s_j`` proper and every adjacent pair
  left-weighted: ``left_gcd(right_complement(s_j), s_(j+1))`` is the identity.

The window lattice (proper windows are pairwise distinct, their left divisors are
their prefixes, two distinct generators have right lcm ``D``) is checked by
:func:`validate_lattice` before a group is used, and against the brute-force
:func:`positive_ball` in the test-suite.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .words import Word, gen, split_name


class LatticeValidationError(RuntimeError):
    pass


class ResourceLimitError(RuntimeError):
    pass


@dataclass(frozen=True)
class CircularParams:
    n: int
    m: int
    family: str = "a"

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError(f"circular group needs n, m >= 1, got n={self.n}, m={self.m}")

    def gen_name(self, i: int) -> str:
        """Name of the generator with 0-based residue ``i``."""
        return f"{self.family}{i % self.n + 1}"

    def generators(self) -> list[str]:
        return [self.gen_name(i) for i in range(self.n)]


class Simple(NamedTuple):
    start: int
    length: int


@dataclass(frozen=True)
class NormalForm:
    power: int
    body: tuple[Simple, ...] = ()

    def __str__(self) -> str:
        text = f"D^{self.power} :"
        if self.body:
            text += " " + "".join(f"({s.start + 1},{s.length})" for s in self.body)
        return text

    def is_identity(self) -> bool:
        return self.power == 0 and not self.body


@dataclass
class CircularGroup:
    """Garside structure of ``G(n, m)``; construction runs the lattice validation."""

    params: CircularParams
    validate: bool = True
    _index: dict[str, int] = field(init=False, repr=False)

    def __post_init__(self):
        self._index = {self.params.gen_name(i): i for i in range(self.params.n)}
        if self.validate:
            report = validate_lattice(self.params)
            if not report.ok:
                raise LatticeValidationError(f"window lattice fails for {self.params}: {report.failures}")

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def m(self) -> int:
        return self.params.m

    # simple elements

    def simple(self, start: int, length: int) -> Simple:
        if not 0 <= length <= self.m:
            raise ValueError(f"window length {length} outside [0, {self.m}]")
        if length == 0 or length == self.m:
            return Simple(0, length)
        return Simple(start % self.n, length)

    @property
    def identity(self) -> Simple:
        return Simple(0, 0)

    @property
    def delta(self) -> Simple:
        return Simple(0, self.m)

    def is_delta(self, s: Simple) -> bool:
        return s.length == self.m

    def right_complement(self, s: Simple) -> Simple:
        if s.length == 0:
            return self.delta
        if s.length == self.m:
            return self.identity
        return self.simple(s.start + s.length, self.m - s.length)

    def left_gcd(self, u: Simple, v: Simple) -> Simple:
        if self.is_delta(u):
            return v
        if self.is_delta(v):
            return u
        if u.length == 0 or v.length == 0:
            return self.identity
        if u.start == v.start:
            return u if u.length <= v.length else v
        return self.identity

    def tau(self, s: Simple, k: int = 1) -> Simple:
        if s.length == 0 or s.length == self.m:
            return s
        return Simple((s.start + k * self.m) % self.n, s.length)

    def _extend(self, u: Simple, t: Simple) -> Simple:
        """``u t`` where ``t`` left-divides the right complement of ``u``."""
        if t.length == 0:
            return u
        if u.length == 0:
            return t
        return self.simple(u.start, u.length + t.length)

    def _left_quotient(self, t: Simple, v: Simple) -> Simple:
        """``t^-1 v`` where ``t`` left-divides ``v``."""
        if t.length == 0:
            return v
        if self.is_delta(v):
            return self.right_complement(t)
        return self.simple(v.start + t.length, v.length - t.length)

    def simple_word(self, s: Simple) -> Word:
        return Word((self.params.gen_name(s.start + j), 1) for j in range(s.length))

    def delta_word(self) -> Word:
        return self.simple_word(Simple(0, self.m))

    def alpha(self) -> Word:
        """The product ``a_1 ... a_n``."""
        return Word((self.params.gen_name(i), 1) for i in range(self.n))

    # normal forms

    def generator_index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown generator {name!r} for G({self.n},{self.m})") from None

    def normal_form(self, w: Word) -> NormalForm:
        power = 0
        body: list[Simple] = []
        for name, exp in w:
            i = self.generator_index(name)
            for _ in range(abs(exp)):
                if exp > 0:
                    power = self._mul_simple(power, body, self.simple(i, 1))
                else:
                    power = self._mul_simple(power, body, self.right_complement(self.simple(i, 1)))
                    # x D^-1 = D^-1 tau^-1(x)
                    power -= 1
                    body[:] = [self.tau(s, -1) for s in body]
        return NormalForm(power, tuple(body))

    def _mul_simple(self, power: int, body: list[Simple], t: Simple) -> int:
        if t.length == 0:
            return power
        if self.is_delta(t):
            # x D = D tau(x)
            body[:] = [self.tau(s) for s in body]
            return power + 1
        body.append(t)
        j = len(body) - 2
        while j >= 0:
            u, v = body[j], body[j + 1]
            g = self.left_gcd(self.right_complement(u), v)
            if g.length == 0:
                break
            body[j] = self._extend(u, g)
            body[j + 1] = self._left_quotient(g, v)
            j -= 1
        return self._tidy(power, body)

    def _tidy(self, power: int, body: list[Simple]) -> int:
        changed = True
        while changed:
            changed = False
            for j in range(len(body) - 1):
                u, v = body[j], body[j + 1]
                g = self.left_gcd(self.right_complement(u), v)
                if g.length:
                    body[j] = self._extend(u, g)
                    body[j + 1] = self._left_quotient(g, v)
                    changed = True
        while body and self.is_delta(body[0]):
            body.pop(0)
            power += 1
        while body and body[-1].length == 0:
            body.pop()
        assert all(0 < s.length < self.m for s in body)
        return power

    def to_word(self, nf: NormalForm) -> Word:
        out = self.delta_word() ** nf.power
        for s in nf.body:
            out = out * self.simple_word(s)
        return out

    def equal(self, w1: Word, w2: Word) -> bool:
        return self.normal_form(w1) == self.normal_form(w2)

    def is_trivial(self, w: Word) -> bool:
        return self.normal_form(w).is_identity()

    def is_central(self, w: Word) -> bool:
        nf = self.normal_form(w)
        for name in self.params.generators():
            a = gen(name)
            if self.normal_form(w * a) != self.normal_form(a * w):
                return False
        del nf
        return True


_GROUP_CACHE: dict[CircularParams, CircularGroup] = {}
_GROUP_LOCK = threading.Lock()


def circular_group(params: CircularParams | tuple[int, int], family: str = "a") -> CircularGroup:
    """Memoised validated engine for ``G(n, m)``."""
    if not isinstance(params, CircularParams):
        params = CircularParams(params[0], params[1], family)
    group = _GROUP_CACHE.get(params)
    if group is None:
        with _GROUP_LOCK:
            group = _GROUP_CACHE.get(params)
            if group is None:
                group = CircularGroup(params)
                _GROUP_CACHE[params] = group
    return group


def right_complement(params: CircularParams, s: Simple) -> Simple:
    return circular_group(params).right_complement(s)


def left_gcd(params: CircularParams, u: Simple, v: Simple) -> Simple:
    return circular_group(params).left_gcd(u, v)


def tau(params: CircularParams, s: Simple) -> Simple:
    return circular_group(params).tau(s)


def normal_form(params: CircularParams, w: Word) -> NormalForm:
    return circular_group(params).normal_form(w)


def equal(params: CircularParams, w1: Word, w2: Word) -> bool:
    return circular_group(params).equal(w1, w2)


def is_central(params: CircularParams, w: Word) -> bool:
    return circular_group(params).is_central(w)


# brute-force oracle


def _windows(n: int, m: int) -> set[tuple[int, ...]]:
    return {tuple((s + j) % n for j in range(m)) for s in range(n)}


def _closure(word: tuple[int, ...], windows: set[tuple[int, ...]], m: int) -> set[tuple[int, ...]]:
    """All positive words reachable from ``word`` by replacing one window with another."""
    seen = {word}
    todo = [word]
    while todo:
        cur = todo.pop()
        for p in range(len(cur) - m + 1):
            if cur[p:p + m] in windows:
                for other in windows:
                    nxt = cur[:p] + other + cur[p + m:]
                    if nxt not in seen:
                        seen.add(nxt)
                        todo.append(nxt)
    return seen


def positive_ball(params: CircularParams, max_len: int, limit: int = 2_000_000) -> list[list[tuple[int, ...]]]:
    """Partition every positive word of length ``<= max_len`` into monoid equality classes.

    Words are tuples of 0-based generator residues.  Classes come out sorted, each
    sorted internally, so ``cls[0]`` is the lexicographically least representative.
    The partition is obtained by union-find over single window replacements.
    """
    n, m = params.n, params.m
    total = sum(n ** k for k in range(max_len + 1))
    if total > limit:
        raise ResourceLimitError(f"ball of {total} words exceeds the limit {limit}")
    windows = _windows(n, m)
    anchor = tuple(range(m)) if n >= m else tuple(j % n for j in range(m))
    parent: dict[tuple[int, ...], tuple[int, ...]] = {}

    def find(u):
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    def union(u, v):
        ru, rv = find(u), find(v)
        if ru != rv:
            if rv < ru:
                ru, rv = rv, ru
            parent[rv] = ru

    words = [w for k in range(max_len + 1) for w in itertools.product(range(n), repeat=k)]
    for w in words:
        parent[w] = w
    for w in words:
        for p in range(len(w) - m + 1):
            if w[p:p + m] in windows:
                union(w, w[:p] + anchor + w[p + m:])
    classes: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for w in words:
        classes.setdefault(find(w), []).append(w)
    return sorted((sorted(c) for c in classes.values()), key=lambda c: (len(c[0]), c[0]))


def ball_word(params: CircularParams, w: Iterable[int]) -> Word:
    return Word((params.gen_name(i), 1) for i in w)


@dataclass
class LatticeReport:
    params: CircularParams
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


_LATTICE_CACHE: dict[CircularParams, LatticeReport] = {}


def validate_lattice(params: CircularParams) -> LatticeReport:
    """Check the window model of the simple elements from the rewrite system itself.

    Relations only ever rewrite a full window, so the check reduces to: no window of
    length ``< m`` can be rewritten, and the class of one full window is exactly the
    set of full windows, each starting with a different generator (when ``m > 1``).
    Those facts give distinctness of proper windows, prefix-only left divisibility and
    ``lcm(a_i, a_j) = D``.  The full brute-force comparison lives in
    :func:`validate_lattice_against_ball`.
    """
    cached = _LATTICE_CACHE.get(params)
    if cached is not None:
        return cached
    n, m = params.n, params.m
    report = LatticeReport(params)
    windows = _windows(n, m)
    for s in range(n):
        for k in range(1, m):
            w = tuple((s + j) % n for j in range(k))
            if _closure(w, windows, m) != {w}:
                report.failures.append(f"window ({s + 1},{k}) is not rigid")
    full = tuple(j % n for j in range(m))
    cls = _closure(full, windows, m)
    if cls != windows:
        report.failures.append("class of D differs from the set of full windows")
    if m > 1 and {w[0] for w in cls} != set(range(n)):
        report.failures.append("some generator does not left-divide D")
    _LATTICE_CACHE[params] = report
    return report


def validate_lattice_against_ball(params: CircularParams, max_len: int | None = None) -> LatticeReport:
    """Brute-force check of the window lattice inside ``positive_ball(params, max_len)``.

    Checks: proper windows are pairwise distinct elements, the left divisors of a
    proper window are exactly its prefixes, and for two distinct generators the only
    common right multiples of length ``<= m`` are equal to ``D``.
    """
    n, m = params.n, params.m
    if max_len is None:
        max_len = m
    report = LatticeReport(params)
    ball = positive_ball(params, max_len)
    class_of = {}
    for idx, cls in enumerate(ball):
        for w in cls:
            class_of[w] = idx
    members = {idx: set(cls) for idx, cls in enumerate(ball)}
    proper = {}
    for s in range(n):
        for k in range(1, min(m, max_len + 1)):
            w = tuple((s + j) % n for j in range(k))
            proper[(s, k)] = w
    seen_classes = {}
    for key, w in proper.items():
        c = class_of[w]
        if c in seen_classes and proper[seen_classes[c]] != w:
            report.failures.append(f"windows {seen_classes[c]} and {key} coincide")
        seen_classes.setdefault(c, key)
    for key, w in proper.items():
        cls = members[class_of[w]]
        for j in range(len(w) + 1):
            for u in itertools.product(range(n), repeat=j):
                divides = any(v[:j] == u for v in cls)
                if divides != (u == w[:j]):
                    report.failures.append(f"divisor {u} of window {key}: {divides}")
    if m <= max_len and m > 1:
        delta_class = class_of[tuple(j % n for j in range(m))]
        for i, j in itertools.combinations(range(n), 2):
            for cls_idx, cls in members.items():
                if not cls:
                    continue
                length = len(next(iter(cls)))
                if length == 0 or length > m:
                    continue
                firsts = {v[0] for v in cls}
                if i in firsts and j in firsts and cls_idx != delta_class:
                    report.failures.append(f"a{i + 1}, a{j + 1} have a common multiple below D")
            firsts = {v[0] for v in members[delta_class]}
            if not {i, j} <= firsts:
                report.failures.append(f"D is not a common multiple of a{i + 1}, a{j + 1}")
    return report


def name_index(name: str) -> int:
    _, index = split_name(name)
    if index is None:
        raise ValueError(f"generator {name!r} has no index")
    return index

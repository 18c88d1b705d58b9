"""Finite presentations: braid closures, automorphism transport, quotients, built-in
families, simplification, abelianization and coset enumeration.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Mapping

from .arith import decompose, mod_inverse
from .braids import BraidWord, artin_images, remove_strands
from .necklaces import NecklaceSpec, build
from .words import (
    IDENTITY,
    Word,
    as_word,
    chain,
    conj,
    cyclic_key,
    cyclic_reduce,
    gen,
    sort_generators,
    substitute,
)

FLAVORS = ("full", "internal", "external", "plain")
FLAVOR_KILLS = {"full": (), "internal": ("z",), "external": ("y",), "plain": ("y", "z")}


class PresentationError(ValueError):
    pass


class LimitExceeded(RuntimeError):
    """Coset enumeration did not close within the table limit."""


@dataclass(frozen=True)
class Relation:
    lhs: Word
    rhs: Word = IDENTITY

    @property
    def relator(self) -> Word:
        return self.lhs * self.rhs.inverse()

    def __str__(self) -> str:
        return f"{self.lhs} = {self.rhs}"


@dataclass(frozen=True)
class FinitePresentation:
    generators: tuple[str, ...]
    relations: tuple[Relation, ...] = ()
    meta: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        gens = tuple(self.generators)
        if len(set(gens)) != len(gens):
            raise PresentationError(f"repeated generator in {gens}")
        rels = tuple(r if isinstance(r, Relation) else Relation(as_word(r[0]), as_word(r[1])) for r in self.relations)
        known = set(gens)
        for rel in rels:
            extra = (rel.lhs.generators() | rel.rhs.generators()) - known
            if extra:
                raise PresentationError(f"relation {rel} uses unknown generators {sorted(extra)}")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relations", rels)
        object.__setattr__(self, "meta", dict(self.meta))

    def relators(self) -> list[Word]:
        return [rel.relator for rel in self.relations]

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "relations": [{"lhs": str(r.lhs), "rhs": str(r.rhs)} for r in self.relations],
            "meta": dict(self.meta),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def from_json(cls, doc: Mapping[str, Any] | str) -> FinitePresentation:
        if isinstance(doc, str):
            doc = json.loads(doc)
        try:
            gens = [str(g) for g in doc["generators"]]
            rels = [Relation(Word.parse(r["lhs"]), Word.parse(r["rhs"])) for r in doc["relations"]]
        except (KeyError, TypeError) as exc:
            raise PresentationError(f"malformed presentation document: {exc}") from None
        return cls(tuple(gens), tuple(rels), doc.get("meta", {}))

    def __str__(self) -> str:
        rels = ", ".join(str(r) for r in self.relations)
        return f"< {', '.join(self.generators)} | {rels} >"


def _xs(count: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, count + 1))


# braid closures and their transformations


def from_braid(beta: BraidWord) -> FinitePresentation:
    """Meridian presentation of the closure of ``beta``: ``x_i = x_i . beta``."""
    images = artin_images(beta)
    rels = tuple(Relation(gen(name), images[name]) for name in _xs(beta.strands))
    return FinitePresentation(_xs(beta.strands), rels, {"family": "braid", "strands": beta.strands, "braid": str(beta)})


def transform(p: FinitePresentation, sigma: BraidWord) -> FinitePresentation:
    """Apply the automorphism of ``sigma`` to both sides of every relation.

    Generators outside ``x_1 .. x_(strands)`` are left fixed.
    """
    missing = [name for name in _xs(sigma.strands) if name not in p.generators]
    if missing:
        raise PresentationError(f"presentation lacks generators {missing} acted on by the braid")
    images = {name: gen(name) for name in p.generators}
    images.update(artin_images(sigma))
    rels = tuple(Relation(substitute(r.lhs, images), substitute(r.rhs, images)) for r in p.relations)
    meta = dict(p.meta)
    meta["transformed_by"] = str(sigma)
    return FinitePresentation(p.generators, rels, meta)


def quotient_generators(p: FinitePresentation, kill: Iterable[str]) -> FinitePresentation:
    """Quotient by the normal closure of the given generators."""
    kill = set(kill)
    unknown = kill - set(p.generators)
    if unknown:
        raise PresentationError(f"cannot kill unknown generators {sorted(unknown)}")
    if not kill:
        return p
    images = {name: (IDENTITY if name in kill else gen(name)) for name in p.generators}
    rels = tuple(Relation(substitute(r.lhs, images), substitute(r.rhs, images)) for r in p.relations)
    meta = dict(p.meta)
    meta["killed"] = ",".join(sort_generators(set(meta.get("killed", "").split(",")) - {""} | kill))
    return FinitePresentation(tuple(g for g in p.generators if g not in kill), rels, meta)


def rename(p: FinitePresentation, renaming: Mapping[str, str]) -> FinitePresentation:
    images = {name: gen(renaming.get(name, name)) for name in p.generators}
    gens = tuple(renaming.get(name, name) for name in p.generators)
    rels = tuple(Relation(substitute(r.lhs, images), substitute(r.rhs, images)) for r in p.relations)
    return FinitePresentation(gens, rels, p.meta)


def simplify(p: FinitePresentation) -> FinitePresentation:
    """Cyclically reduce relators, drop trivial ones and duplicates up to rotation and inversion."""
    seen = set()
    rels = []
    for relator in p.relators():
        relator = cyclic_reduce(relator)
        if not relator:
            continue
        key = cyclic_key(relator)
        if key in seen:
            continue
        seen.add(key)
        rels.append(Relation(relator))
    return FinitePresentation(p.generators, tuple(rels), p.meta)


def relator_keys(p: FinitePresentation) -> set:
    return {cyclic_key(r) for r in p.relators() if cyclic_reduce(r)}


def relator_match(p1: FinitePresentation, p2: FinitePresentation, renaming: Mapping[str, str] | None = None) -> bool:
    """Whether the relator sets agree up to cyclic rotation and inversion after renaming ``p1``."""
    renaming = dict(renaming or {})
    if len(p1.generators) != len(p2.generators):
        return False
    target = [renaming.get(g, g) for g in p1.generators]
    if len(set(target)) != len(target) or set(target) != set(p2.generators):
        raise PresentationError("renaming is not a bijection onto the second generator set")
    return relator_keys(rename(p1, renaming)) == relator_keys(p2)


# abelianization and coset enumeration


def relation_matrix(p: FinitePresentation) -> list[list[int]]:
    return [[relator.exponent_sum(g) for g in p.generators] for relator in p.relators()]


def abelianization(p: FinitePresentation) -> tuple[int, list[int]]:
    """Free rank and nontrivial invariant factors of the abelianized group."""
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import invariant_factors

    rows = [row for row in relation_matrix(p) if any(row)]
    ngens = len(p.generators)
    if not rows or ngens == 0:
        return ngens, []
    factors = [abs(int(f)) for f in invariant_factors(Matrix(rows), domain=ZZ)]
    nonzero = [f for f in factors if f != 0]
    return ngens - len(nonzero), sorted(f for f in nonzero if f != 1)


class _CosetTable:
    def __init__(self, p: FinitePresentation, limit: int):
        self.limit = limit
        self.ngens = len(p.generators)
        index = {g: i for i, g in enumerate(p.generators)}
        # column 2i is generator i, column 2i+1 its inverse
        self.relators = []
        for relator in p.relators():
            letters = cyclic_reduce(relator).letters()
            if letters:
                self.relators.append([2 * index[g] + (0 if s > 0 else 1) for g, s in letters])
        self.ncols = 2 * self.ngens
        self.table: list[list[int]] = [[-1] * self.ncols]
        self.parent = [0]

    @staticmethod
    def inv(col: int) -> int:
        return col ^ 1

    def live(self) -> int:
        return sum(1 for c, p in enumerate(self.parent) if p == c)

    def define(self, c: int, x: int) -> None:
        if len(self.table) >= self.limit:
            raise _TableFull
        d = len(self.table)
        self.table.append([-1] * self.ncols)
        self.parent.append(d)
        self.table[c][x] = d
        self.table[d][self.inv(x)] = c

    def rep(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def merge(self, k: int, l: int, queue: list[int]) -> None:
        k, l = self.rep(k), self.rep(l)
        if k == l:
            return
        k, l = min(k, l), max(k, l)
        self.parent[l] = k
        queue.append(l)

    def coincidence(self, a: int, b: int) -> None:
        queue: list[int] = []
        self.merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            for x in range(self.ncols):
                f = self.table[e][x]
                if f == -1:
                    continue
                self.table[f][self.inv(x)] = -1
                e1, f1 = self.rep(e), self.rep(f)
                if self.table[e1][x] != -1:
                    self.merge(f1, self.table[e1][x], queue)
                elif self.table[f1][self.inv(x)] != -1:
                    self.merge(e1, self.table[f1][self.inv(x)], queue)
                else:
                    self.table[e1][x] = f1
                    self.table[f1][self.inv(x)] = e1

    def scan(self, c: int, rel: list[int], fill: bool) -> None:
        table = self.table
        f, i, b, j = c, 0, c, len(rel) - 1
        while True:
            while i <= j and table[f][rel[i]] != -1:
                f = table[f][rel[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][self.inv(rel[j])] != -1:
                b = table[b][self.inv(rel[j])]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f][rel[i]] = b
                table[b][self.inv(rel[i])] = f
                return
            if not fill:
                return
            self.define(f, rel[i])

    def lookahead(self) -> None:
        for c in range(len(self.table)):
            for rel in self.relators:
                if self.parent[c] != c:
                    break
                self.scan(c, rel, fill=False)

    def compact(self, cursor: int) -> int:
        """Renumber live cosets consecutively; returns the new position of ``cursor``."""
        live = [c for c in range(len(self.table)) if self.parent[c] == c]
        new = {c: k for k, c in enumerate(live)}
        self.table = [[new[v] if v != -1 else -1 for v in self.table[c]] for c in live]
        self.parent = list(range(len(live)))
        return sum(1 for c in live if c < cursor)


class _TableFull(Exception):
    pass


def coset_enumeration(p: FinitePresentation, limit: int = 10_000) -> int:
    """Order of the presented group by HLT coset enumeration with lookahead.

    Raises :class:`LimitExceeded` when more than ``limit`` cosets would be needed.
    """
    if limit < 1:
        raise ValueError("limit must be positive")
    t = _CosetTable(p, limit)
    c = 0
    while c < len(t.table):
        try:
            if t.parent[c] == c:
                for rel in t.relators:
                    if t.parent[c] != c:
                        break
                    t.scan(c, rel, fill=True)
                if t.parent[c] == c:
                    for x in range(t.ncols):
                        if t.table[c][x] == -1:
                            t.define(c, x)
            c += 1
        except _TableFull:
            before = len(t.table)
            t.lookahead()
            c = t.compact(c)
            if len(t.table) >= before or len(t.table) >= limit:
                raise LimitExceeded(f"coset enumeration exceeded {limit} cosets") from None
    return t.live()


# built-in families


def _delta_x(n: int) -> Word:
    return chain("x", 1, n) * gen("y")


def _check_coprime(n: int, m: int, family: str, force: bool) -> None:
    if decompose(n, m).d != 1:
        _violation(f"{family} needs coprime n, m (got {n}, {m})", force)


def _violation(message: str, force: bool) -> None:
    if not force:
        raise PresentationError(message + "; pass force=True to build it anyway")
    warnings.warn(message, stacklevel=3)


def circular(n: int, m: int, family: str = "a") -> FinitePresentation:
    """All cyclic windows of length ``m`` are equal; emitted as adjacent equalities."""
    if n < 1 or m < 1:
        raise PresentationError("circular group needs n, m >= 1")

    def window(s: int) -> Word:
        return Word((f"{family}{(s + j) % n + 1}", 1) for j in range(m))

    rels = tuple(Relation(window(i), window(i + 1)) for i in range(n - 1))
    gens = tuple(f"{family}{i}" for i in range(1, n + 1))
    return FinitePresentation(gens, rels, {"family": "circular", "n": n, "m": m})


def _jbraid_relations(n: int, m: int) -> list[Relation]:
    dec = decompose(n, m)
    q, r = dec.q, dec.r
    x = lambda lo, hi: chain("x", lo, hi)  # noqa: E731
    y, z, delta = gen("y"), gen("z"), _delta_x(n)
    rels = [Relation(x(1, n) * y * z, z * x(1, n) * y)]
    for i in range(1, n - r + 1):
        lhs = x(i + 1, n) * y * z * delta ** (q - 1) * x(1, i + r)
        rhs = x(i, n) * y * z * delta ** (q - 1) * x(1, i + r - 1)
        rels.append(Relation(lhs, rhs))
    for i in range(n - r + 1, n + 1):
        lhs = x(i + 1, n) * y * z * delta ** q * x(1, i + r - n)
        rhs = x(i, n) * y * z * delta ** q * x(1, i + r - n - 1)
        rels.append(Relation(lhs, rhs))
    return rels


def jbraid(n: int, m: int, flavor: str = "full", force: bool = False) -> FinitePresentation:
    """J-braid group on ``x_1 .. x_n, y, z``; flavors kill ``z``, ``y`` or both."""
    if flavor not in FLAVORS:
        raise PresentationError(f"unknown flavor {flavor!r}; expected one of {FLAVORS}")
    decompose(n, m)
    if flavor == "plain" and (n < 2 or m < 2):
        _violation(f"plain flavor needs n, m >= 2 (got {n}, {m})", force)
    p = FinitePresentation(_xs(n) + ("y", "z"), tuple(_jbraid_relations(n, m)), {"family": "jbraid", "n": n, "m": m, "flavor": "full"})
    p = quotient_generators(p, FLAVOR_KILLS[flavor])
    meta = {"family": "jbraid", "n": n, "m": m, "flavor": flavor}
    return FinitePresentation(p.generators, p.relations, meta)


def jreflection(k: int, b: int, n: int, c: int, m: int) -> FinitePresentation:
    """Torsion quotient ``x_i^k = y^b = z^c = 1`` of the full J-braid group."""
    if min(k, b, n, c, m) < 1 or k < 2 or b * n < 2 or c * m < 2:
        raise PresentationError("need k, b, n, c, m >= 1 with k, bn, cm >= 2")
    rels = [Relation(gen(f"x{i}", k)) for i in range(1, n + 1)]
    rels += [Relation(gen("y", b)), Relation(gen("z", c))]
    rels += _jbraid_relations(n, m)
    meta = {"family": "jreflection", "k": k, "b": b, "n": n, "c": c, "m": m}
    return FinitePresentation(_xs(n) + ("y", "z"), tuple(rels), meta)


def torus_knot(n: int, m: int) -> FinitePresentation:
    """``<x, y | x^n = y^m>``."""
    if n < 1 or m < 1:
        raise PresentationError("need n, m >= 1")
    return FinitePresentation(("x", "y"), (Relation(gen("x", n), gen("y", m)),), {"family": "torusknot", "n": n, "m": m})


def torus_link_exponents(n: int, m: int) -> tuple[int, int]:
    """``(r, s)`` with ``n' r + m' s = 1``, taking ``r`` as the inverse of ``n'`` modulo ``m'``."""
    dec = decompose(n, m)
    r = mod_inverse(dec.n_prime, dec.m_prime)
    s = (1 - dec.n_prime * r) // dec.m_prime
    return r, s


def torus_link(n: int, m: int) -> FinitePresentation:
    """Torus link group on ``x, y, m_1 .. m_d`` with ``m_1 ... m_d = x^s y^r``."""
    dec = decompose(n, m)
    r, s = torus_link_exponents(n, m)
    x, y = gen("x"), gen("y")
    ms = tuple(f"m{i}" for i in range(1, dec.d + 1))
    rels = [Relation(x ** dec.n_prime, y ** dec.m_prime), Relation(chain("m", 1, dec.d), x ** s * y ** r)]
    rels += [Relation(gen(mi) * x ** dec.n_prime, x ** dec.n_prime * gen(mi)) for mi in ms]
    meta = {"family": "toruslink", "n": n, "m": m, "r": r, "s": s}
    return FinitePresentation(("x", "y") + ms, tuple(rels), meta)


def necklace_two_cores(n: int, m: int, force: bool = False) -> FinitePresentation:
    """``<x, y, z, t | x^n z^m = y^m t^n, xz = zx, yt = ty>`` (coprime parameters)."""
    _check_coprime(n, m, "the two-core necklace presentation", force)
    x, y, z, t = gen("x"), gen("y"), gen("z"), gen("t")
    rels = (Relation(x ** n * z ** m, y ** m * t ** n), Relation(x * z, z * x), Relation(y * t, t * y))
    return FinitePresentation(("x", "y", "z", "t"), rels, {"family": "necklace_two_cores", "n": n, "m": m})


def necklace_one_core(n: int, m: int, force: bool = False) -> FinitePresentation:
    """``<x, y, t | x^n = y^m t^n, yt = ty>`` (coprime parameters)."""
    _check_coprime(n, m, "the one-core necklace presentation", force)
    x, y, t = gen("x"), gen("y"), gen("t")
    rels = (Relation(x ** n, y ** m * t ** n), Relation(y * t, t * y))
    return FinitePresentation(("x", "y", "t"), rels, {"family": "necklace_one_core", "n": n, "m": m})


def necklace_strands(flavor: str, n: int) -> set[int]:
    """Strands of the necklace braid removed to realise a flavor (``n+1`` carries ``y``, ``n+2`` carries ``z``)."""
    return {"full": set(), "internal": {n + 2}, "external": {n + 1}, "plain": {n + 1, n + 2}}[flavor]


def necklace(n: int, m: int, flavor: str = "full") -> FinitePresentation:
    """Meridian presentation of the closure of the necklace braid, optionally with core strands removed."""
    if flavor not in FLAVORS:
        raise PresentationError(f"unknown flavor {flavor!r}")
    beta = build(NecklaceSpec("Necklace", n=n, m=m))
    beta = remove_strands(beta, necklace_strands(flavor, n))
    p = from_braid(beta)
    return FinitePresentation(p.generators, p.relations, {"family": "necklace", "n": n, "m": m, "flavor": flavor})


def key_chain(k: int) -> FinitePresentation:
    p = from_braid(build(NecklaceSpec("KeyChain", k=k)))
    return FinitePresentation(p.generators, p.relations, {"family": "keychain", "k": k})


def necklace_braid_form(n: int, m: int) -> FinitePresentation:
    """Closed-form relations of the necklace closure, on ``x_1 .. x_(n+2)``."""
    dec = decompose(n, m)
    q, r = dec.q, dec.r
    x = lambda i: gen(f"x{i}")  # noqa: E731
    d, t = chain("x", 1, n + 1), x(n + 2)
    tail = chain("x", n - r + 1, n)
    rels = [Relation(x(i) * d * t * d ** q, d * t * d ** q * x(n - r + i)) for i in range(1, r + 1)]
    rels += [Relation(x(i) * d * t * d ** (q - 1), d * t * d ** (q - 1) * x(i - r)) for i in range(r + 1, n + 1)]
    rels.append(Relation(x(n + 1) * d * t * d ** (q - 1) * tail, d * t * d ** (q - 1) * tail * x(n + 1)))
    rels.append(Relation(t * d, d * t))
    return FinitePresentation(_xs(n + 2), tuple(rels), {"family": "necklace_braid_form", "n": n, "m": m})


def necklace_twisted_form(n: int, m: int) -> FinitePresentation:
    """The braid-form relations after the half twist on the first ``n`` strands."""
    dec = decompose(n, m)
    q, r = dec.q, dec.r
    x = lambda i: gen(f"x{i}")  # noqa: E731
    d, t = chain("x", 1, n + 1), x(n + 2)

    def twisted(j: int) -> Word:
        return conj(chain("x", 1, j - 1), x(j))

    rels = [Relation(twisted(n - i + 1) * d * t * d ** q, d * t * d ** q * twisted(r - i + 1)) for i in range(1, r + 1)]
    rels += [
        Relation(twisted(n - i + 1) * d * t * d ** (q - 1), d * t * d ** (q - 1) * twisted(n - i + r + 1))
        for i in range(r + 1, n + 1)
    ]
    head = chain("x", 1, r)
    rels.append(Relation(x(n + 1) * d * t * d ** (q - 1) * head, d * t * d ** (q - 1) * head * x(n + 1)))
    rels.append(Relation(t * d, d * t))
    return FinitePresentation(_xs(n + 2), tuple(rels), {"family": "necklace_twisted_form", "n": n, "m": m})


def necklace_pairs(n: int, m: int, pairs: str = "all") -> FinitePresentation:
    """Window-pair presentation on ``x_1 .. x_n, y, z``.

    ``pairs="all"`` relates every pair ``i < j`` within each family of tails and
    keeps the redundant ``y``-commutation; ``pairs="chain"`` relates only ``j = i + 1``.
    """
    if pairs not in ("all", "chain"):
        raise PresentationError("pairs must be 'all' or 'chain'")
    dec = decompose(n, m)
    q, r = dec.q, dec.r
    y, z, delta = gen("y"), gen("z"), _delta_x(n)

    def head(i: int) -> Word:
        # x_i ... x_n y, which is just y for i = n + 1
        return chain("x", i, n) * y

    def tail_a(i: int) -> Word:
        return head(i) * z * delta ** q * chain("x", 1, i - n + r - 1)

    def tail_b(i: int) -> Word:
        return head(i) * z * delta ** (q - 1) * chain("x", 1, i + r - 1)

    def related(lo: int, hi: int) -> list[tuple[int, int]]:
        idx = list(range(lo, hi + 1))
        if pairs == "chain":
            return list(zip(idx, idx[1:]))
        return [(i, j) for a, i in enumerate(idx) for j in idx[a + 1:]]

    rels = [Relation(tail_a(i), tail_a(j)) for i, j in related(n - r + 1, n + 1)]
    rels += [Relation(tail_b(i), tail_b(j)) for i, j in related(1, n - r + 1)]
    head_r = chain("x", 1, r)
    rels.append(Relation(y * delta * z * delta ** (q - 1) * head_r, delta * z * delta ** (q - 1) * head_r * y))
    rels.append(Relation(z * delta, delta * z))
    meta = {"family": "necklace_pairs", "n": n, "m": m, "pairs": pairs}
    return FinitePresentation(_xs(n) + ("y", "z"), tuple(rels), meta)


def core_quotient(n: int, m: int) -> FinitePresentation:
    """``G(d+2, d+2)`` with the extra relation ``a_2^m' = (a_1 ... a_(d+2))^(m' - n'_(m'))``."""
    dec = decompose(n, m)
    k = dec.d + 2
    base = circular(k, k)
    power = dec.m_prime - mod_inverse(dec.n_prime, dec.m_prime)
    extra = Relation(gen("a2", dec.m_prime), chain("a", 1, k) ** power)
    return FinitePresentation(base.generators, base.relations + (extra,), {"family": "core_quotient", "n": n, "m": m})


BUILTINS: dict[str, Callable[..., FinitePresentation]] = {
    "circular": circular,
    "jbraid": jbraid,
    "jreflection": jreflection,
    "torusknot": torus_knot,
    "toruslink": torus_link,
    "necklace": necklace,
    "keychain": key_chain,
    "core_quotient": core_quotient,
    "necklace_two_cores": necklace_two_cores,
    "necklace_one_core": necklace_one_core,
    "necklace_braid_form": necklace_braid_form,
    "necklace_twisted_form": necklace_twisted_form,
    "necklace_pairs": necklace_pairs,
}


def builtin(name: str, **params) -> FinitePresentation:
    try:
        factory = BUILTINS[name]
    except KeyError:
        raise PresentationError(f"unknown presentation family {name!r}; known: {sorted(BUILTINS)}") from None
    return factory(**params)

"""Explicit homomorphisms between J-braid groups, necklace groups and circular groups,
the central elements of the full J-braid group, and the verification suites built on them.

Every check reduces to the word problem in a circular group, decided by
:mod:`torusnecklace.garside`.  Maps into a presented group that has no such solver
are only checked through composites that land in a circular group.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import ceil
from typing import Iterable, Mapping, Union

from .arith import bezout_pair, decompose, mod_inverse, residue
from .braids import remove_strands
from .garside import CircularParams, circular_group
from .necklaces import NecklaceSpec, build, half_twist
from .presentations import (
    FLAVOR_KILLS,
    FinitePresentation,
    Relation,
    circular,
    core_quotient,
    from_braid,
    jbraid,
    necklace_braid_form,
    necklace_pairs,
    necklace_strands,
    necklace_twisted_form,
    quotient_generators,
    relator_match,
    rename,
    simplify,
    torus_link,
    transform,
)
from .words import IDENTITY, Word, chain, gen, substitute

MAP_NAMES = ("phi", "psi", "phiStar", "psiStar", "torus_link_map")


class UndecidableTarget(ValueError):
    """The target group has no word-problem solver in this package."""


Target = Union[CircularParams, FinitePresentation]


@dataclass
class GroupHom:
    name: str
    source: FinitePresentation
    target: Target
    images: dict[str, Word]

    def __post_init__(self):
        missing = [g for g in self.source.generators if g not in self.images]
        if missing:
            raise ValueError(f"{self.name}: no image for {missing}")

    def apply(self, w: Word) -> Word:
        return substitute(w, self.images)

    def with_images(self, images: Mapping[str, Word]) -> GroupHom:
        return GroupHom(self.name, self.source, self.target, dict(images))


@dataclass
class ReportItem:
    name: str
    status: str
    witness: str = ""


@dataclass
class Report:
    check: str
    n: int
    m: int
    items: list[ReportItem] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(item.status in ("pass", "vacuous") for item in self.items)

    def failures(self) -> list[ReportItem]:
        return [item for item in self.items if item.status == "fail"]

    def add(self, name: str, passed: bool, witness: str = "") -> None:
        self.items.append(ReportItem(name, "pass" if passed else "fail", "" if passed else witness))

    def extend(self, other: Report, prefix: str = "") -> None:
        for item in other.items:
            self.items.append(ReportItem(prefix + item.name, item.status, item.witness))

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "n": self.n,
            "m": self.m,
            "items": [{"name": i.name, "status": i.status, "witness": i.witness} for i in self.items],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


# the maps


def _a(i: int) -> Word:
    return gen(f"a{i}")


def _b(i: int) -> Word:
    return gen(f"b{i}")


def core_params(n: int, m: int) -> CircularParams:
    """``G(d+2, d+2)``."""
    d = decompose(n, m).d
    return CircularParams(d + 2, d + 2)


def reduced_params(n: int, m: int) -> CircularParams:
    """``G(d+1, (d+1) m')`` on generators ``b_1 .. b_(d+1)``."""
    dec = decompose(n, m)
    return CircularParams(dec.d + 1, (dec.d + 1) * dec.m_prime, "b")


def _loop(d: int, start: int = 3) -> Word:
    """``a_start ... a_(d+2) a_1``."""
    return chain("a", start, d + 2) * _a(1)


def phi(n: int, m: int) -> GroupHom:
    """Full J-braid group to ``G(d+2, d+2)``."""
    dec = decompose(n, m)
    d, n1, m1 = dec.d, dec.n_prime, dec.m_prime
    alpha = chain("a", 1, d + 2)
    images = {}
    for i in range(1, n + 1):
        c = ceil(i / d)
        images[f"x{i}"] = _a(1) ** (c - 1) * _a(residue(i, d) + 2) * _a(1) ** (1 - c)
    images["y"] = _a(1) ** n1 * alpha ** (mod_inverse(m1, n1) - n1)
    images["z"] = _a(2) ** m1 * alpha ** (mod_inverse(n1, m1) - m1)
    return GroupHom("phi", jbraid(n, m), core_params(n, m), images)


def psi(n: int, m: int) -> GroupHom:
    """``G(d+2, d+2)`` to the full J-braid group."""
    dec = decompose(n, m)
    d, n1, m1 = dec.d, dec.n_prime, dec.m_prime
    delta = chain("x", 1, n) * gen("y")
    images = {
        "a1": chain("x", d + 1, n) * gen("y") * gen("z") ** (n1 - mod_inverse(m1, n1)) * delta ** (mod_inverse(n1, m1) - 1),
        "a2": gen("z") ** mod_inverse(m1, n1) * delta ** (m1 - mod_inverse(n1, m1)),
    }
    for i in range(3, d + 3):
        images[f"a{i}"] = gen(f"x{i - 2}")
    return GroupHom("psi", circular(d + 2, d + 2), jbraid(n, m), images)


def phi_star(n: int, m: int) -> GroupHom:
    """``G(d+1, (d+1) m')`` to the core quotient of ``G(d+2, d+2)``."""
    dec = decompose(n, m)
    d = dec.d
    x, y = bezout_pair(dec.n_prime, dec.m_prime)
    images = {"b1": _loop(d) ** x * _a(2) ** y * _loop(d, 4).inverse()}
    for i in range(2, d + 1):
        images[f"b{i}"] = _a(i + 2)
    images[f"b{d + 1}"] = _a(1)
    params = reduced_params(n, m)
    return GroupHom("phiStar", circular(params.n, params.m, "b"), core_quotient(n, m), images)


def psi_star(n: int, m: int) -> GroupHom:
    """The core quotient of ``G(d+2, d+2)`` to ``G(d+1, (d+1) m')``."""
    dec = decompose(n, m)
    d, m1 = dec.d, dec.m_prime
    k = mod_inverse(dec.n_prime, m1)
    full = chain("b", 1, d + 1)
    images = {
        "a1": _b(d + 1),
        "a2": full ** (m1 - k),
        "a3": full ** k * chain("b", 2, d + 1).inverse(),
    }
    for i in range(4, d + 3):
        images[f"a{i}"] = _b(i - 2)
    return GroupHom("psiStar", core_quotient(n, m), reduced_params(n, m), images)


def torus_link_map(n: int, m: int) -> GroupHom:
    """Torus link presentation to ``G(n, m)``: ``x -> a_1 ... a_m``, ``y -> a_1 ... a_n``, ``m_i -> a_i``."""
    dec = decompose(n, m)
    window = Word((f"a{j % n + 1}", 1) for j in range(m))
    images = {"x": window, "y": chain("a", 1, n)}
    for i in range(1, dec.d + 1):
        images[f"m{i}"] = _a(i)
    return GroupHom("torus_link_map", torus_link(n, m), CircularParams(n, m), images)


_BUILDERS = {"phi": phi, "psi": psi, "phiStar": phi_star, "psiStar": psi_star, "torus_link_map": torus_link_map}


def build_map(name: str, n: int, m: int) -> GroupHom:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise ValueError(f"unknown map {name!r}; expected one of {MAP_NAMES}") from None
    return builder(n, m)


def apply(h: GroupHom, w: Word) -> Word:
    return h.apply(w)


# verification


def _engine(target: Target):
    if not isinstance(target, CircularParams):
        raise UndecidableTarget("equality in a presented target is not decidable here; check a composite instead")
    return circular_group(target)


def _witness(lhs: Word, rhs: Word) -> str:
    return f"{lhs} != {rhs}"


def verify_relators(h: GroupHom) -> Report:
    """Each source relation must hold between the images, decided by normal forms."""
    group = _engine(h.target)
    report = Report(h.name, 0, 0)
    for k, rel in enumerate(h.source.relations, start=1):
        lhs, rhs = h.apply(rel.lhs), h.apply(rel.rhs)
        report.add(f"relation {k}: {rel}", group.equal(lhs, rhs), _witness(lhs, rhs))
    return report


def _trivial_items(report: Report, label: str, words: Iterable[tuple[str, Word]], target: CircularParams) -> None:
    group = circular_group(target)
    for name, w in words:
        report.add(f"{label} {name}", group.is_trivial(w), _witness(w, IDENTITY))


def round_trip(n: int, m: int, which: str = "phiPsi", first: GroupHom | None = None, second: GroupHom | None = None) -> Report:
    """Generator-wise round trip through the Garside side, plus relator pushes.

    ``first`` and ``second`` replace the default maps (``psi`` then ``phi``, or
    ``phiStar`` then ``psiStar``), which lets altered image tables be checked.
    """
    report = Report(which, n, m)
    if which == "phiPsi":
        f, g = first or psi(n, m), second or phi(n, m)
        group = circular_group(g.target)
        for a in f.source.generators:
            image = g.apply(f.apply(gen(a)))
            report.add(f"phi(psi({a})) = {a}", group.equal(image, gen(a)), _witness(image, gen(a)))
        _trivial_items(report, "phi(psi(relator))", ((str(r), g.apply(f.apply(r.relator))) for r in f.source.relations), g.target)
        _trivial_items(report, "phi(relator)", ((str(r), g.apply(r.relator)) for r in g.source.relations), g.target)
    elif which == "psiStarPhiStar":
        f, g = first or phi_star(n, m), second or psi_star(n, m)
        group = circular_group(g.target)
        for b in f.source.generators:
            image = g.apply(f.apply(gen(b)))
            report.add(f"psiStar(phiStar({b})) = {b}", group.equal(image, gen(b)), _witness(image, gen(b)))
        _trivial_items(report, "psiStar(phiStar(relator))", ((str(r), g.apply(f.apply(r.relator))) for r in f.source.relations), g.target)
        _trivial_items(report, "psiStar(relator)", ((str(r), g.apply(r.relator)) for r in g.source.relations), g.target)
    else:
        raise ValueError(f"unknown round trip {which!r}")
    return report


@dataclass
class SpecialElements:
    w: Word
    W: Word
    Delta: Word
    delta: Word


def special_words(n: int, m: int) -> SpecialElements:
    dec = decompose(n, m)
    delta = chain("x", 1, n) * gen("y")
    w = gen("z") * delta ** dec.q * chain("x", 1, dec.r)
    W = w * gen("y")
    Delta = w ** (dec.n_prime - dec.r_prime) * W ** dec.r_prime
    return SpecialElements(w, W, Delta, delta)


def special_elements(n: int, m: int) -> tuple[SpecialElements, Report]:
    """Build ``w``, ``W``, ``Delta`` and check their identities through ``phi`` and ``psiStar``."""
    dec = decompose(n, m)
    q, r = dec.q, dec.r
    sp = special_words(n, m)
    h = phi(n, m)
    group = circular_group(h.target)
    report = Report("special_elements", n, m)
    x = lambda i: gen(f"x{i}")  # noqa: E731
    y, z = gen("y"), gen("z")

    def same(name: str, lhs: Word, rhs: Word) -> None:
        il, ir = h.apply(lhs), h.apply(rhs)
        report.add(name, group.equal(il, ir), _witness(il, ir))

    for i in range(1, n - r + 1):
        same(f"(a) x{i} w = w x{i + r}", x(i) * sp.w, sp.w * x(i + r))
    same("(a) y w = w y", y * sp.w, sp.w * y)
    if r == 0:
        report.items.append(ReportItem("(b) x_(n-r+k) W = W x_k", "vacuous"))
    else:
        for k in range(1, r + 1):
            same(f"(b) x{n - r + k} W = W x{k}", x(n - r + k) * sp.W, sp.W * x(k))
        same("(b) y W = W y", y * sp.W, sp.W * y)
    same("(c) Delta = delta^m' z^n'", sp.Delta, sp.delta ** dec.m_prime * z ** dec.n_prime)
    image = h.apply(sp.Delta)
    report.add("(d) phi(Delta) is central", group.is_central(image), str(image))
    alpha = chain("a", 1, dec.d + 2)
    report.add("(e) phi(Delta) = a1...a(d+2)", group.equal(image, alpha), _witness(image, alpha))

    # (f): ((a3 ... a(d+2) a1)^x a2^y)^m' = a1 ... a(d+2) in the core quotient, seen through psiStar
    hs = psi_star(n, m)
    reduced = circular_group(hs.target)
    bx, by = bezout_pair(dec.n_prime, dec.m_prime)
    root = (_loop(dec.d) ** bx * _a(2) ** by) ** dec.m_prime
    il, ir = hs.apply(root), hs.apply(alpha)
    report.add("(f) ((a3...a1)^x a2^y)^m' = a1...a(d+2) under psiStar", reduced.equal(il, ir), _witness(il, ir))
    report.add("(f) psiStar(a1...a(d+2)) is central", reduced.is_central(ir), str(ir))

    # (g): generation identities
    def X(i: int) -> Word:
        i = residue(i, n)
        return chain("x", 1, i - 1) * chain("x", i + 1, n) * y

    for i in range(1, n):
        head = chain("x", 1, i)
        rhs = head.inverse() * x(1) * X(1) * X(i + 1).inverse() * head
        same(f"(g) x{i + 1} from X1, X{i + 1}", x(i + 1), rhs)
    zq = z * sp.delta ** q
    for i in range(1, n - r + 1):
        same(f"(g) X{i} z delta^q = z delta^q X{i + r}", X(i) * zq, zq * X(i + r))
    zq1 = zq * sp.delta
    for i in range(n - r + 1, n + 1):
        same(f"(g) X{i} z delta^(q+1) = z delta^(q+1) X{i + r - n}", X(i) * zq1, zq1 * X(i + r - n))

    # images of Delta in the quotient flavors where a circular group is available
    plain = circular_group(CircularParams(n, m))
    plain_delta = chain("a", 1, n) ** dec.m_prime
    report.add("plain flavor: (a1...an)^m' central in G(n,m)", plain.is_central(plain_delta), str(plain_delta))
    return sp, report


def necklace_pipeline_check(n: int, m: int) -> Report:
    """Mechanical run from the necklace braid closure to the window-pair J-braid presentation."""
    report = Report("necklace_pipeline", n, m)
    beta = build(NecklaceSpec("Necklace", n=n, m=m))
    p0 = from_braid(beta)
    report.add("closure matches closed-form braid relations", relator_match(p0, necklace_braid_form(n, m)))
    p1 = transform(p0, half_twist(n, n + 2))
    report.add("half twist matches twisted relations", relator_match(p1, necklace_twisted_form(n, m)))
    relabel = {f"x{n + 1}": "y", f"x{n + 2}": "z"}
    p2 = rename(simplify(p1), relabel)
    report.add("relabelled pipeline matches adjacent window pairs", relator_match(p2, necklace_pairs(n, m, "chain")))

    h = phi(n, m)
    for label, pres in (("pipeline", p2), ("all window pairs", necklace_pairs(n, m, "all")), ("J-braid", jbraid(n, m))):
        group = circular_group(h.target)
        bad = [r for r in pres.relators() if not group.is_trivial(h.apply(r))]
        report.add(f"{label} relators vanish under phi", not bad, str(bad[0]) if bad else "")

    for flavor in ("internal", "external", "plain"):
        strands = necklace_strands(flavor, n)
        reduced = remove_strands(beta, strands)
        killed = quotient_generators(p0, {f"x{s}" for s in strands})
        kept = [g for g in p0.generators if int(g[1:]) not in strands]
        renumber = {g: f"x{i}" for i, g in enumerate(kept, start=1)}
        closure = from_braid(reduced)
        report.add(
            f"{flavor}: killing meridians matches strand removal",
            relator_match(simplify(killed), simplify(closure), renumber),
        )
        twisted = simplify(transform(closure, half_twist(n, reduced.strands)))
        names = {f"x{i}": f"x{i}" for i in range(1, n + 1)}
        survivors = [g for g in ("y", "z") if g not in FLAVOR_KILLS[flavor]]
        names.update({f"x{n + 1 + i}": g for i, g in enumerate(survivors)})
        flavored = simplify(quotient_generators(p2, FLAVOR_KILLS[flavor]))
        report.add(f"{flavor}: J-braid quotient matches the reduced closure", relator_match(twisted, flavored, names))
    return report


def core_circular_check(n: int, m: int) -> Report:
    """``psiStar`` is a homomorphism, ``phiStar`` composes back, and the core quotient arises from ``phi(z)``."""
    report = Report("core_circular", n, m)
    hs = psi_star(n, m)
    report.extend(verify_relators(hs), "psiStar ")
    report.extend(round_trip(n, m, "psiStarPhiStar"))

    dec = decompose(n, m)
    h = phi(n, m)
    core = circular(dec.d + 2, dec.d + 2)
    killer = h.images["z"]
    route = FinitePresentation(core.generators, core.relations + (Relation(killer),), {"family": "core_quotient_route"})
    builtin = core_quotient(n, m)
    report.add("quotient of G(d+2,d+2) by phi(z) matches the core quotient", relator_match(route, builtin))
    reduced = circular_group(hs.target)
    bad = [r for r in route.relators() if not reduced.is_trivial(hs.apply(r))]
    report.add("quotient route relators vanish under psiStar", not bad, str(bad[0]) if bad else "")
    return report


def torus_link_map_evidence(n: int, m: int, order: str = "literal") -> Report:
    """Evidence only: do the torus link relations hold under ``x -> a1...am, y -> a1...an, m_i -> a_i``?

    ``order="reversed"`` replaces the relation ``m_1 ... m_d = x^s y^r`` by
    ``m_1 ... m_d = y^r x^s`` and is reported separately from the literal statement.
    """
    h = torus_link_map(n, m)
    if order == "reversed":
        rels = list(h.source.relations)
        rels[1] = Relation(rels[1].lhs, _swap_factors(rels[1].rhs))
        meta = dict(h.source.meta, order="reversed")
        h = GroupHom(h.name, FinitePresentation(h.source.generators, tuple(rels), meta), h.target, h.images)
    elif order != "literal":
        raise ValueError("order must be 'literal' or 'reversed'")
    report = Report("torus_link_map" if order == "literal" else "torus_link_map_reversed", n, m)
    report.extend(verify_relators(h), "evidence ")
    return report


def _swap_factors(w: Word) -> Word:
    """``x^s y^r`` becomes ``y^r x^s``."""
    return Word((name, w.exponent_sum(name)) for name in ("y", "x"))


CHECKS = {
    "phi": lambda n, m: _named(verify_relators(phi(n, m)), "phi", n, m),
    "psi": lambda n, m: round_trip(n, m, "phiPsi"),
    "roundtrip": lambda n, m: round_trip(n, m, "phiPsi"),
    "special": lambda n, m: special_elements(n, m)[1],
    "pipeline": necklace_pipeline_check,
    "core": core_circular_check,
    "torus_link_map": torus_link_map_evidence,
    "torus_link_map_reversed": lambda n, m: torus_link_map_evidence(n, m, "reversed"),
}


def _named(report: Report, check: str, n: int, m: int) -> Report:
    report.check, report.n, report.m = check, n, m
    return report

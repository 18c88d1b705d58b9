from __future__ import annotations

import json
import random
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import abelian_oracle, perm_apply, perm_group_order, smith_invariants
from strategies import braids, words
from torusnecklace.braids import BraidWord, remove_strands, underlying_permutation
from torusnecklace.necklaces import half_twist, key_chain as key_chain_braid, necklace as necklace_braid
from torusnecklace.presentations import (
    BUILTINS,
    FLAVORS,
    FinitePresentation,
    LimitExceeded,
    PresentationError,
    Relation,
    abelianization,
    builtin,
    circular,
    core_quotient,
    coset_enumeration,
    from_braid,
    jbraid,
    jreflection,
    key_chain,
    necklace,
    necklace_braid_form,
    necklace_pairs,
    necklace_twisted_form,
    quotient_generators,
    relation_matrix,
    relator_match,
    rename,
    simplify,
    torus_knot,
    torus_link,
    torus_link_exponents,
    transform,
)
from torusnecklace.words import IDENTITY, Word, cyclic_equivalent

W = Word.parse


def rel(lhs, rhs="1"):
    return Relation(W(lhs), W(rhs))


def test_from_braid_examples():
    hopf = simplify(from_braid(BraidWord.parse(2, "s1^2")))
    assert len(hopf.relations) == 1
    assert cyclic_equivalent(hopf.relations[0].relator, W("x1.x2.x1^-1.x2^-1"), True)
    free = simplify(from_braid(BraidWord(2)))
    assert free.relations == () and free.generators == ("x1", "x2")
    trefoil = simplify(from_braid(BraidWord.parse(2, "s1^3")))
    assert len(trefoil.relations) == 1
    assert cyclic_equivalent(trefoil.relations[0].relator, W("x1.x2.x1.x2^-1.x1^-1.x2^-1"), True)


def test_from_braid_meta():
    p = from_braid(BraidWord.parse(3, "s1.s2"))
    assert p.meta == {"family": "braid", "strands": 3, "braid": "s1.s2"}


def test_transform_examples():
    p = from_braid(necklace_braid(2, 3))
    assert transform(p, BraidWord(4)).relations == p.relations
    twisted = transform(p, half_twist(2, 4))
    assert relator_match(twisted, necklace_twisted_form(2, 3))
    assert relator_match(p, necklace_braid_form(2, 3))


def test_transform_rejects_missing_generators():
    with pytest.raises(PresentationError):
        transform(circular(2, 3), BraidWord.parse(2, "s1"))


def test_transform_preserves_abelianization():
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randint(2, 5)
        beta = BraidWord.from_indices(n, [rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(rng.randint(0, 10))])
        sigma = BraidWord.from_indices(n, [rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(rng.randint(0, 6))])
        p = from_braid(beta)
        assert abelianization(transform(p, sigma)) == abelianization(p)


def test_quotient_examples():
    full = jbraid(2, 3)
    assert quotient_generators(full, set()) == full
    internal = quotient_generators(full, {"z"})
    assert internal.generators == ("x1", "x2", "y")
    plain = quotient_generators(full, {"y", "z"})
    assert abelianization(plain) == (1, [])
    with pytest.raises(PresentationError):
        quotient_generators(full, {"w"})


def test_quotient_drops_abelian_column():
    rng = random.Random(3)
    for n in range(1, 5):
        for m in range(1, 5):
            p = jbraid(n, m)
            g = rng.choice(p.generators)
            q = quotient_generators(p, {g})
            index = p.generators.index(g)
            rows = [r[:index] + r[index + 1:] for r in relation_matrix(p)]
            assert abelianization(q) == smith_invariants(rows, len(p.generators) - 1)


def test_builtin_examples():
    c = circular(2, 3)
    assert c.generators == ("a1", "a2") and c.relations == (rel("a1.a2.a1", "a2.a1.a2"),)
    j = jbraid(2, 3)
    assert j.generators == ("x1", "x2", "y", "z")
    assert j.relations == (
        rel("x1.x2.y.z", "z.x1.x2.y"),
        rel("x2.y.z.x1.x2", "x1.x2.y.z.x1"),
        rel("y.z.x1.x2.y.x1", "x2.y.z.x1.x2.y"),
    )
    cq = core_quotient(2, 3)
    assert cq.generators == ("a1", "a2", "a3")
    assert cq.relations[-1] == rel("a2^3", "a1.a2.a3")
    assert len(cq.relations) == 3


def test_builtin_dispatch_and_errors():
    assert builtin("circular", n=2, m=3) == circular(2, 3)
    with pytest.raises(PresentationError):
        builtin("nope")
    with pytest.raises(PresentationError):
        jbraid(1, 3, "plain")
    with pytest.warns(UserWarning):
        jbraid(1, 3, "plain", force=True)
    with pytest.raises(PresentationError):
        builtin("necklace_two_cores", n=2, m=4)


def test_torus_link_exponents():
    for n in range(1, 9):
        for m in range(1, 9):
            d = gcd(n, m)
            r, s = torus_link_exponents(n, m)
            assert (n // d) * r + (m // d) * s == 1
    p = torus_link(2, 4)
    assert p.generators == ("x", "y", "m1", "m2")


def test_presentation_json_document():
    doc = circular(2, 3).to_json()
    assert list(doc) == ["generators", "relations", "meta"]
    assert doc == {
        "generators": ["a1", "a2"],
        "relations": [{"lhs": "a1.a2.a1", "rhs": "a2.a1.a2"}],
        "meta": {"family": "circular", "n": 2, "m": 3},
    }
    for name, params in [("jbraid", dict(n=3, m=4, flavor="external")), ("toruslink", dict(n=4, m=6))]:
        p = builtin(name, **params)
        assert FinitePresentation.from_json(p.dumps()) == p
        assert p.dumps() == builtin(name, **params).dumps()


def test_presentation_rejects_unknown_generator():
    with pytest.raises(PresentationError):
        FinitePresentation(("a1",), (rel("a1.a2"),))
    with pytest.raises(PresentationError):
        FinitePresentation.from_json(json.dumps({"relations": []}))


def test_simplify_examples():
    p = FinitePresentation(("x1", "x2"), (rel("x1.x1^-1"), rel("x1.x2.x1"), rel("x2.x1.x1.x2^-1.x2")))
    s = simplify(p)
    assert len(s.relations) == 1
    assert simplify(s) == s


@given(st.lists(words(("x1", "x2", "x3"), 6), max_size=6))
def test_simplify_idempotent(rels):
    p = FinitePresentation(("x1", "x2", "x3"), tuple(Relation(w) for w in rels))
    once = simplify(p)
    assert simplify(once) == once
    assert abelianization(once) == abelianization(p)


def test_relator_match_examples():
    p = circular(3, 4)
    assert relator_match(p, p)
    assert not relator_match(circular(2, 3), circular(3, 2))
    renamed = rename(p, {"a1": "b1", "a2": "b2", "a3": "b3"})
    assert relator_match(p, renamed, {"a1": "b1", "a2": "b2", "a3": "b3"})
    with pytest.raises(PresentationError):
        relator_match(p, p, {"a1": "a2"})


def test_relator_match_pipeline_instance():
    p = simplify(transform(from_braid(necklace_braid(2, 3)), half_twist(2, 4)))
    target = necklace_pairs(2, 3, "chain")
    assert relator_match(p, target, {"x3": "y", "x4": "z"})


@pytest.mark.parametrize(
    "p, expected",
    [
        (circular(4, 6), (2, [])),
        (from_braid(key_chain_braid(2)), (3, [])),
        (from_braid(necklace_braid(2, 3)), (3, [])),
        (FinitePresentation(("a",), (rel("a"),)), (0, [])),
        (FinitePresentation(("a", "b"), (rel("a^4"), rel("b^6"))), (0, [2, 12])),
        (FinitePresentation(("a", "b"), ()), (2, [])),
    ],
)
def test_abelianization_examples(p, expected):
    assert abelianization(p) == expected
    assert abelian_oracle(p) == expected


def test_abelianization_of_circular_groups():
    for n in range(1, 9):
        for m in range(1, 9):
            assert abelianization(circular(n, m)) == (gcd(n, m), [])


@given(braids(min_strands=1, max_strands=6, max_size=30))
def test_meridian_abelianization(beta):
    cycles = underlying_permutation(beta)[1]
    assert abelianization(from_braid(beta)) == (len(cycles), [])


def test_builtins_agree_with_smith_oracle():
    for n in range(1, 5):
        for m in range(1, 5):
            for flavor in FLAVORS:
                if flavor == "plain" and min(n, m) < 2:
                    continue
                for p in (jbraid(n, m, flavor), necklace(n, m, flavor)):
                    assert abelianization(p) == abelian_oracle(p)
            for p in (torus_link(n, m), core_quotient(n, m), necklace_pairs(n, m)):
                assert abelianization(p) == abelian_oracle(p)


def test_torus_knot_shadow():
    for n in range(2, 6):
        for m in range(2, 6):
            if gcd(n, m) != 1:
                continue
            plain = simplify(from_braid(remove_strands(necklace_braid(n, m), {n + 1, n + 2})))
            assert abelianization(plain) == abelianization(torus_knot(n, m)) == (1, [])


def test_coset_enumeration_small_groups():
    w223 = jreflection(2, 1, 2, 1, 3)
    w222 = jreflection(2, 1, 2, 1, 2)
    assert coset_enumeration(w223, 10_000) == 6
    assert coset_enumeration(w222, 10_000) == 4
    assert coset_enumeration(FinitePresentation(("a",), (rel("a"),))) == 1
    assert coset_enumeration(FinitePresentation(("a", "b"), (rel("a^3"), rel("b^2"), rel("a.b.a.b")))) == 6


def test_coset_orders_certified_by_permutation_models():
    # S3 acting on {0,1,2}: x1, x2 as adjacent transpositions, y and z trivial
    w223 = jreflection(2, 1, 2, 1, 3)
    perms = {"x1": (1, 0, 2), "x2": (0, 2, 1), "y": (0, 1, 2), "z": (0, 1, 2)}
    for r in w223.relations:
        assert perm_apply(perms, r.lhs, 3) == perm_apply(perms, r.rhs, 3)
    assert perm_group_order([perms["x1"], perms["x2"]]) == 6
    # Klein four group acting regularly on 4 points
    w222 = jreflection(2, 1, 2, 1, 2)
    perms = {"x1": (1, 0, 3, 2), "x2": (2, 3, 0, 1), "y": (0, 1, 2, 3), "z": (0, 1, 2, 3)}
    for r in w222.relations:
        assert perm_apply(perms, r.lhs, 4) == perm_apply(perms, r.rhs, 4)
    assert perm_group_order([perms["x1"], perms["x2"]]) == 4


def test_coset_limit():
    with pytest.raises(LimitExceeded):
        coset_enumeration(circular(2, 3), 200)
    with pytest.raises(LimitExceeded):
        coset_enumeration(FinitePresentation(("a", "b"), ()), 50)


def test_all_builtins_construct():
    for name in BUILTINS:
        params = {"keychain": dict(k=3), "jreflection": dict(k=2, b=2, n=2, c=3, m=3)}.get(name, dict(n=2, m=3))
        p = builtin(name, **params)
        assert p.generators
        assert p.meta["family"] == name

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import braids, letters
from torusnecklace.braids import (
    BraidWord,
    artin_act,
    artin_images,
    crossing_images,
    remove_strands,
    underlying_permutation,
)
from torusnecklace.necklaces import necklace
from torusnecklace.words import Word, chain, gen, substitute

W = Word.parse


def oracle_images(beta: BraidWord) -> dict[str, Word]:
    """Compose the automorphism table right to left: T_(s beta)(x) = T_beta(s(x))."""
    table = {f"x{i}": gen(f"x{i}") for i in range(1, beta.strands + 1)}
    for i, sign in reversed(beta.crossings):
        step = {**{k: gen(k) for k in table}, **crossing_images(i, sign)}
        table = {k: substitute(step[k], table) for k in table}
    return table


def transposition_permutation(beta: BraidWord) -> list[int]:
    """Start position -> end position by composing transpositions as functions."""
    perm = list(range(1, beta.strands + 1))
    for i, _ in beta.crossings:
        swap = {i: i + 1, i + 1: i}
        perm = [swap.get(p, p) for p in perm]
    return perm


def braid_words(beta):
    return letters(tuple(f"x{i}" for i in range(1, beta.strands + 1)), 8).map(Word)


@pytest.mark.parametrize(
    "strands, text, x, expected",
    [
        (2, "s1", "x1", "x1.x2.x1^-1"),
        (2, "s1", "x2", "x1"),
        (2, "s1^-1", "x1", "x2"),
        (3, "s1", "x3", "x3"),
    ],
)
def test_artin_examples(strands, text, x, expected):
    assert artin_act(BraidWord.parse(strands, text), W(x)) == W(expected)


def test_artin_rejects_foreign_generator():
    with pytest.raises(ValueError):
        artin_act(BraidWord.parse(2, "s1"), W("x3"))
    with pytest.raises(ValueError):
        artin_act(BraidWord.parse(2, "s1"), W("y"))


def test_braid_word_validation_and_text():
    with pytest.raises(ValueError):
        BraidWord(3, ((3, 1),))
    beta = BraidWord.parse(4, "s3.s2.s1^2.s2^-1")
    assert str(beta) == "s3.s2.s1.s1.s2^-1"
    assert BraidWord.parse(4, str(beta)) == beta


@given(braids())
def test_artin_matches_composed_table(beta):
    assert artin_images(beta) == oracle_images(beta)


@given(braids(max_size=20))
def test_full_product_is_fixed(beta):
    full = chain("x", 1, beta.strands)
    assert artin_act(beta, full) == full


@given(st.data())
def test_action_by_automorphisms(data):
    beta = data.draw(braids())
    w = data.draw(braid_words(beta))
    assert artin_act(beta * beta.inverse(), w) == w
    assert artin_act(beta.inverse() * beta, w) == w


@given(st.data())
def test_action_composes(data):
    beta = data.draw(braids())
    gamma = data.draw(braids(min_strands=beta.strands, max_strands=beta.strands))
    w = data.draw(braid_words(beta))
    assert artin_act(beta * gamma, w) == artin_act(gamma, artin_act(beta, w))


@given(st.data())
def test_braid_relations_respected(data):
    n = data.draw(st.integers(3, 5))
    w = data.draw(letters(tuple(f"x{i}" for i in range(1, n + 1)), 8).map(Word))
    i = data.draw(st.integers(1, n - 2))
    lhs = BraidWord.from_indices(n, [i, i + 1, i])
    rhs = BraidWord.from_indices(n, [i + 1, i, i + 1])
    assert artin_act(lhs, w) == artin_act(rhs, w)
    if n >= 4:
        j = data.draw(st.integers(1, n - 1).filter(lambda j: abs(j - i) >= 2))
        assert artin_act(BraidWord.from_indices(n, [i, j]), w) == artin_act(BraidWord.from_indices(n, [j, i]), w)


def test_permutation_examples():
    perm, cycles = underlying_permutation(BraidWord(3))
    assert perm == [1, 2, 3] and len(cycles) == 3
    _, cycles = underlying_permutation(necklace(2, 3))
    assert sorted(sorted(c) for c in cycles) == [[1, 2], [3], [4]]
    perm, cycles = underlying_permutation(BraidWord.parse(2, "s1^4"))
    assert perm == [1, 2] and len(cycles) == 2


@given(braids(max_size=20))
def test_permutation_matches_transpositions(beta):
    assert underlying_permutation(beta)[0] == transposition_permutation(beta)


@given(st.data())
def test_permutation_is_homomorphism(data):
    beta = data.draw(braids())
    gamma = data.draw(braids(min_strands=beta.strands, max_strands=beta.strands))
    p, q = underlying_permutation(beta)[0], underlying_permutation(gamma)[0]
    pq = underlying_permutation(beta * gamma)[0]
    assert pq == [q[p[i] - 1] for i in range(beta.strands)]


def test_remove_strands_examples():
    assert remove_strands(necklace(2, 3), {3, 4}) == BraidWord.parse(2, "s1^3")
    assert remove_strands(BraidWord.parse(2, "s1^2"), {2}) == BraidWord(1)
    beta = BraidWord.parse(3, "s1.s2^-1")
    assert remove_strands(beta, set()) == beta


def test_remove_strands_rejects_unstable_set():
    with pytest.raises(ValueError):
        remove_strands(BraidWord.parse(2, "s1"), {1})
    with pytest.raises(ValueError):
        remove_strands(BraidWord.parse(2, "s1^2"), {3})


@given(braids(min_strands=3, max_strands=6, max_size=16))
def test_remove_strands_composes(beta):
    perm, cycles = underlying_permutation(beta)
    if len(cycles) < 3:
        return
    first, second = set(cycles[0]), set(cycles[-1])
    once = remove_strands(beta, first | second)
    # positions of the second set among the strands that survive the first removal
    survivors = [p for p in range(1, beta.strands + 1) if p not in first]
    relabelled = {survivors.index(p) + 1 for p in second}
    twice = remove_strands(remove_strands(beta, first), relabelled)
    assert once == twice
    assert len(underlying_permutation(once)[1]) == len(cycles) - 2

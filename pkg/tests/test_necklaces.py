from __future__ import annotations

import pytest

from torusnecklace.braids import BraidWord, artin_act, artin_images
from torusnecklace.necklaces import NecklaceSpec, build, closed_form_action, half_twist, key_chain, necklace
from torusnecklace.words import Word, chain, gen, substitute

W = Word.parse


def specs(max_n=5, max_m=13):
    for n in range(1, max_n + 1):
        for t in range(1, n + 1):
            for s in range(1, t + 1):
                yield NecklaceSpec("U", s=s, t=t, ambient=n + 1)
                yield NecklaceSpec("D", s=s, t=t, ambient=n + 1)
        yield NecklaceSpec("V", n=n)
        yield NecklaceSpec("Beta", n=n)
        yield NecklaceSpec("HalfTwist", n=n)
        yield NecklaceSpec("HalfTwist", n=n, ambient=n + 2)
        for power in range(0, 2 * n + 3):
            yield NecklaceSpec("BetaPow", n=n, power=power)
        for m in range(1, max_m + 1):
            yield NecklaceSpec("Necklace", n=n, m=m)


def test_build_examples():
    assert str(necklace(2, 3)) == "s3.s2.s1.s1.s2.s3." + ".".join(["s1.s2.s2"] * 3)
    assert necklace(2, 3).strands == 4
    assert key_chain(2) == BraidWord.parse(3, "s2.s1.s1.s2")
    assert half_twist(1) == BraidWord(1)
    assert key_chain(0) == BraidWord(1)


def test_build_rejects_bad_specs():
    with pytest.raises(ValueError):
        build(NecklaceSpec("U", s=3, t=2))
    with pytest.raises(ValueError):
        build(NecklaceSpec("Necklace", n=0, m=2))
    with pytest.raises(ValueError):
        build(NecklaceSpec("HalfTwist", n=4, ambient=3))


def test_necklace_is_v_times_beta_power():
    for n in range(1, 5):
        for m in range(1, 6):
            v = build(NecklaceSpec("V", n=n))
            beta = build(NecklaceSpec("Beta", n=n)).embed(n + 2)
            assert necklace(n, m) == v * beta ** m


def test_closed_form_examples():
    u = closed_form_action(NecklaceSpec("U", s=1, t=2, ambient=4))
    assert u == {"x1": W("x1.x2.x3.x2^-1.x1^-1"), "x2": W("x1"), "x3": W("x2"), "x4": W("x4")}
    h = closed_form_action(NecklaceSpec("HalfTwist", n=3, ambient=5))
    assert h["x2"] == W("x1.x2.x1^-1") and h["x3"] == W("x1") and h["x4"] == W("x4")
    b = closed_form_action(NecklaceSpec("Necklace", n=2, m=3))
    delta = W("x1.x2.x3")
    assert b["x4"] == delta * W("x4") * delta.inverse()
    full = W("x1.x2.x3.x4")
    assert b["x2"] == full * W("x1") * full.inverse()


def test_closed_forms_equal_composed_action():
    count = 0
    for spec in specs():
        assert closed_form_action(spec) == artin_images(build(spec)), spec
        count += 1
    assert count == 200


def test_d_fixes_its_window_product():
    for t in range(1, 6):
        for s in range(1, t + 1):
            images = closed_form_action(NecklaceSpec("D", s=s, t=t))
            window = chain("x", s, t + 1)
            assert substitute(window, images) == window


def test_half_twist_reverses_tails():
    for n in range(1, 7):
        images = closed_form_action(NecklaceSpec("HalfTwist", n=n))
        for i in range(1, n + 1):
            assert substitute(chain("x", i, n), images) == chain("x", 1, n - i + 1)


def test_beta_power_branches():
    for n in range(1, 6):
        loop = chain("x", 1, n + 1)
        for r in range(1, n + 1):
            images = closed_form_action(NecklaceSpec("BetaPow", n=n, power=r))
            for i in range(1, r + 1):
                assert images[f"x{i}"] == loop * gen(f"x{n - r + i}") * loop.inverse()
            for i in range(r + 1, n + 1):
                assert images[f"x{i}"] == gen(f"x{i - r}")
        full_turn = closed_form_action(NecklaceSpec("BetaPow", n=n, power=n))
        for i in range(1, n + 1):
            assert full_turn[f"x{i}"] == loop * gen(f"x{i}") * loop.inverse()


def test_closed_form_negative_power_when_m_below_n():
    # q = 0 leaves a genuinely inverse power of the loop in the formula
    images = closed_form_action(NecklaceSpec("Necklace", n=3, m=1))
    assert images == artin_images(necklace(3, 1))
    assert any(exp < 0 for _, exp in images["x3"])
    assert artin_act(necklace(3, 1), W("x3")) == images["x3"]

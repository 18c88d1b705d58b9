"""Single-letter corruptions of homomorphism image tables."""

from __future__ import annotations

import random

from torusnecklace.isomaps import GroupHom, phi, psi_star, round_trip, verify_relators
from torusnecklace.words import Word


def corrupt(h: GroupHom, rng: random.Random) -> tuple[GroupHom, str]:
    """Replace one letter of one image by a different target generator, keeping its sign."""
    names = sorted(g for g, w in h.images.items() if w)
    target = h.target.generators()
    g = rng.choice(names)
    letters = h.images[g].letters()
    pos = rng.randrange(len(letters))
    old, sign = letters[pos]
    new = rng.choice([t for t in target if t != old])
    letters[pos] = (new, sign)
    images = dict(h.images)
    images[g] = Word(letters)
    return h.with_images(images), f"{h.name}[{g}] letter {pos + 1}: {old} -> {new}"


def detected(n: int, m: int, h: GroupHom) -> bool:
    """Whether the homomorphism and round-trip suites notice the altered table."""
    if h.name == "phi":
        reports = [verify_relators(h), round_trip(n, m, "phiPsi", second=h)]
    elif h.name == "psiStar":
        reports = [verify_relators(h), round_trip(n, m, "psiStarPhiStar", second=h)]
    else:
        raise ValueError(h.name)
    return any(not r.ok for r in reports)


def mutation_cases(count: int = 20, seed: int = 2024) -> list[tuple[int, int, GroupHom, str]]:
    rng = random.Random(seed)
    cases = []
    for _ in range(count):
        n, m = rng.randint(1, 5), rng.randint(1, 5)
        base = phi(n, m) if rng.random() < 0.5 else psi_star(n, m)
        mutant, label = corrupt(base, rng)
        cases.append((n, m, mutant, f"({n},{m}) {label}"))
    return cases

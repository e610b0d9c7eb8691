"""Seeded random rational inputs for property tests and batch sweeps.

All randomness flows through ``random.Random`` (the Mersenne Twister
MT19937), so a seed pins every report byte for byte across platforms.
Numerators are uniform in [-9, 9] and denominators in {1, 2, 3, 4}:
small enough to keep exact arithmetic fast and float conditioning good.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .groupoid import FiniteGroupoid, GroupoidFunction

NUMERATOR_RANGE = (-9, 9)
DENOMINATORS = (1, 2, 3, 4)


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(*NUMERATOR_RANGE), rng.choice(DENOMINATORS))


def random_coeffs(rng: random.Random, n: int) -> tuple:
    return tuple(random_rational(rng) for _ in range(n))


def random_groupoid_function(rng: random.Random,
                             groupoid: FiniteGroupoid) -> GroupoidFunction:
    return GroupoidFunction(groupoid, random_coeffs(rng, groupoid.num_arrows()))

"""Shared randomized-input helpers for the property tests.

All randomness is seeded per test via ``rng`` so failures replay exactly.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from grdcalc.picard import DivisorClass, PicSpace


@pytest.fixture
def rng(request) -> random.Random:
    return random.Random(f"grdcalc:{request.node.name}")


def rand_fraction(rng: random.Random, span: int = 40) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def rand_class(rng: random.Random, space: PicSpace, density: float = 0.6) -> DivisorClass:
    coeffs = {sym: rand_fraction(rng) for sym in space.basis() if rng.random() < density}
    return DivisorClass(space, coeffs)

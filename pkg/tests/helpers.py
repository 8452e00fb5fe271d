"""Shared test utilities: seeded random generators for frames and masses."""

import random
from fractions import Fraction

from hintkit import Frame, FrameSubset, MassFunction


def parameter_frame(size: int) -> Frame:
    return Frame(tuple(f"t{i + 1}" for i in range(size)), "parameter")


def random_subset(rng: random.Random, frame: Frame, allow_empty: bool = True) -> FrameSubset:
    low = 0 if allow_empty else 1
    return FrameSubset(frame, rng.randint(low, (1 << len(frame)) - 1))


def random_mass(rng: random.Random, frame: Frame, max_focal: int = 6) -> MassFunction:
    size = (1 << len(frame)) - 1
    count = rng.randint(1, min(max_focal, size))
    masks = rng.sample(range(1, size + 1), count)
    weights = [rng.randint(1, 20) for _ in masks]
    total = sum(weights)
    return MassFunction(
        frame,
        {FrameSubset(frame, m): Fraction(w, total) for m, w in zip(masks, weights)},
    )

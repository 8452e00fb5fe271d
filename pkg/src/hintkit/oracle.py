"""Brute-force joint enumeration, the ground truth for incremental combination.

Instead of conditioning once per observation and folding pairwise, the
oracle builds the full product of the source space with itself, n times:
every joint outcome whose parameter sets intersect across all n
observations survives, the product law is conditioned once on the
survivors, and the mass function falls out directly. Conditioning once
must agree exactly with conditioning step by step; `oracle_check` asserts
that equality.

This is a test instrument. The enumeration refuses to build more than
10**6 joint outcomes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .errors import EnumerationLimit, TotalConflict
from .hints import Hint, HintOutcome
from .mass import MassFunction
from .models import FunctionalModel, infer

ENUMERATION_GUARD = 10**6


def joint_hint(model: FunctionalModel, observations: Sequence[str]) -> Hint:
    """The hint over the full n-fold product of the source space.

    Joint outcomes are tuples of source labels; their focal set is the
    intersection of the per-observation parameter sets. Outcomes with zero
    product weight are excluded before the compatibility filter.
    """
    observations = list(observations)
    n = len(observations)
    for x in observations:
        model.observation_frame.index(x)
    if len(model.source_frame) ** n > ENUMERATION_GUARD:
        raise EnumerationLimit(
            f"{len(model.source_frame)}**{n} joint outcomes exceed the "
            f"{ENUMERATION_GUARD} guard"
        )
    # Parameter sets per (observation, source outcome), possibly empty.
    theta = model.parameter_frame
    consistent = {
        (x, o): theta.subset(
            t for t in theta.labels if model.observation_map[(t, o)] == x
        )
        for x in set(observations)
        for o in model.source_frame.labels
    }
    survivors: list[tuple[tuple[str, ...], Fraction, object]] = []
    retained = Fraction(0)
    for combo in product(model.source_frame.labels, repeat=n):
        weight = Fraction(1)
        for o in combo:
            weight *= model.source_distribution.probability(o)
        if weight == 0:
            continue
        focal = theta.full()
        for x, o in zip(observations, combo):
            focal = focal & consistent[(x, o)]
            if not focal:
                break
        if not focal:
            continue
        survivors.append((combo, weight, focal))
        retained += weight
    if retained == 0:
        raise TotalConflict("no joint source outcome is compatible with the observations")
    outcomes = tuple(
        HintOutcome(combo, weight / retained, focal) for combo, weight, focal in survivors
    )
    return Hint(theta, outcomes)


@dataclass(frozen=True)
class OracleReport:
    """Joint-enumeration mass versus incrementally combined mass."""

    passed: bool
    oracle_mass: MassFunction
    combined_mass: MassFunction


def oracle_check(model: FunctionalModel, observations: Sequence[str]) -> OracleReport:
    """Compare the joint-enumeration mass with the incremental one exactly."""
    combined = infer(model, observations)
    oracle = joint_hint(model, observations).to_mass()
    return OracleReport(oracle == combined, oracle, combined)

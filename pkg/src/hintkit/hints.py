"""Hints: weighted sample outcomes mapped to subsets of a parameter frame.

A hint is a finite probability space together with a multivalued mapping
into non-empty subsets of the parameter frame: each sample outcome, had it
occurred, would restrict the unknown parameter to its focal set. Sample
spaces are kept as explicit outcome lists rather than frames because
combined and joint hints live on product spaces that can be much larger
than any declared frame.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable

from .errors import ValidationError
from .frames import Distribution, Frame, FrameSubset
from .mass import MassFunction
from .rationals import exact


@dataclass(frozen=True)
class HintOutcome:
    """One sample outcome: its label, probability, and focal set."""

    label: Hashable
    weight: Fraction
    focal: FrameSubset


@dataclass(frozen=True)
class Hint:
    """A probability space over sample outcomes plus their focal sets.

    Outcomes with probability zero are dropped at construction; they can
    never influence a support or plausibility value.
    """

    frame: Frame
    outcomes: tuple[HintOutcome, ...]

    def __post_init__(self):
        kept = []
        for outcome in self.outcomes:
            weight = exact(outcome.weight)
            if weight < 0:
                raise ValidationError(f"outcome weight {weight} is negative")
            if weight == 0:
                continue
            if not isinstance(outcome.focal, FrameSubset) or outcome.focal.frame != self.frame:
                raise ValidationError("focal set is not a subset of the hint's frame")
            if not outcome.focal:
                raise ValidationError(f"outcome {outcome.label!r} maps to the empty set")
            kept.append(HintOutcome(outcome.label, weight, outcome.focal))
        if not kept:
            raise ValidationError("a hint needs at least one outcome of positive probability")
        labels = [o.label for o in kept]
        if len(set(labels)) != len(labels):
            raise ValidationError("sample outcome labels must be distinct")
        if sum(o.weight for o in kept) != 1:
            raise ValidationError("outcome probabilities must sum to exactly 1")
        object.__setattr__(self, "outcomes", tuple(kept))

    def is_precise(self) -> bool:
        """Every outcome pins down a single parameter value."""
        return all(len(o.focal) == 1 for o in self.outcomes)

    def support(self, hypothesis: FrameSubset) -> Fraction:
        """Probability of the outcomes whose focal set lies inside the hypothesis."""
        if hypothesis.frame != self.frame:
            raise ValidationError("hypothesis is over a different frame")
        return sum(
            (o.weight for o in self.outcomes if o.focal.issubset(hypothesis)), Fraction(0)
        )

    def plausibility(self, hypothesis: FrameSubset) -> Fraction:
        """Probability of the outcomes whose focal set meets the hypothesis."""
        if hypothesis.frame != self.frame:
            raise ValidationError("hypothesis is over a different frame")
        return sum(
            (o.weight for o in self.outcomes if o.focal.intersects(hypothesis)), Fraction(0)
        )

    def to_mass(self) -> MassFunction:
        """Merge outcomes sharing a focal set into a mass function."""
        merged: dict[FrameSubset, Fraction] = {}
        for outcome in self.outcomes:
            merged[outcome.focal] = merged.get(outcome.focal, Fraction(0)) + outcome.weight
        return MassFunction(self.frame, merged)


def prior_hint(prior: Distribution) -> Hint:
    """View a prior distribution over the parameter frame as a precise hint.

    Each parameter value is its own sample outcome and maps to itself, so
    the hint's support function equals the prior on singletons.
    """
    if prior.frame.role != "parameter":
        raise ValidationError("a prior must be a distribution over a parameter frame")
    outcomes = tuple(
        HintOutcome(label, weight, prior.frame.singleton(label))
        for label, weight in prior.items()
    )
    return Hint(prior.frame, outcomes)

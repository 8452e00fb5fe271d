"""Dempster's rule of combination.

Two independent hints combine by intersecting their focal sets over the
product of their sample spaces, discarding pairs with empty intersection,
and renormalizing. On mass functions the same rule reads

    m(C)  proportional to  sum of m1(A) * m2(B) over A, B with A & B == C

for non-empty C. The total product weight removed by the conditioning
step, the conflict weight, is always reported; combination is undefined
when it reaches 1.

`combine_via_commonality` computes the same n-ary combination through
pointwise products of commonality tables over the power set, which is
faster when focal maps are dense, and must agree exactly with the fold.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import FrameMismatch, TotalConflict, ValidationError
from .frames import Frame, FrameSubset
from .hints import Hint, HintOutcome
from .mass import MassFunction


class ConflictReport:
    """Diagnostics of the conditioning step of a combination."""

    __slots__ = ("weight",)

    def __init__(self, weight: Fraction):
        if not 0 <= weight <= 1:
            raise ValidationError(f"conflict weight {weight} is outside [0, 1]")
        self.weight = weight

    @property
    def renormalization(self) -> Fraction:
        """Factor 1 / (1 - weight) applied to the surviving product weights."""
        return 1 / (1 - self.weight)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ConflictReport):
            return NotImplemented
        return self.weight == other.weight

    def __repr__(self) -> str:
        return f"ConflictReport(weight={self.weight})"


def combine_hints(first: Hint, second: Hint) -> Hint:
    """Combine two independent hints over their conditioned product space.

    The result's outcomes are the pairs whose focal sets intersect; its
    labels are (label1, label2) pairs. Raises TotalConflict when no pair
    survives.
    """
    if first.frame != second.frame:
        raise FrameMismatch("hints inform different parameter frames")
    survivors: list[tuple[tuple, Fraction, FrameSubset]] = []
    retained = Fraction(0)
    for a in first.outcomes:
        for b in second.outcomes:
            focal = a.focal & b.focal
            if not focal:
                continue
            weight = a.weight * b.weight
            survivors.append(((a.label, b.label), weight, focal))
            retained += weight
    if retained == 0:
        raise TotalConflict("no pair of sample outcomes is jointly possible")
    outcomes = tuple(
        HintOutcome(label, weight / retained, focal) for label, weight, focal in survivors
    )
    return Hint(first.frame, outcomes)


def combine_masses(
    first: MassFunction, second: MassFunction
) -> tuple[MassFunction, ConflictReport]:
    """Dempster's rule on the focal maps directly."""
    if first.frame != second.frame:
        raise FrameMismatch("mass functions are over different frames")
    combined: dict[FrameSubset, Fraction] = {}
    conflict = Fraction(0)
    for a, wa in first.items():
        for b, wb in second.items():
            c = a & b
            if c:
                combined[c] = combined.get(c, Fraction(0)) + wa * wb
            else:
                conflict += wa * wb
    if conflict == 1:
        raise TotalConflict("every pair of focal sets is disjoint")
    scale = 1 - conflict
    masses = {s: w / scale for s, w in combined.items()}
    return MassFunction(first.frame, masses), ConflictReport(conflict)


def combine_all(
    masses: Sequence[MassFunction], frame: Frame | None = None
) -> tuple[MassFunction, ConflictReport]:
    """Left fold of combine_masses; the empty sequence gives the vacuous mass.

    The aggregate conflict weight composes multiplicatively through the
    fold, 1 - prod(1 - kappa_i), which equals the conflict of combining
    everything in one step. The result itself is order-independent.
    """
    masses = list(masses)
    if not masses:
        if frame is None:
            raise ValidationError("an empty combination needs an explicit frame")
        return MassFunction.vacuous(frame), ConflictReport(Fraction(0))
    if frame is not None and masses[0].frame != frame:
        raise FrameMismatch("mass functions are over a different frame than requested")
    result = masses[0]
    retained = Fraction(1)
    for m in masses[1:]:
        result, report = combine_masses(result, m)
        retained *= 1 - report.weight
    return result, ConflictReport(1 - retained)


def combine_via_commonality(
    masses: Sequence[MassFunction], frame: Frame | None = None
) -> MassFunction:
    """Combine by multiplying commonality tables over the power set.

    Exactly equivalent to `combine_all`: commonalities of independent
    evidence multiply, and the inverse transform turns the product back
    into a focal map whose empty-set entry is the joint conflict weight.
    """
    masses = list(masses)
    if frame is None:
        if not masses:
            raise ValidationError("an empty combination needs an explicit frame")
        frame = masses[0].frame
    if any(m.frame != frame for m in masses):
        raise FrameMismatch("mass functions are over different frames")
    n = len(frame)
    size = 1 << n
    product = [Fraction(1)] * size
    for m in masses:
        dense = [Fraction(0)] * size
        for s, w in m.items():
            dense[s.bits] = w
        # Superset-sum zeta transform: dense[mask] becomes the commonality.
        for bit in range(n):
            step = 1 << bit
            for mask in range(size):
                if not mask & step:
                    dense[mask] += dense[mask | step]
        for mask in range(size):
            product[mask] *= dense[mask]
    # Inverse transform recovers the unnormalized combined focal map.
    for bit in range(n):
        step = 1 << bit
        for mask in range(size):
            if not mask & step:
                product[mask] -= product[mask | step]
    conflict = product[0]
    if conflict == 1:
        raise TotalConflict("every combination of focal sets is disjoint")
    scale = 1 - conflict
    combined = {
        FrameSubset(frame, mask): product[mask] / scale
        for mask in range(1, size)
        if product[mask] != 0
    }
    return MassFunction(frame, combined)

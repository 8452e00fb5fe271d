"""Mass functions over a parameter frame.

A mass function assigns positive weights to non-empty focal subsets of the
frame, summing to exactly 1. Support (belief), plausibility, and
commonality of a hypothesis are sums over the focal map:

    support(H)      = sum of m(X) over focal X contained in H
    plausibility(H) = sum of m(X) over focal X meeting H
    commonality(H)  = sum of m(X) over focal X containing H

Support is the probability that the evidence logically forces the
hypothesis; plausibility is the probability that the evidence is
compatible with it.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import FrameMismatch, InvalidBelief, ValidationError
from .frames import Frame, FrameSubset
from .rationals import exact


class MassFunction:
    """A sparse map from focal subsets to positive weights summing to 1."""

    __slots__ = ("frame", "_masses")

    def __init__(
        self,
        frame: Frame,
        masses: Mapping[FrameSubset, object] | Iterable[tuple[FrameSubset, object]],
    ):
        items = dict(masses)
        checked: dict[FrameSubset, Fraction] = {}
        for subset, weight in items.items():
            if not isinstance(subset, FrameSubset) or subset.frame != frame:
                raise FrameMismatch(f"focal set {subset!r} is not a subset of the frame")
            if not subset:
                raise ValidationError("the empty set cannot be focal")
            w = exact(weight)
            if w <= 0:
                raise ValidationError(f"focal weight must be positive, got {w}")
            checked[subset] = w
        total = sum(checked.values())
        if total != 1:
            raise ValidationError(f"focal weights sum to {total}, not 1")
        ordered = sorted(checked.items(), key=lambda kv: kv[0].order_key())
        self.frame = frame
        self._masses = dict(ordered)

    @classmethod
    def vacuous(cls, frame: Frame) -> "MassFunction":
        """Total ignorance: the whole frame carries weight 1."""
        return cls(frame, {frame.full(): Fraction(1)})

    @classmethod
    def from_belief(cls, frame: Frame, belief: Mapping[FrameSubset, object]) -> "MassFunction":
        """Invert a belief table given on the full power set of `frame`.

        The recovered weights must form a valid mass function (none
        negative, nothing on the empty set, total exactly 1); otherwise
        the table was not a belief function and InvalidBelief is raised.
        """
        size = 1 << len(frame)
        dense: list[Fraction] = [Fraction(0)] * size
        for mask in range(size):
            key = FrameSubset(frame, mask)
            if key not in belief:
                raise InvalidBelief(f"belief table is missing subset {key!r}")
            dense[mask] = exact(belief[key])
        # In-place Moebius inversion over the subset lattice, one bit at a time.
        for bit in range(len(frame)):
            step = 1 << bit
            for mask in range(size):
                if mask & step:
                    dense[mask] -= dense[mask ^ step]
        if dense[0] != 0:
            raise InvalidBelief(f"belief of the empty set is {dense[0]}, not 0")
        masses = {}
        for mask in range(1, size):
            if dense[mask] < 0:
                raise InvalidBelief(
                    f"recovered weight {dense[mask]} of {FrameSubset(frame, mask)!r} is negative"
                )
            if dense[mask] > 0:
                masses[FrameSubset(frame, mask)] = dense[mask]
        if sum(masses.values(), Fraction(0)) != 1:
            raise InvalidBelief("recovered weights do not sum to 1")
        return cls(frame, masses)

    def mass(self, subset: FrameSubset) -> Fraction:
        if subset.frame != self.frame:
            raise FrameMismatch("subset is over a different frame")
        return self._masses.get(subset, Fraction(0))

    def focal_sets(self) -> tuple[FrameSubset, ...]:
        return tuple(self._masses)

    def items(self) -> Iterator[tuple[FrameSubset, Fraction]]:
        return iter(self._masses.items())

    def __len__(self) -> int:
        return len(self._masses)

    def support(self, hypothesis: FrameSubset) -> Fraction:
        """Degree to which the evidence forces the hypothesis."""
        if hypothesis.frame != self.frame:
            raise FrameMismatch("hypothesis is over a different frame")
        return sum(
            (w for s, w in self._masses.items() if s.issubset(hypothesis)), Fraction(0)
        )

    def plausibility(self, hypothesis: FrameSubset) -> Fraction:
        """Degree to which the evidence is compatible with the hypothesis."""
        if hypothesis.frame != self.frame:
            raise FrameMismatch("hypothesis is over a different frame")
        return sum(
            (w for s, w in self._masses.items() if s.intersects(hypothesis)), Fraction(0)
        )

    def commonality(self, hypothesis: FrameSubset) -> Fraction:
        """Sum of the weights of focal sets containing the hypothesis."""
        if hypothesis.frame != self.frame:
            raise FrameMismatch("hypothesis is over a different frame")
        if not hypothesis:
            raise ValidationError("commonality is defined for non-empty hypotheses only")
        return sum(
            (w for s, w in self._masses.items() if hypothesis.issubset(s)), Fraction(0)
        )

    def support_table(self) -> dict[FrameSubset, Fraction]:
        """Support of every subset of the frame; 2**len(frame) entries."""
        return {s: self.support(s) for s in self.frame.subsets()}

    def is_deterministic(self) -> bool:
        """One focal set, and it is a singleton."""
        return len(self._masses) == 1 and len(next(iter(self._masses))) == 1

    def is_probabilistic(self) -> bool:
        """Every focal set is a singleton, so support is an additive measure."""
        return all(len(s) == 1 for s in self._masses)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MassFunction):
            return NotImplemented
        return self.frame == other.frame and self._masses == other._masses

    __hash__ = None  # mutable-free, but a dict-backed value; not hashable

    def __repr__(self) -> str:
        body = ", ".join(f"{s!r}: {w}" for s, w in self._masses.items())
        return f"MassFunction({body})"


def equivalent(first: MassFunction, second: MassFunction) -> bool:
    """Whether two mass functions carry the same support function.

    Mass functions determine support functions bijectively, so this is
    plain equality of focal maps; frames must match.
    """
    if first.frame != second.frame:
        raise FrameMismatch("mass functions are over different frames")
    return first == second

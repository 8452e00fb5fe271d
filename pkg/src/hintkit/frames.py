"""Frames, exact subsets of frames, and exact probability distributions.

A frame is an ordered finite set of labels playing one of three roles:
the parameter values under investigation, the observable values, or the
outcomes of the random source. Subsets are stored as bit-sets over the
frame's label order, so set algebra is exact and canonical: two subsets
over the same frame compare equal iff they contain the same labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import FrameMismatch, ValidationError
from .rationals import exact

MAX_FRAME_CARDINALITY = 20

ROLES = ("parameter", "observation", "source")

# Characters that would break the model file format or the CLI grammar.
_FORBIDDEN_LABEL_CHARS = set("#=,")


@dataclass(frozen=True)
class Frame:
    """An ordered set of distinct labels with a declared role."""

    labels: tuple[str, ...]
    role: str
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if self.role not in ROLES:
            raise ValidationError(f"unknown frame role {self.role!r}; expected one of {ROLES}")
        if not self.labels:
            raise ValidationError("a frame needs at least one label")
        if len(self.labels) > MAX_FRAME_CARDINALITY:
            raise ValidationError(
                f"frame has {len(self.labels)} labels; the supported maximum is "
                f"{MAX_FRAME_CARDINALITY}"
            )
        seen = set()
        for label in self.labels:
            if not isinstance(label, str) or not label:
                raise ValidationError(f"labels must be non-empty strings, got {label!r}")
            if any(ch.isspace() for ch in label) or set(label) & _FORBIDDEN_LABEL_CHARS:
                raise ValidationError(
                    f"label {label!r} contains whitespace or one of '#', '=', ','"
                )
            if label in seen:
                raise ValidationError(f"duplicate label {label!r}")
            seen.add(label)
        object.__setattr__(self, "_index", {label: i for i, label in enumerate(self.labels)})

    def __len__(self) -> int:
        return len(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ValidationError(f"label {label!r} is not in this frame") from None

    def subset(self, labels: Iterable[str]) -> "FrameSubset":
        return FrameSubset.of(self, labels)

    def singleton(self, label: str) -> "FrameSubset":
        return FrameSubset.of(self, (label,))

    def full(self) -> "FrameSubset":
        return FrameSubset(self, (1 << len(self.labels)) - 1)

    def empty(self) -> "FrameSubset":
        return FrameSubset(self, 0)

    def subsets(self, include_empty: bool = True) -> Iterator["FrameSubset"]:
        """All subsets in (cardinality, label order); 2**len(self) of them."""
        start = 0 if include_empty else 1
        masks = sorted(range(start, 1 << len(self.labels)), key=lambda m: (m.bit_count(), m))
        for mask in masks:
            yield FrameSubset(self, mask)


@dataclass(frozen=True)
class FrameSubset:
    """A subset of a frame, stored as a bit-set over the frame's label order."""

    frame: Frame
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits < (1 << len(self.frame)):
            raise ValidationError(
                f"bit pattern {self.bits:#x} does not fit a frame of {len(self.frame)} labels"
            )

    @classmethod
    def of(cls, frame: Frame, labels: Iterable[str]) -> "FrameSubset":
        bits = 0
        for label in labels:
            bits |= 1 << frame.index(label)
        return cls(frame, bits)

    def _require_same_frame(self, other: "FrameSubset") -> None:
        if self.frame != other.frame:
            raise FrameMismatch("subsets belong to different frames")

    def __and__(self, other: "FrameSubset") -> "FrameSubset":
        self._require_same_frame(other)
        return FrameSubset(self.frame, self.bits & other.bits)

    def __or__(self, other: "FrameSubset") -> "FrameSubset":
        self._require_same_frame(other)
        return FrameSubset(self.frame, self.bits | other.bits)

    def complement(self) -> "FrameSubset":
        full = (1 << len(self.frame)) - 1
        return FrameSubset(self.frame, self.bits ^ full)

    def issubset(self, other: "FrameSubset") -> bool:
        self._require_same_frame(other)
        return self.bits & ~other.bits == 0

    def intersects(self, other: "FrameSubset") -> bool:
        self._require_same_frame(other)
        return self.bits & other.bits != 0

    def __bool__(self) -> bool:
        return self.bits != 0

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, label: str) -> bool:
        return bool(self.bits >> self.frame.index(label) & 1)

    def __iter__(self) -> Iterator[str]:
        for i, label in enumerate(self.frame.labels):
            if self.bits >> i & 1:
                yield label

    def labels(self) -> tuple[str, ...]:
        return tuple(self)

    def order_key(self) -> tuple[int, int]:
        """Sort key giving (cardinality, label order); canonical display order."""
        return (self.bits.bit_count(), self.bits)

    def __repr__(self) -> str:
        return "{%s}" % ", ".join(self)


@dataclass(frozen=True)
class Distribution:
    """An exact probability distribution over a frame.

    Weights are non-negative Fractions summing to exactly 1, aligned with
    the frame's label order.
    """

    frame: Frame
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        weights = tuple(exact(w) for w in self.weights)
        object.__setattr__(self, "weights", weights)
        if len(weights) != len(self.frame):
            raise ValidationError(
                f"{len(weights)} weights for a frame of {len(self.frame)} labels"
            )
        if any(w < 0 for w in weights):
            raise ValidationError("probabilities must be non-negative")
        if sum(weights) != 1:
            raise ValidationError(f"probabilities sum to {sum(weights)}, not 1")

    @classmethod
    def uniform(cls, frame: Frame) -> "Distribution":
        share = Fraction(1, len(frame))
        return cls(frame, (share,) * len(frame))

    @classmethod
    def from_mapping(cls, frame: Frame, mapping: Mapping[str, object]) -> "Distribution":
        """Build from a label -> weight mapping covering the frame exactly."""
        extra = set(mapping) - set(frame.labels)
        if extra:
            raise ValidationError(f"labels {sorted(extra)} are not in the frame")
        missing = set(frame.labels) - set(mapping)
        if missing:
            raise ValidationError(f"no probability given for labels {sorted(missing)}")
        return cls(frame, tuple(exact(mapping[label]) for label in frame.labels))

    def probability(self, label: str) -> Fraction:
        return self.weights[self.frame.index(label)]

    def subset_probability(self, subset: FrameSubset) -> Fraction:
        if subset.frame != self.frame:
            raise FrameMismatch("subset is over a different frame")
        return sum((w for i, w in enumerate(self.weights) if subset.bits >> i & 1), Fraction(0))

    def items(self) -> Iterator[tuple[str, Fraction]]:
        return iter(zip(self.frame.labels, self.weights))

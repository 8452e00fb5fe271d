from fractions import Fraction

import pytest

from hintkit import (
    Frame,
    FrameMismatch,
    InvalidBelief,
    MassFunction,
    ValidationError,
    equivalent,
)

F = Fraction
HALF = F(1, 2)


@pytest.fixture
def theta():
    return Frame(("t1", "t2"), "parameter")


@pytest.fixture
def heads_mass(theta):
    # The non-precise hint of an ambiguous heads report: {t2} or anything.
    return MassFunction(theta, {theta.singleton("t2"): HALF, theta.full(): HALF})


@pytest.fixture
def status(theta):
    # Precise 9/10 - 1/10 evidence on a binary status frame.
    frame = Frame(("-1", "+1"), "parameter")
    return MassFunction(
        frame, {frame.singleton("-1"): F(9, 10), frame.singleton("+1"): F(1, 10)}
    )


class TestConstruction:
    def test_weights_must_sum_to_one(self, theta):
        with pytest.raises(ValidationError):
            MassFunction(theta, {theta.full(): HALF})

    def test_weights_must_be_positive(self, theta):
        with pytest.raises(ValidationError):
            MassFunction(theta, {theta.full(): F(3, 2), theta.singleton("t1"): F(-1, 2)})
        with pytest.raises(ValidationError):
            MassFunction(theta, {theta.full(): 1, theta.singleton("t1"): 0})

    def test_empty_focal_set_rejected(self, theta):
        with pytest.raises(ValidationError):
            MassFunction(theta, {theta.empty(): 1})

    def test_floats_rejected(self, theta):
        with pytest.raises(ValidationError):
            MassFunction(theta, {theta.full(): 0.5, theta.singleton("t1"): 0.5})

    def test_focal_sets_over_other_frame_rejected(self, theta):
        other = Frame(("t1", "t2"), "source")
        with pytest.raises(FrameMismatch):
            MassFunction(theta, {other.full(): 1})

    def test_focal_sets_canonically_ordered(self, theta):
        m = MassFunction(theta, {theta.full(): HALF, theta.singleton("t2"): HALF})
        assert m.focal_sets() == (theta.singleton("t2"), theta.full())


class TestSupport:
    def test_status_singleton(self, status):
        assert status.support(status.frame.singleton("-1")) == F(9, 10)

    def test_whole_frame_is_one(self, heads_mass, theta):
        assert heads_mass.support(theta.full()) == 1
        assert heads_mass.support(theta.empty()) == 0

    def test_three_way_split(self):
        # Two-coin reporter at p1 = p2 = 1/2: 1/3 on each policy, 1/3 undecided.
        theta = Frame(("t1", "t2"), "parameter")
        m = MassFunction(
            theta,
            {
                theta.singleton("t1"): F(1, 3),
                theta.singleton("t2"): F(1, 3),
                theta.full(): F(1, 3),
            },
        )
        assert m.support(theta.singleton("t1")) == F(1, 3)

    def test_frame_mismatch(self, heads_mass):
        other = Frame(("t1", "t2"), "parameter")
        # equal frames are fine, a different frame object with another role is not
        wrong = Frame(("t1", "t2"), "observation")
        assert heads_mass.support(other.full()) == 1
        with pytest.raises(FrameMismatch):
            heads_mass.support(wrong.full())


class TestPlausibility:
    def test_ambiguous_heads(self, heads_mass, theta):
        assert heads_mass.plausibility(theta.singleton("t1")) == HALF
        assert heads_mass.plausibility(theta.singleton("t2")) == 1

    def test_empty_is_zero(self, heads_mass, theta):
        assert heads_mass.plausibility(theta.empty()) == 0

    def test_after_three_heads(self, theta):
        m = MassFunction(theta, {theta.singleton("t2"): F(7, 8), theta.full(): F(1, 8)})
        assert m.plausibility(theta.singleton("t1")) == F(1, 8)


class TestCommonality:
    def test_vacuous_is_one_everywhere(self, theta):
        m = MassFunction.vacuous(theta)
        for subset in theta.subsets(include_empty=False):
            assert m.commonality(subset) == 1

    def test_ambiguous_heads(self, heads_mass, theta):
        assert heads_mass.commonality(theta.singleton("t2")) == 1
        assert heads_mass.commonality(theta.full()) == HALF

    def test_empty_hypothesis_rejected(self, heads_mass, theta):
        with pytest.raises(ValidationError):
            heads_mass.commonality(theta.empty())


class TestFromBelief:
    def test_vacuous_round_trip(self, theta):
        m = MassFunction.vacuous(theta)
        assert MassFunction.from_belief(theta, m.support_table()) == m

    def test_ambiguous_heads_table(self, theta, heads_mass):
        belief = {
            theta.empty(): 0,
            theta.singleton("t1"): 0,
            theta.singleton("t2"): HALF,
            theta.full(): 1,
        }
        assert MassFunction.from_belief(theta, belief) == heads_mass

    def test_superadditivity_violation(self, theta):
        belief = {
            theta.empty(): 0,
            theta.singleton("t1"): F(3, 5),
            theta.singleton("t2"): F(3, 5),
            theta.full(): 1,
        }
        with pytest.raises(InvalidBelief, match="negative"):
            MassFunction.from_belief(theta, belief)

    def test_nonzero_empty_set(self, theta):
        belief = {
            theta.empty(): F(1, 10),
            theta.singleton("t1"): F(1, 10),
            theta.singleton("t2"): F(1, 10),
            theta.full(): 1,
        }
        with pytest.raises(InvalidBelief, match="empty"):
            MassFunction.from_belief(theta, belief)

    def test_missing_subset(self, theta):
        with pytest.raises(InvalidBelief, match="missing"):
            MassFunction.from_belief(theta, {theta.full(): 1})

    def test_total_not_one(self, theta):
        belief = {
            theta.empty(): 0,
            theta.singleton("t1"): 0,
            theta.singleton("t2"): 0,
            theta.full(): HALF,
        }
        with pytest.raises(InvalidBelief, match="sum"):
            MassFunction.from_belief(theta, belief)

    def test_round_trip_three_labels(self):
        frame = Frame(("a", "b", "c"), "parameter")
        m = MassFunction(
            frame,
            {
                frame.subset(("a", "b")): F(1, 4),
                frame.singleton("c"): F(1, 4),
                frame.full(): HALF,
            },
        )
        assert MassFunction.from_belief(frame, m.support_table()) == m


class TestShapePredicates:
    def test_deterministic(self, theta):
        assert MassFunction(theta, {theta.singleton("t1"): 1}).is_deterministic()
        assert not MassFunction.vacuous(theta).is_deterministic()
        m = MassFunction(theta, {theta.singleton("t2"): HALF, theta.full(): HALF})
        assert not m.is_deterministic()

    def test_probabilistic(self, status, heads_mass):
        assert status.is_probabilistic()
        assert not heads_mass.is_probabilistic()


class TestEquivalence:
    def test_self(self, heads_mass):
        assert equivalent(heads_mass, heads_mass)

    def test_vacuous_vs_deterministic(self, theta):
        assert not equivalent(
            MassFunction.vacuous(theta),
            MassFunction(theta, {theta.singleton("t1"): 1}),
        )

    def test_frame_mismatch(self, theta, status):
        with pytest.raises(FrameMismatch):
            equivalent(MassFunction.vacuous(theta), status)

    def test_mass_lookup(self, heads_mass, theta):
        assert heads_mass.mass(theta.singleton("t2")) == HALF
        assert heads_mass.mass(theta.singleton("t1")) == 0

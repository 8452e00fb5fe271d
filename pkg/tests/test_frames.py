from fractions import Fraction

import pytest

from hintkit import (
    Distribution,
    Frame,
    FrameMismatch,
    FrameSubset,
    MAX_FRAME_CARDINALITY,
    ValidationError,
)


class TestFrame:
    def test_basic(self):
        frame = Frame(("t1", "t2"), "parameter")
        assert len(frame) == 2
        assert frame.index("t2") == 1
        assert "t1" in frame and "t9" not in frame

    def test_labels_normalized_to_tuple(self):
        assert Frame(["a", "b"], "source").labels == ("a", "b")

    @pytest.mark.parametrize(
        "labels",
        [(), ("a", "a"), ("",), ("a b",), ("a=b",), ("a,b",), ("a#b",), (None,)],
    )
    def test_invalid_labels(self, labels):
        with pytest.raises(ValidationError):
            Frame(labels, "parameter")

    def test_cardinality_cap(self):
        ok = tuple(f"e{i}" for i in range(MAX_FRAME_CARDINALITY))
        assert len(Frame(ok, "parameter")) == MAX_FRAME_CARDINALITY
        with pytest.raises(ValidationError):
            Frame(ok + ("extra",), "parameter")

    def test_bad_role(self):
        with pytest.raises(ValidationError):
            Frame(("a",), "plausible")

    def test_index_of_unknown_label(self):
        with pytest.raises(ValidationError):
            Frame(("a",), "parameter").index("b")

    def test_equality_includes_role(self):
        assert Frame(("a",), "parameter") != Frame(("a",), "source")


class TestFrameSubset:
    @pytest.fixture
    def frame(self):
        return Frame(("t1", "t2", "t3"), "parameter")

    def test_set_algebra(self, frame):
        a = frame.subset(("t1", "t2"))
        b = frame.subset(("t2", "t3"))
        assert (a & b).labels() == ("t2",)
        assert (a | b) == frame.full()
        assert a.complement().labels() == ("t3",)
        assert frame.singleton("t2").issubset(a)
        assert not a.issubset(b)
        assert a.intersects(b)
        assert not frame.singleton("t1").intersects(frame.singleton("t3"))

    def test_empty_and_full(self, frame):
        assert not frame.empty()
        assert frame.full()
        assert len(frame.empty()) == 0
        assert len(frame.full()) == 3
        assert frame.empty().complement() == frame.full()

    def test_membership_and_iteration(self, frame):
        s = frame.subset(("t3", "t1"))
        assert list(s) == ["t1", "t3"]  # canonical frame order
        assert "t1" in s and "t2" not in s

    def test_bits_must_fit(self, frame):
        with pytest.raises(ValidationError):
            FrameSubset(frame, 1 << 3)
        with pytest.raises(ValidationError):
            FrameSubset(frame, -1)

    def test_frame_mismatch(self, frame):
        other = Frame(("t1", "t2", "t3"), "source")
        with pytest.raises(FrameMismatch):
            frame.full() & other.full()

    def test_subsets_enumeration_order(self, frame):
        subsets = list(frame.subsets())
        assert len(subsets) == 8
        assert subsets[0] == frame.empty()
        assert subsets[1:4] == [frame.singleton(t) for t in ("t1", "t2", "t3")]
        assert subsets[-1] == frame.full()
        assert len(list(frame.subsets(include_empty=False))) == 7


class TestDistribution:
    @pytest.fixture
    def frame(self):
        return Frame(("o1", "o2"), "source")

    def test_exact_values(self, frame):
        d = Distribution(frame, (Fraction(9, 10), Fraction(1, 10)))
        assert d.probability("o1") == Fraction(9, 10)
        assert d.subset_probability(frame.full()) == 1
        assert d.subset_probability(frame.empty()) == 0

    def test_accepts_strings_and_ints(self, frame):
        d = Distribution(frame, ("0.9", "1/10"))
        assert d.probability("o1") == Fraction(9, 10)
        assert Distribution(frame, (1, 0)).probability("o2") == 0

    def test_rejects_floats(self, frame):
        with pytest.raises(ValidationError):
            Distribution(frame, (0.9, 0.1))

    def test_sum_must_be_one(self, frame):
        with pytest.raises(ValidationError):
            Distribution(frame, (Fraction(3, 5), Fraction(3, 10)))

    def test_negative_rejected(self, frame):
        with pytest.raises(ValidationError):
            Distribution(frame, (Fraction(3, 2), Fraction(-1, 2)))

    def test_uniform(self, frame):
        assert Distribution.uniform(frame).probability("o2") == Fraction(1, 2)

    def test_from_mapping(self, frame):
        d = Distribution.from_mapping(frame, {"o2": "1/4", "o1": "3/4"})
        assert d.weights == (Fraction(3, 4), Fraction(1, 4))
        with pytest.raises(ValidationError):
            Distribution.from_mapping(frame, {"o1": 1})
        with pytest.raises(ValidationError):
            Distribution.from_mapping(frame, {"o1": 1, "o2": 0, "o3": 0})

    def test_subset_probability_frame_mismatch(self, frame):
        other = Frame(("o1", "o2"), "parameter")
        d = Distribution.uniform(frame)
        with pytest.raises(FrameMismatch):
            d.subset_probability(other.full())

from fractions import Fraction

import pytest

from hintkit import (
    BuiltinSpec,
    MassFunction,
    TotalConflict,
    ValidationError,
    build,
    build_named,
    infer,
    nonid_precise_model,
    nonid_vacuous_model,
    policy1_closed_form,
    policy1_model,
    policy2_closed_form,
    policy2_model,
    pregnancy_closed_form,
    pregnancy_closed_form_mass,
    pregnancy_model,
)

F = Fraction
HALF = F(1, 2)

PARAM_GRID = [F(1, 10), F(3, 10), HALF, F(7, 10), F(9, 10)]


class TestBuiltinSpec:
    def test_unknown_name(self):
        with pytest.raises(ValidationError):
            BuiltinSpec("policy3")

    def test_missing_parameter(self):
        with pytest.raises(ValidationError):
            BuiltinSpec("pregnancy")
        with pytest.raises(ValidationError):
            BuiltinSpec("policy2", {"p1": HALF})

    def test_unexpected_parameter(self):
        with pytest.raises(ValidationError):
            BuiltinSpec("policy1", {"p": HALF})

    def test_out_of_range(self):
        with pytest.raises(ValidationError):
            BuiltinSpec("pregnancy", {"p": F(11, 10)})

    def test_build_dispatch(self):
        model = build(BuiltinSpec("policy2", {"p1": "3/10", "p2": "7/10"}))
        assert model.source_distribution.probability("o1o1'") == F(21, 100)

    def test_build_named(self):
        assert build_named("policy1") == policy1_model()


class TestModelConstruction:
    def test_status_test_structure(self):
        model = pregnancy_model("9/10")
        assert model.source_frame.labels == ("+1", "-1")
        assert model.source_distribution.probability("+1") == F(9, 10)
        # observed = parameter times source, as signs
        assert model.observed("-1", "+1") == "-1"
        assert model.observed("-1", "-1") == "+1"
        assert model.observed("+1", "+1") == "+1"
        assert model.observed("+1", "-1") == "-1"

    def test_reporter_table(self):
        model = policy1_model()
        assert model.source_distribution.probability("o1") == HALF
        assert model.observed("t1", "o2") == "T"
        assert model.observed("t2", "o2") == "H"

    def test_two_coin_product_weights(self):
        model = policy2_model(HALF, HALF)
        assert all(w == F(1, 4) for w in model.source_distribution.weights)
        model = policy2_model("3/10", "7/10")
        assert model.source_distribution.probability("o1o2'") == F(9, 100)
        assert model.observed("t1", "o1o2'") == "H"
        assert model.observed("t2", "o1o2'") == "T"


class TestPregnancyClosedForm:
    def test_single_negative(self):
        assert pregnancy_closed_form(1, 0, "9/10") == (F(9, 10), F(1, 10))

    def test_balanced_counts_are_even_for_any_p(self):
        for p in PARAM_GRID:
            assert pregnancy_closed_form(2, 1, p) == (HALF, HALF)

    def test_two_negatives(self):
        assert pregnancy_closed_form(2, 0, "9/10") == (F(81, 82), F(1, 82))

    def test_degenerate_device_with_mixed_counts(self):
        with pytest.raises(TotalConflict):
            pregnancy_closed_form(2, 1, 1)
        with pytest.raises(TotalConflict):
            pregnancy_closed_form(3, 1, 0)

    def test_no_observations(self):
        assert pregnancy_closed_form(0, 0, "9/10") == (0, 0)
        theta = pregnancy_model("9/10").parameter_frame
        assert pregnancy_closed_form_mass(0, 0, "9/10") == MassFunction.vacuous(theta)

    def test_bad_counts(self):
        with pytest.raises(ValidationError):
            pregnancy_closed_form(1, 2, HALF)

    def test_outputs_form_a_distribution(self):
        for p in PARAM_GRID:
            for n in range(1, 6):
                for k in range(n + 1):
                    sp_minus, sp_plus = pregnancy_closed_form(n, k, p)
                    assert sp_minus + sp_plus == 1
                    assert sp_minus >= 0 and sp_plus >= 0


class TestPolicy1ClosedForm:
    def test_single_heads(self):
        m = policy1_closed_form(1, 1)
        assert m.mass(m.frame.singleton("t2")) == HALF
        assert m.mass(m.frame.full()) == HALF

    def test_three_heads(self):
        m = policy1_closed_form(3, 3)
        assert m.mass(m.frame.singleton("t2")) == F(7, 8)
        assert m.mass(m.frame.full()) == F(1, 8)

    def test_any_tails(self):
        m = policy1_closed_form(4, 2)
        assert m.is_deterministic()
        assert m.mass(m.frame.singleton("t1")) == 1

    def test_no_observations(self):
        m = policy1_closed_form(0, 0)
        assert m == MassFunction.vacuous(m.frame)


class TestPolicy2ClosedForm:
    def test_single_heads_formula(self):
        p1, p2 = F(3, 10), F(7, 10)
        m = policy2_closed_form(1, 1, p1, p2)
        denominator = p1 + p2 - p1 * p2
        assert m.support(m.frame.singleton("t1")) == p1 * (1 - p2) / denominator
        assert m.support(m.frame.singleton("t2")) == (1 - p1) * p2 / denominator

    def test_single_tails_formula(self):
        p1, p2 = F(3, 10), F(7, 10)
        m = policy2_closed_form(1, 0, p1, p2)
        assert m.support(m.frame.singleton("t1")) == (1 - p1) * p2 / (1 - p1 * p2)

    def test_mixed_pair_at_even_coins(self):
        m = policy2_closed_form(2, 1, HALF, HALF)
        assert m.mass(m.frame.singleton("t1")) == F(3, 7)
        assert m.mass(m.frame.singleton("t2")) == F(3, 7)
        assert m.mass(m.frame.full()) == F(1, 7)

    def test_degenerate_total_conflict(self):
        with pytest.raises(TotalConflict):
            policy2_closed_form(2, 1, 1, 1)

    def test_degenerate_but_consistent(self):
        # Always-heads coins observed as all heads leave total ignorance.
        m = policy2_closed_form(3, 3, 1, 1)
        assert m == MassFunction.vacuous(m.frame)

    def test_mass_invariants_hold_across_grid(self):
        for p1 in PARAM_GRID:
            for p2 in PARAM_GRID:
                for n in range(1, 4):
                    for k in range(n + 1):
                        m = policy2_closed_form(n, k, p1, p2)
                        total = sum(w for _, w in m.items())
                        assert total == 1


class TestClosedFormsMatchInference:
    @pytest.mark.parametrize("p", PARAM_GRID)
    def test_status_test(self, p):
        model = pregnancy_model(p)
        for n in range(5):
            for k in range(n + 1):
                observations = ["+1"] * k + ["-1"] * (n - k)
                assert infer(model, observations) == pregnancy_closed_form_mass(n, k, p)

    def test_reporter(self):
        model = policy1_model()
        for n in range(5):
            for k in range(n + 1):
                observations = ["H"] * k + ["T"] * (n - k)
                assert infer(model, observations) == policy1_closed_form(n, k)

    @pytest.mark.parametrize("p1", [F(1, 10), HALF, F(9, 10)])
    @pytest.mark.parametrize("p2", [F(3, 10), F(7, 10)])
    def test_two_coins(self, p1, p2):
        model = policy2_model(p1, p2)
        for n in range(5):
            for k in range(n + 1):
                observations = ["H"] * k + ["T"] * (n - k)
                assert infer(model, observations) == policy2_closed_form(n, k, p1, p2)


class TestWitnessPair:
    def test_same_conditional_table_different_evidence(self):
        vac, pre = nonid_vacuous_model(), nonid_precise_model()
        assert vac.distribution_model().table == pre.distribution_model().table
        assert infer(vac, ["H"]) != infer(pre, ["H"])

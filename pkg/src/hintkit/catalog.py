"""Built-in example models and their closed-form support functions.

Three classic scenarios ship with the package:

* ``pregnancy`` -- a test device reports a binary status; the source says
  whether the device was trustworthy (probability p) or misleading. Every
  observation yields a precise hint.
* ``policy1`` -- a reporter either relays a fair coin (t1) or always says
  heads (t2); observing heads is ambiguous, observing tails settles it.
* ``policy2`` -- the reporter relays either a red coin with heads
  probability p1 (t1) or a blue coin with heads probability p2 (t2); the
  source is the product of the two flips.

``nonid_vacuous`` and ``nonid_precise`` are a witness pair: they induce
identical conditional tables P(x | t) yet carry different evidential
content, so functional models distinguish situations that distribution
models cannot.

The closed forms are independent cross-checks: for n observations with k
of one kind they give the combined mass function directly, and must agree
exactly with folding the per-observation hints.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Mapping

from .errors import TotalConflict, ValidationError
from .frames import Distribution, Frame
from .mass import MassFunction
from .models import FunctionalModel
from .rationals import exact

BUILTIN_NAMES = ("pregnancy", "policy1", "policy2", "nonid_vacuous", "nonid_precise")

_REQUIRED_PARAMS = {
    "pregnancy": ("p",),
    "policy1": (),
    "policy2": ("p1", "p2"),
    "nonid_vacuous": (),
    "nonid_precise": (),
}


@dataclass(frozen=True)
class BuiltinSpec:
    """A built-in model name plus its named rational parameters."""

    name: str
    params: Mapping[str, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.name not in BUILTIN_NAMES:
            raise ValidationError(
                f"unknown built-in {self.name!r}; expected one of {BUILTIN_NAMES}"
            )
        required = _REQUIRED_PARAMS[self.name]
        params = {key: exact(value) for key, value in dict(self.params).items()}
        for key in required:
            if key not in params:
                raise ValidationError(f"built-in {self.name!r} needs parameter {key!r}")
        extra = set(params) - set(required)
        if extra:
            raise ValidationError(f"built-in {self.name!r} takes no parameter {sorted(extra)}")
        for key, value in params.items():
            if not 0 <= value <= 1:
                raise ValidationError(f"parameter {key}={value} is outside [0, 1]")
        object.__setattr__(self, "params", params)


def build(spec: BuiltinSpec) -> FunctionalModel:
    """Construct the model a BuiltinSpec describes."""
    if spec.name == "pregnancy":
        return pregnancy_model(spec.params["p"])
    if spec.name == "policy1":
        return policy1_model()
    if spec.name == "policy2":
        return policy2_model(spec.params["p1"], spec.params["p2"])
    if spec.name == "nonid_vacuous":
        return nonid_vacuous_model()
    return nonid_precise_model()


def build_named(name: str, **params) -> FunctionalModel:
    """Convenience wrapper: build("policy2", p1="3/10", p2="7/10")."""
    return build(BuiltinSpec(name, {k: exact(v) for k, v in params.items()}))


def pregnancy_model(p) -> FunctionalModel:
    """Binary status test: source "+1" means the device told the truth.

    The observation equals the status exactly when the device is
    trustworthy, which happens with probability p.
    """
    p = exact(p)
    theta = Frame(("-1", "+1"), "parameter")
    omega = Frame(("+1", "-1"), "source")
    x = Frame(("-1", "+1"), "observation")
    signs = {"+1": 1, "-1": -1}
    mapping = {
        (t, o): "+1" if signs[t] * signs[o] > 0 else "-1"
        for t in theta.labels
        for o in omega.labels
    }
    return FunctionalModel(theta, omega, x, Distribution(omega, (p, 1 - p)), mapping)


def policy1_model() -> FunctionalModel:
    """Fair-coin reporter: t1 relays the flip, t2 always reports heads."""
    theta = Frame(("t1", "t2"), "parameter")
    omega = Frame(("o1", "o2"), "source")
    x = Frame(("H", "T"), "observation")
    mapping = {
        ("t1", "o1"): "H",
        ("t1", "o2"): "T",
        ("t2", "o1"): "H",
        ("t2", "o2"): "H",
    }
    half = Fraction(1, 2)
    return FunctionalModel(theta, omega, x, Distribution(omega, (half, half)), mapping)


def policy2_model(p1, p2) -> FunctionalModel:
    """Two-coin reporter: t1 relays the red coin, t2 the blue one.

    The source frame is the flat product of the two flips; "o1" means the
    red coin showed heads, "o1'" that the blue one did.
    """
    p1, p2 = exact(p1), exact(p2)
    theta = Frame(("t1", "t2"), "parameter")
    omega = Frame(("o1o1'", "o1o2'", "o2o1'", "o2o2'"), "source")
    x = Frame(("H", "T"), "observation")
    weights = (p1 * p2, p1 * (1 - p2), (1 - p1) * p2, (1 - p1) * (1 - p2))
    mapping = {}
    for o in omega.labels:
        red_heads = o.startswith("o1")
        blue_heads = o.endswith("o1'")
        mapping[("t1", o)] = "H" if red_heads else "T"
        mapping[("t2", o)] = "H" if blue_heads else "T"
    return FunctionalModel(theta, omega, x, Distribution(omega, weights), mapping)


def nonid_vacuous_model() -> FunctionalModel:
    """Witness model whose observations say nothing about the parameter.

    The observation copies a fair source regardless of the parameter, so
    every hint is vacuous, yet P(x | t) matches nonid_precise_model.
    """
    theta = Frame(("t1", "t2"), "parameter")
    omega = Frame(("o1", "o2"), "source")
    x = Frame(("H", "T"), "observation")
    mapping = {(t, "o1"): "H" for t in theta.labels}
    mapping.update({(t, "o2"): "T" for t in theta.labels})
    half = Fraction(1, 2)
    return FunctionalModel(theta, omega, x, Distribution(omega, (half, half)), mapping)


def nonid_precise_model() -> FunctionalModel:
    """Witness model whose observations pin the parameter down precisely.

    Same conditional table as nonid_vacuous_model, but the observation is
    the exclusive-or of parameter and source, so each observation yields a
    precise fifty-fifty hint.
    """
    theta = Frame(("t1", "t2"), "parameter")
    omega = Frame(("o1", "o2"), "source")
    x = Frame(("H", "T"), "observation")
    mapping = {
        ("t1", "o1"): "H",
        ("t1", "o2"): "T",
        ("t2", "o1"): "T",
        ("t2", "o2"): "H",
    }
    half = Fraction(1, 2)
    return FunctionalModel(theta, omega, x, Distribution(omega, (half, half)), mapping)


def _check_counts(n: int, k: int) -> None:
    if not (isinstance(n, int) and isinstance(k, int) and 0 <= k <= n):
        raise ValidationError(f"counts must satisfy 0 <= k <= n, got n={n}, k={k}")


def pregnancy_closed_form(n: int, k: int, p) -> tuple[Fraction, Fraction]:
    """Support pair (sp("-1"), sp("+1")) after k positives among n results.

    For n >= 1 the combined hint is precise and the two values sum to 1;
    n = 0 carries no evidence, so both supports are 0 (the vacuous mass).
    Degenerate p with contradictory counts leaves no possible outcome and
    raises TotalConflict.
    """
    _check_counts(n, k)
    p = exact(p)
    if n == 0:
        return Fraction(0), Fraction(0)
    plus = p**k * (1 - p) ** (n - k)
    minus = (1 - p) ** k * p ** (n - k)
    denominator = plus + minus
    if denominator == 0:
        raise TotalConflict("contradictory observations under a degenerate device")
    return minus / denominator, plus / denominator


def pregnancy_closed_form_mass(n: int, k: int, p) -> MassFunction:
    """The pregnancy closed form as a mass function (vacuous at n = 0)."""
    theta = Frame(("-1", "+1"), "parameter")
    if n == 0:
        _check_counts(n, k)
        return MassFunction.vacuous(theta)
    sp_minus, sp_plus = pregnancy_closed_form(n, k, p)
    masses = {}
    if sp_minus > 0:
        masses[theta.singleton("-1")] = sp_minus
    if sp_plus > 0:
        masses[theta.singleton("+1")] = sp_plus
    return MassFunction(theta, masses)


def policy1_closed_form(n: int, k: int) -> MassFunction:
    """Combined mass after k heads and n - k tails under the policy1 model.

    Any tails settles the question deterministically on t1; an unbroken
    run of heads leaves m({t2}) = 1 - (1/2)**n with the rest on the whole
    frame.
    """
    _check_counts(n, k)
    theta = Frame(("t1", "t2"), "parameter")
    if n == 0:
        return MassFunction.vacuous(theta)
    if k < n:
        return MassFunction(theta, {theta.singleton("t1"): Fraction(1)})
    leftover = Fraction(1, 2) ** n
    return MassFunction(theta, {theta.singleton("t2"): 1 - leftover, theta.full(): leftover})


def policy2_closed_form(n: int, k: int, p1, p2) -> MassFunction:
    """Combined mass after k heads and n - k tails under the policy2 model."""
    _check_counts(n, k)
    p1, p2 = exact(p1), exact(p2)
    theta = Frame(("t1", "t2"), "parameter")
    shared = (p1 * p2) ** k * ((1 - p1) * (1 - p2)) ** (n - k)
    first = p1**k * (1 - p1) ** (n - k)
    second = p2**k * (1 - p2) ** (n - k)
    denominator = first + second - shared
    if denominator == 0:
        raise TotalConflict("observations impossible under both policies")
    masses = {}
    if first - shared > 0:
        masses[theta.singleton("t1")] = (first - shared) / denominator
    if second - shared > 0:
        masses[theta.singleton("t2")] = (second - shared) / denominator
    if shared > 0:
        masses[theta.full()] = shared / denominator
    return MassFunction(theta, masses)


def observation_multiset(model: FunctionalModel, counts: Mapping[str, int]) -> list[str]:
    """Expand {label: count} into a concrete observation list, validating labels."""
    observations = []
    for label, count in counts.items():
        model.observation_frame.index(label)
        observations.extend([label] * count)
    return observations


def all_observation_multisets(model: FunctionalModel, max_n: int):
    """Yield every observation multiset of size 0..max_n as a sorted tuple."""
    labels = model.observation_frame.labels
    for n in range(max_n + 1):
        yield from combinations_with_replacement(labels, n)

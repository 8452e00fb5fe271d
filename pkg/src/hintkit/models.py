"""Functional models: how parameter and random source determine observations.

A model is a total map f over parameter x source pairs into observation
labels, plus a known distribution for the source that does not depend on
the parameter. Observing a value x conditions the source on the outcomes
that could have produced x; each surviving outcome restricts the parameter
to the set of values consistent with it. That weighted family of subsets
is the hint carried by the observation. Several observations are treated
as independent realizations of the source and their hints are combined.

The same model also induces a plain conditional table P(x | t), the
distribution model, which together with a prior yields an ordinary Bayes
posterior. When a prior is folded in as a hint, the two routes must agree
exactly; `check_bayes_consistency` computes both and compares.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .combination import ConflictReport, combine_all
from .errors import ImpossibleObservation, ValidationError, ZeroEvidence
from .frames import Distribution, Frame, FrameSubset
from .hints import Hint, HintOutcome, prior_hint
from .mass import MassFunction
from .rationals import exact


@dataclass(frozen=True)
class FunctionalModel:
    """A total observation map over parameter x source, plus the source law."""

    parameter_frame: Frame
    source_frame: Frame
    observation_frame: Frame
    source_distribution: Distribution
    observation_map: Mapping[tuple[str, str], str]

    def __post_init__(self):
        if self.parameter_frame.role != "parameter":
            raise ValidationError("parameter frame must have role 'parameter'")
        if self.source_frame.role != "source":
            raise ValidationError("source frame must have role 'source'")
        if self.observation_frame.role != "observation":
            raise ValidationError("observation frame must have role 'observation'")
        if self.source_distribution.frame != self.source_frame:
            raise ValidationError("source distribution is not over the source frame")
        table = dict(self.observation_map)
        expected = {
            (t, o) for t in self.parameter_frame.labels for o in self.source_frame.labels
        }
        if set(table) != expected:
            raise ValidationError(
                "observation map must cover every (parameter, source) pair exactly once"
            )
        for pair, x in table.items():
            if x not in self.observation_frame:
                raise ValidationError(f"observation map value {x!r} is not in the frame")
        object.__setattr__(self, "observation_map", table)

    def observed(self, parameter: str, source: str) -> str:
        """What would be observed for this parameter value and source outcome."""
        self.parameter_frame.index(parameter)
        self.source_frame.index(source)
        return self.observation_map[(parameter, source)]

    def compatible_sources(self, observation: str) -> FrameSubset:
        """Source outcomes that could have produced the observation."""
        self.observation_frame.index(observation)
        return self.source_frame.subset(
            o
            for o in self.source_frame.labels
            if any(
                self.observation_map[(t, o)] == observation
                for t in self.parameter_frame.labels
            )
        )

    def consistent_parameters(self, observation: str, source: str) -> FrameSubset:
        """Parameter values under which this source outcome yields the observation.

        Defined only for source outcomes compatible with the observation;
        the result is then non-empty by construction.
        """
        self.observation_frame.index(observation)
        self.source_frame.index(source)
        subset = self.parameter_frame.subset(
            t
            for t in self.parameter_frame.labels
            if self.observation_map[(t, source)] == observation
        )
        if not subset:
            raise ValidationError(
                f"source outcome {source!r} cannot produce observation {observation!r}"
            )
        return subset

    def hint(self, observation: str) -> Hint:
        """The knowledge about the parameter carried by one observation.

        The source law is conditioned on the compatible outcomes; each
        surviving outcome maps to its consistent parameter set. Raises
        ImpossibleObservation when the compatible set has probability 0.
        """
        compatible = self.compatible_sources(observation)
        total = self.source_distribution.subset_probability(compatible)
        if total == 0:
            raise ImpossibleObservation(
                f"observation {observation!r} has probability zero under the model"
            )
        outcomes = tuple(
            HintOutcome(
                o,
                self.source_distribution.probability(o) / total,
                self.consistent_parameters(observation, o),
            )
            for o in compatible
            if self.source_distribution.probability(o) > 0
        )
        return Hint(self.parameter_frame, outcomes)

    def distribution_model(self) -> "DistributionModel":
        """The conditional table P(x | t) induced by the model."""
        table: dict[tuple[str, str], Fraction] = {
            (t, x): Fraction(0)
            for t in self.parameter_frame.labels
            for x in self.observation_frame.labels
        }
        for (t, o), x in self.observation_map.items():
            table[(t, x)] += self.source_distribution.probability(o)
        return DistributionModel(self.parameter_frame, self.observation_frame, table)


@dataclass(frozen=True)
class DistributionModel:
    """A conditional table P(x | t): one distribution over x per parameter."""

    parameter_frame: Frame
    observation_frame: Frame
    table: Mapping[tuple[str, str], Fraction]

    def __post_init__(self):
        table = {pair: exact(w) for pair, w in dict(self.table).items()}
        expected = {
            (t, x) for t in self.parameter_frame.labels for x in self.observation_frame.labels
        }
        if set(table) != expected:
            raise ValidationError("conditional table must cover parameter x observation")
        for t in self.parameter_frame.labels:
            row = sum(table[(t, x)] for x in self.observation_frame.labels)
            if row != 1:
                raise ValidationError(f"conditional probabilities for {t!r} sum to {row}")
            if any(table[(t, x)] < 0 for x in self.observation_frame.labels):
                raise ValidationError(f"negative conditional probability for {t!r}")
        object.__setattr__(self, "table", table)

    def probability(self, observation: str, given: str) -> Fraction:
        self.parameter_frame.index(given)
        self.observation_frame.index(observation)
        return self.table[(given, observation)]

    def posterior(self, prior: Distribution, observations: Sequence[str]) -> Distribution:
        """Bayes posterior for independent observations under this table."""
        if prior.frame != self.parameter_frame:
            raise ValidationError("prior is not over the parameter frame")
        weights = []
        for t in self.parameter_frame.labels:
            w = prior.probability(t)
            for x in observations:
                w *= self.probability(x, given=t)
            weights.append(w)
        normalizer = sum(weights, Fraction(0))
        if normalizer == 0:
            raise ZeroEvidence("no parameter value can explain the observations")
        return Distribution(self.parameter_frame, tuple(w / normalizer for w in weights))


def infer_with_report(
    model: FunctionalModel,
    observations: Sequence[str],
    prior: Distribution | None = None,
) -> tuple[MassFunction, ConflictReport]:
    """Combine the hints of all observations, and of the prior if given."""
    masses = []
    if prior is not None:
        masses.append(prior_hint(prior).to_mass())
    masses.extend(model.hint(x).to_mass() for x in observations)
    return combine_all(masses, frame=model.parameter_frame)


def infer(
    model: FunctionalModel,
    observations: Sequence[str],
    prior: Distribution | None = None,
) -> MassFunction:
    """The combined mass function carried by a sequence of observations."""
    mass, _ = infer_with_report(model, observations, prior)
    return mass


@dataclass(frozen=True)
class BayesCheck:
    """One side-by-side comparison of evidential supports and a posterior."""

    agrees: bool
    support_table: Mapping[str, Fraction]
    posterior_table: Mapping[str, Fraction]


@dataclass(frozen=True)
class BayesConsistencyReport:
    """Outcome of comparing hint-based inference against Bayes.

    `with_prior` always compares infer(model, observations, prior) with
    the posterior under the induced conditional table. `uniform_prior` is
    filled in only when prior-free inference happens to be precise; its
    support function must then match the posterior under a uniform prior.
    """

    with_prior: BayesCheck
    uniform_prior: BayesCheck | None

    @property
    def passed(self) -> bool:
        return self.with_prior.agrees and (
            self.uniform_prior is None or self.uniform_prior.agrees
        )


def _singleton_supports(mass: MassFunction) -> dict[str, Fraction]:
    frame = mass.frame
    return {t: mass.support(frame.singleton(t)) for t in frame.labels}


def check_bayes_consistency(
    model: FunctionalModel,
    prior: Distribution,
    observations: Sequence[str],
) -> BayesConsistencyReport:
    """Verify that folding a prior in as a hint reproduces Bayes exactly.

    The combined hint must be precise (an additive measure) and its
    support function must equal the Bayes posterior on every singleton.
    """
    dm = model.distribution_model()
    combined = infer(model, observations, prior)
    posterior = dm.posterior(prior, observations)
    support_table = _singleton_supports(combined)
    posterior_table = dict(posterior.items())
    with_prior = BayesCheck(
        combined.is_probabilistic() and support_table == posterior_table,
        support_table,
        posterior_table,
    )

    uniform_check = None
    prior_free = infer(model, observations)
    if prior_free.is_probabilistic():
        uniform = dm.posterior(Distribution.uniform(model.parameter_frame), observations)
        free_table = _singleton_supports(prior_free)
        uniform_table = dict(uniform.items())
        uniform_check = BayesCheck(free_table == uniform_table, free_table, uniform_table)
    return BayesConsistencyReport(with_prior, uniform_check)

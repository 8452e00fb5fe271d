"""Exact evidential inference for functional models.

Build a model of how a parameter and a random source determine what is
observed, feed in observations, and read off exact support and
plausibility degrees for any hypothesis about the parameter. Everything
is computed in rational arithmetic; equal means equal.

All public types are immutable values and all operations are pure, so the
whole API is safe to use from concurrent code.
"""

from .catalog import (
    BUILTIN_NAMES,
    BuiltinSpec,
    build,
    build_named,
    nonid_precise_model,
    nonid_vacuous_model,
    observation_multiset,
    policy1_closed_form,
    policy1_model,
    policy2_closed_form,
    policy2_model,
    pregnancy_closed_form,
    pregnancy_closed_form_mass,
    pregnancy_model,
)
from .combination import (
    ConflictReport,
    combine_all,
    combine_hints,
    combine_masses,
    combine_via_commonality,
)
from .errors import (
    EnumerationLimit,
    EvidenceError,
    FrameMismatch,
    ImpossibleObservation,
    InvalidBelief,
    TotalConflict,
    ValidationError,
    ZeroEvidence,
)
from .frames import MAX_FRAME_CARDINALITY, Distribution, Frame, FrameSubset
from .hints import Hint, HintOutcome, prior_hint
from .mass import MassFunction, equivalent
from .models import (
    BayesCheck,
    BayesConsistencyReport,
    DistributionModel,
    FunctionalModel,
    check_bayes_consistency,
    infer,
    infer_with_report,
)
from .modelfile import ModelValidationError, load_model, parse_model, serialize_model
from .oracle import ENUMERATION_GUARD, OracleReport, joint_hint, oracle_check
from .rationals import decimal_str, exact

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_NAMES",
    "BayesCheck",
    "BayesConsistencyReport",
    "BuiltinSpec",
    "ConflictReport",
    "Distribution",
    "DistributionModel",
    "ENUMERATION_GUARD",
    "EnumerationLimit",
    "EvidenceError",
    "Frame",
    "FrameMismatch",
    "FrameSubset",
    "FunctionalModel",
    "Hint",
    "HintOutcome",
    "ImpossibleObservation",
    "InvalidBelief",
    "MAX_FRAME_CARDINALITY",
    "MassFunction",
    "ModelValidationError",
    "OracleReport",
    "TotalConflict",
    "ValidationError",
    "ZeroEvidence",
    "build",
    "build_named",
    "check_bayes_consistency",
    "combine_all",
    "combine_hints",
    "combine_masses",
    "combine_via_commonality",
    "decimal_str",
    "equivalent",
    "exact",
    "infer",
    "infer_with_report",
    "joint_hint",
    "load_model",
    "mass_from_hint",
    "nonid_precise_model",
    "nonid_vacuous_model",
    "observation_multiset",
    "oracle_check",
    "parse_model",
    "policy1_closed_form",
    "policy1_model",
    "policy2_closed_form",
    "policy2_model",
    "pregnancy_closed_form",
    "pregnancy_closed_form_mass",
    "pregnancy_model",
    "prior_hint",
    "serialize_model",
]


def mass_from_hint(hint: Hint) -> MassFunction:
    """Merge a hint's outcomes by focal set; alias for Hint.to_mass()."""
    return hint.to_mass()

"""The model file format: a small UTF-8 key-value tree.

A model file has four sections. `theta` and `observations` list their
labels on the header line; `source` and `map` take indented item lines.
`#` starts a comment, blank lines are ignored.

    # reporter with a fair coin
    theta: t1 t2
    observations: H T
    source:
      o1 = 1/2
      o2 = 1/2
    map:
      t1 o1 -> H
      t1 o2 -> T
      t2 o1 -> H
      t2 o2 -> H

A product source declares independent factors instead; the flat frame is
expanded at load time by concatenating one label from each factor and
multiplying their weights:

    source product:
      factor: o1 = 3/10  o2 = 7/10
      factor: o1' = 1/2  o2' = 1/2

Probabilities may be written as rationals ("9/10"), decimals ("0.9", read
exactly), or integers. Serialization always emits the expanded flat
source, ordered canonically, so equal models produce identical bytes.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterable

from .errors import ValidationError
from .frames import MAX_FRAME_CARDINALITY, Distribution, Frame
from .models import FunctionalModel

_SECTIONS = ("theta", "observations", "source", "source product", "map")

#: Validation codes, one per failure family.
CODE_SYNTAX = "syntax"
CODE_DUPLICATE_LABEL = "duplicate-label"
CODE_SUM_VIOLATION = "sum-violation"
CODE_FUNCTION_TABLE = "function-table"
CODE_UNKNOWN_LABEL = "unknown-label"
CODE_FRAME_LIMIT = "frame-limit"


class ModelValidationError(ValidationError):
    """A model document failed to parse or validate.

    Carries a `code` naming the failure family and, when the failure is
    tied to a specific line, its 1-based `line` number.
    """

    def __init__(self, message: str, code: str, line: int | None = None):
        self.code = code
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message} [{code}]")


def _fail(message: str, code: str, line: int | None = None):
    raise ModelValidationError(message, code, line)


def _check_label(token: str, line: int) -> str:
    if not token:
        _fail("empty label", CODE_SYNTAX, line)
    if set(token) & set("=,"):
        _fail(f"label {token!r} may not contain '=' or ','", CODE_SYNTAX, line)
    return token


def _parse_weight(token: str, line: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        _fail(f"not a rational literal: {token!r}", CODE_SYNTAX, line)


def _unique_labels(labels: Iterable[str], section: str, line: int) -> tuple[str, ...]:
    out: list[str] = []
    for label in labels:
        if label in out:
            _fail(f"duplicate label {label!r} in {section}", CODE_DUPLICATE_LABEL, line)
        out.append(label)
    return tuple(out)


def _build_frame(labels: tuple[str, ...], role: str, section: str, line: int) -> Frame:
    if len(labels) > MAX_FRAME_CARDINALITY:
        _fail(
            f"{section} has {len(labels)} labels; the maximum is {MAX_FRAME_CARDINALITY}",
            CODE_FRAME_LIMIT,
            line,
        )
    return Frame(labels, role)


def parse_model(text: str) -> FunctionalModel:
    """Parse a model document, reporting positions and validation codes."""
    sections: dict[str, tuple[int, str, list[tuple[int, str]]]] = {}
    current: str | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        content = raw.split("#", 1)[0]
        if not content.strip():
            continue
        if content[0] not in " \t":
            head, sep, rest = content.partition(":")
            if not sep:
                _fail("expected ':' after the section name", CODE_SYNTAX, lineno)
            name = " ".join(head.split())
            if name not in _SECTIONS:
                _fail(f"unknown section {name!r}", CODE_SYNTAX, lineno)
            if name in sections:
                _fail(f"section {name!r} appears twice", CODE_SYNTAX, lineno)
            sections[name] = (lineno, rest.strip(), [])
            current = name
        else:
            if current is None:
                _fail("indented line before any section", CODE_SYNTAX, lineno)
            sections[current][2].append((lineno, content.strip()))

    # theta and observations: labels on the header line, no items.
    frames: dict[str, tuple[tuple[str, ...], int]] = {}
    for name in ("theta", "observations"):
        if name not in sections:
            _fail(f"missing section {name!r}", CODE_SYNTAX)
        lineno, rest, items = sections[name]
        if items:
            _fail(f"section {name!r} takes its labels on the header line", CODE_SYNTAX, items[0][0])
        labels = [_check_label(tok, lineno) for tok in rest.split()]
        if not labels:
            _fail(f"section {name!r} lists no labels", CODE_SYNTAX, lineno)
        frames[name] = (_unique_labels(labels, name, lineno), lineno)

    # Exactly one source flavor.
    if "source" in sections and "source product" in sections:
        _fail("give either 'source' or 'source product', not both", CODE_SYNTAX,
              sections["source product"][0])
    if "source" in sections:
        source_labels, source_weights, source_line = _parse_flat_source(sections["source"])
    elif "source product" in sections:
        source_labels, source_weights, source_line = _parse_product_source(
            sections["source product"]
        )
    else:
        _fail("missing section 'source'", CODE_SYNTAX)

    if "map" not in sections:
        _fail("missing section 'map'", CODE_SYNTAX)

    theta = _build_frame(frames["theta"][0], "parameter", "theta", frames["theta"][1])
    observations = _build_frame(
        frames["observations"][0], "observation", "observations", frames["observations"][1]
    )
    source = _build_frame(source_labels, "source", "source", source_line)
    distribution = Distribution(source, tuple(source_weights))

    mapping = _parse_map(sections["map"], theta, source, observations)
    return FunctionalModel(theta, source, observations, distribution, mapping)


def _parse_flat_source(section) -> tuple[tuple[str, ...], list[Fraction], int]:
    lineno, rest, items = section
    if rest:
        _fail("source entries belong on indented lines", CODE_SYNTAX, lineno)
    if not items:
        _fail("source lists no outcomes", CODE_SYNTAX, lineno)
    labels: list[str] = []
    weights: list[Fraction] = []
    for item_line, body in items:
        left, sep, right = body.partition("=")
        if not sep:
            _fail("expected 'label = probability'", CODE_SYNTAX, item_line)
        label = left.strip()
        if any(ch.isspace() for ch in label):
            _fail(f"label {label!r} contains whitespace", CODE_SYNTAX, item_line)
        _check_label(label, item_line)
        if label in labels:
            _fail(f"duplicate label {label!r} in source", CODE_DUPLICATE_LABEL, item_line)
        weight = _parse_weight(right.strip(), item_line)
        if weight < 0:
            _fail(f"negative probability {weight} for {label!r}", CODE_SUM_VIOLATION, item_line)
        labels.append(label)
        weights.append(weight)
    total = sum(weights)
    if total != 1:
        _fail(f"source probabilities sum to {total}, not 1", CODE_SUM_VIOLATION, lineno)
    return tuple(labels), weights, lineno


def _parse_product_source(section) -> tuple[tuple[str, ...], list[Fraction], int]:
    lineno, rest, items = section
    if rest:
        _fail("factors belong on indented lines", CODE_SYNTAX, lineno)
    factors: list[list[tuple[str, Fraction]]] = []
    for item_line, body in items:
        head, sep, entries = body.partition(":")
        if not sep or head.strip() != "factor":
            _fail("expected 'factor: label=probability ...'", CODE_SYNTAX, item_line)
        factor: list[tuple[str, Fraction]] = []
        for token in entries.split():
            left, sep, right = token.partition("=")
            if not sep:
                _fail(f"expected label=probability, got {token!r}", CODE_SYNTAX, item_line)
            label = _check_label(left, item_line)
            if any(label == seen for seen, _ in factor):
                _fail(f"duplicate label {label!r} in factor", CODE_DUPLICATE_LABEL, item_line)
            weight = _parse_weight(right, item_line)
            if weight < 0:
                _fail(f"negative probability {weight} for {label!r}", CODE_SUM_VIOLATION, item_line)
            factor.append((label, weight))
        if not factor:
            _fail("factor lists no outcomes", CODE_SYNTAX, item_line)
        total = sum(w for _, w in factor)
        if total != 1:
            _fail(f"factor probabilities sum to {total}, not 1", CODE_SUM_VIOLATION, item_line)
        factors.append(factor)
    if not factors:
        _fail("product source lists no factors", CODE_SYNTAX, lineno)
    labels: list[str] = []
    weights: list[Fraction] = []
    for combo in product(*factors):
        label = "".join(part for part, _ in combo)
        weight = Fraction(1)
        for _, w in combo:
            weight *= w
        if label in labels:
            _fail(f"expanded product label {label!r} collides", CODE_DUPLICATE_LABEL, lineno)
        labels.append(label)
        weights.append(weight)
    return tuple(labels), weights, lineno


def _parse_map(section, theta: Frame, source: Frame, observations: Frame):
    lineno, rest, items = section
    if rest:
        _fail("map entries belong on indented lines", CODE_SYNTAX, lineno)
    mapping: dict[tuple[str, str], str] = {}
    for item_line, body in items:
        tokens = body.split()
        if len(tokens) != 4 or tokens[2] != "->":
            _fail("expected 'parameter source -> observation'", CODE_SYNTAX, item_line)
        t, o, x = tokens[0], tokens[1], tokens[3]
        for label, frame, section_name in (
            (t, theta, "theta"),
            (o, source, "source"),
            (x, observations, "observations"),
        ):
            if label not in frame:
                _fail(
                    f"label {label!r} is not declared in {section_name}",
                    CODE_UNKNOWN_LABEL,
                    item_line,
                )
        if (t, o) in mapping:
            _fail(f"duplicate map entry for ({t}, {o})", CODE_FUNCTION_TABLE, item_line)
        mapping[(t, o)] = x
    for t in theta.labels:
        for o in source.labels:
            if (t, o) not in mapping:
                _fail(f"map entry for ({t}, {o}) is missing", CODE_FUNCTION_TABLE, lineno)
    return mapping


def serialize_model(model: FunctionalModel) -> str:
    """Render a model canonically; parse(serialize(m)) reproduces m exactly."""
    lines = [
        "theta: " + " ".join(model.parameter_frame.labels),
        "observations: " + " ".join(model.observation_frame.labels),
        "source:",
    ]
    for label, weight in model.source_distribution.items():
        lines.append(f"  {label} = {weight}")
    lines.append("map:")
    for t in model.parameter_frame.labels:
        for o in model.source_frame.labels:
            lines.append(f"  {t} {o} -> {model.observation_map[(t, o)]}")
    return "\n".join(lines) + "\n"


def load_model(path: str) -> FunctionalModel:
    """Read and parse a model file."""
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as err:
        raise ModelValidationError(str(err), CODE_SYNTAX) from err
    return parse_model(text)

"""Declarative job configs: a JSON document selecting age, tasks, emissions.

Unknown keys are rejected; every diagnostic carries the JSON path of the
offending field. Age literals mirror the spec constructors, e.g.::

    {"age": {"times_q": {"finite_model": {"signature": ["edge"], "n": 2,
                                          "relations": {"edge": [[0,1],[1,0]]}}}},
     "N": 6, "tasks": ["sl2-check", "verma"], "emit": ["dot", "json"]}
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .ages import (
    AgeSpec,
    DisjointUnion,
    FiniteModel,
    LinearOrders,
    MultisetOver,
    Sets,
    TimesQ,
    colored,
    has_measure,
)
from .scalars import LAMBDA, Scalar, rational_from_string
from .structures import FiniteStructure, structure


class ConfigError(ValueError):
    """Schema violation; message includes the JSON path of the field."""


KNOWN_TASKS = ("enumerate", "measure-check", "sl2-check", "glr-check", "verma", "diagnostics")
MEASURE_TASKS = {"measure-check", "sl2-check", "glr-check", "verma"}
KNOWN_EMITS = ("json", "table", "dot")
DEFAULT_CLASS_CAP = 20000


@dataclass(frozen=True)
class Task:
    name: str
    r: int | None = None  # only for glr-check

    def label(self) -> str:
        return self.name if self.r is None else f"{self.name}(r={self.r})"


@dataclass(frozen=True)
class JobConfig:
    age: AgeSpec
    bound: int
    tasks: tuple[Task, ...]
    emit: tuple[str, ...] = ("json",)
    specialize: Fraction | None = None
    max_classes_per_level: int = DEFAULT_CLASS_CAP
    source: dict = field(default_factory=dict, compare=False)


def _expect_mapping(value, path: str) -> dict:
    if not isinstance(value, dict):
        raise ConfigError(f"{path}: expected an object, got {type(value).__name__}")
    return value


def _reject_unknown(mapping: dict, allowed, path: str):
    unknown = set(mapping) - set(allowed)
    if unknown:
        raise ConfigError(f"{path}: unknown keys {sorted(unknown)}; allowed: {sorted(allowed)}")


def parse_structure_literal(value, path: str) -> FiniteStructure:
    mapping = _expect_mapping(value, path)
    _reject_unknown(mapping, ("signature", "n", "relations", "colors"), path)
    for key in ("signature", "n"):
        if key not in mapping:
            raise ConfigError(f"{path}: missing key {key!r}")
    symbols = mapping["signature"]
    if not isinstance(symbols, list) or not all(isinstance(s, str) for s in symbols):
        raise ConfigError(f"{path}.signature: expected a list of names")
    n = mapping["n"]
    if not isinstance(n, int) or n < 0:
        raise ConfigError(f"{path}.n: expected a nonnegative integer")
    relations = mapping.get("relations", {})
    rel_map = {}
    for sym, pairs in _expect_mapping(relations, f"{path}.relations").items():
        if sym not in symbols:
            raise ConfigError(f"{path}.relations.{sym}: not in signature")
        if not isinstance(pairs, list):
            raise ConfigError(f"{path}.relations.{sym}: expected a list of pairs")
        parsed = []
        for k, pair in enumerate(pairs):
            if (
                not isinstance(pair, list)
                or len(pair) != 2
                or not all(isinstance(x, int) for x in pair)
            ):
                raise ConfigError(f"{path}.relations.{sym}[{k}]: expected [a, b]")
            parsed.append((pair[0], pair[1]))
        rel_map[sym] = parsed
    try:
        return structure(symbols, n, rel_map)
    except ValueError as exc:
        raise ConfigError(f"{path}: {exc}") from exc


def _parse_lambda(value, path: str) -> Scalar:
    if value == "symbolic":
        return LAMBDA
    if isinstance(value, int):
        return Scalar.from_int(value)
    if isinstance(value, str):
        return Scalar.from_fraction(rational_from_string(value))
    raise ConfigError(f"{path}: expected \"symbolic\" or a rational string")


def parse_age_literal(value, path: str = "age") -> AgeSpec:
    mapping = _expect_mapping(value, path)
    if len(mapping) != 1:
        raise ConfigError(f"{path}: expected exactly one age constructor key")
    (kind, body), = mapping.items()
    if kind == "sets":
        body = _expect_mapping(body, f"{path}.sets")
        _reject_unknown(body, ("lambda",), f"{path}.sets")
        return Sets(_parse_lambda(body.get("lambda", "symbolic"), f"{path}.sets.lambda"))
    if kind == "linear_orders":
        _reject_unknown(_expect_mapping(body, f"{path}.linear_orders"), (), f"{path}.linear_orders")
        return LinearOrders()
    if kind == "finite_model":
        return FiniteModel(parse_structure_literal(body, f"{path}.finite_model"))
    if kind == "disjoint_union":
        if isinstance(body, list):
            comps, rule = body, "product"
        else:
            body = _expect_mapping(body, f"{path}.disjoint_union")
            _reject_unknown(body, ("components", "rule"), f"{path}.disjoint_union")
            comps = body.get("components")
            rule = body.get("rule", "product")
        if not isinstance(comps, list) or len(comps) < 2:
            raise ConfigError(f"{path}.disjoint_union: expected a list of >= 2 components")
        parsed = tuple(
            parse_age_literal(c, f"{path}.disjoint_union[{k}]") for k, c in enumerate(comps)
        )
        try:
            return DisjointUnion(parsed, rule)
        except ValueError as exc:
            raise ConfigError(f"{path}.disjoint_union: {exc}") from exc
    if kind == "times_q":
        return TimesQ(parse_age_literal(body, f"{path}.times_q"))
    if kind == "multiset_over":
        return MultisetOver(parse_age_literal(body, f"{path}.multiset_over"))
    if kind == "colored":
        body = _expect_mapping(body, f"{path}.colored")
        _reject_unknown(body, ("base", "m"), f"{path}.colored")
        if "base" not in body or "m" not in body:
            raise ConfigError(f"{path}.colored: needs keys 'base' and 'm'")
        m = body["m"]
        if not isinstance(m, int) or m < 2:
            raise ConfigError(f"{path}.colored.m: expected an integer >= 2")
        return colored(parse_age_literal(body["base"], f"{path}.colored.base"), m)
    raise ConfigError(f"{path}: unknown age constructor {kind!r}")


def _parse_task(value, path: str) -> Task:
    if isinstance(value, str):
        if value == "glr-check":
            raise ConfigError(f"{path}: glr-check needs r, write {{\"glr-check\": {{\"r\": 3}}}}")
        if value not in KNOWN_TASKS:
            raise ConfigError(f"{path}: unknown task {value!r}; known: {list(KNOWN_TASKS)}")
        return Task(value)
    mapping = _expect_mapping(value, path)
    if len(mapping) != 1 or "glr-check" not in mapping:
        raise ConfigError(f"{path}: expected a task name or {{\"glr-check\": {{\"r\": ...}}}}")
    body = _expect_mapping(mapping["glr-check"], f"{path}.glr-check")
    _reject_unknown(body, ("r",), f"{path}.glr-check")
    r = body.get("r")
    if not isinstance(r, int) or r < 2:
        raise ConfigError(f"{path}.glr-check.r: expected an integer >= 2")
    return Task("glr-check", r)


def parse_config_data(data) -> JobConfig:
    mapping = _expect_mapping(data, "config")
    _reject_unknown(
        mapping,
        ("age", "N", "tasks", "emit", "specialize", "max_classes_per_level"),
        "config",
    )
    for key in ("age", "N", "tasks"):
        if key not in mapping:
            raise ConfigError(f"config: missing key {key!r}")
    age = parse_age_literal(mapping["age"], "age")
    bound = mapping["N"]
    if not isinstance(bound, int) or bound < 0:
        raise ConfigError("N: expected a nonnegative integer")
    raw_tasks = mapping["tasks"]
    if not isinstance(raw_tasks, list) or not raw_tasks:
        raise ConfigError("tasks: expected a non-empty list")
    tasks = tuple(_parse_task(t, f"tasks[{k}]") for k, t in enumerate(raw_tasks))
    if not has_measure(age):
        for t in tasks:
            if t.name in MEASURE_TASKS:
                raise ConfigError(
                    f"tasks: {t.label()} needs a measure but the age is counting-only"
                )
    emit = mapping.get("emit", ["json"])
    if not isinstance(emit, list) or not all(e in KNOWN_EMITS for e in emit):
        raise ConfigError(f"emit: expected a subset of {list(KNOWN_EMITS)}")
    spec_point = None
    if "specialize" in mapping:
        body = _expect_mapping(mapping["specialize"], "specialize")
        _reject_unknown(body, ("lambda",), "specialize")
        if "lambda" not in body:
            raise ConfigError("specialize: needs key 'lambda'")
        try:
            spec_point = rational_from_string(str(body["lambda"]))
        except ValueError as exc:
            raise ConfigError(f"specialize.lambda: {exc}") from exc
    cap = mapping.get("max_classes_per_level", DEFAULT_CLASS_CAP)
    if not isinstance(cap, int) or cap < 1:
        raise ConfigError("max_classes_per_level: expected a positive integer")
    return JobConfig(
        age=age,
        bound=bound,
        tasks=tasks,
        emit=tuple(emit),
        specialize=spec_point,
        max_classes_per_level=cap,
        source=mapping,
    )


def parse_config(text: str) -> JobConfig:
    """Parse and validate a config document; JSON errors keep line info."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from exc
    return parse_config_data(data)

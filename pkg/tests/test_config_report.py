"""Config parsing, the job runner, and report serialization."""

import json

import pytest

from orbitalgebra import Sets, TimesQ, build_sl2_action, measure_for
from orbitalgebra.config import ConfigError, parse_config
from orbitalgebra.dot import emit_dot
from orbitalgebra.report import run

K2_LITERAL = {
    "signature": ["edge"],
    "n": 2,
    "relations": {"edge": [[0, 1], [1, 0]]},
}

FIB_CONFIG = {
    "age": {"times_q": {"finite_model": K2_LITERAL}},
    "N": 6,
    "tasks": ["enumerate", "sl2-check", "verma"],
    "emit": ["dot", "json"],
}


def test_minimal_config():
    job = parse_config(json.dumps({
        "age": {"sets": {"lambda": "symbolic"}},
        "N": 4,
        "tasks": ["verma"],
    }))
    assert job.bound == 4
    assert job.emit == ("json",)
    assert isinstance(job.age, Sets)


def test_fibonacci_config():
    job = parse_config(json.dumps(FIB_CONFIG))
    assert isinstance(job.age, TimesQ)
    assert job.emit == ("dot", "json")


def test_unknown_keys_rejected():
    with pytest.raises(ConfigError, match="config: unknown keys"):
        parse_config(json.dumps({
            "age": {"sets": {}}, "N": 1, "tasks": ["verma"], "bogus": 1,
        }))
    with pytest.raises(ConfigError, match=r"age\.sets"):
        parse_config(json.dumps({
            "age": {"sets": {"mu": 3}}, "N": 1, "tasks": ["verma"],
        }))


def test_invalid_json_reports_position():
    with pytest.raises(ConfigError, match="line"):
        parse_config("{\n  broken\n}")


def test_structure_literal_errors_carry_paths():
    bad = {
        "age": {"finite_model": {"signature": ["edge"], "n": 2,
                                 "relations": {"edge": [[0, 7]]}}},
        "N": 2,
        "tasks": ["enumerate"],
    }
    with pytest.raises(ConfigError, match=r"age\.finite_model"):
        parse_config(json.dumps(bad))


def test_counting_only_measure_task_rejected():
    cfg = {
        "age": {"multiset_over": {"linear_orders": {}}},
        "N": 4,
        "tasks": ["sl2-check"],
    }
    with pytest.raises(ConfigError, match="counting-only"):
        parse_config(json.dumps(cfg))


def test_glr_check_needs_r():
    cfg = {"age": {"sets": {}}, "N": 2, "tasks": ["glr-check"]}
    with pytest.raises(ConfigError, match="glr-check"):
        parse_config(json.dumps(cfg))
    cfg["tasks"] = [{"glr-check": {"r": 1}}]
    with pytest.raises(ConfigError, match=r"r: expected an integer >= 2"):
        parse_config(json.dumps(cfg))


def test_run_fibonacci_job():
    job = parse_config(json.dumps(FIB_CONFIG))
    report, artifacts = run(job)
    assert not report.failed
    enum = report.results[0]
    assert enum.task.name == "enumerate"
    assert enum.payload["coefficients"] == [1, 1, 2, 3, 5, 8, 13]
    assert "e_action.dot" in artifacts and "f_action.dot" in artifacts


def test_run_sets_job_single_string():
    job = parse_config(json.dumps({
        "age": {"sets": {"lambda": "symbolic"}},
        "N": 5,
        "tasks": ["verma"],
    }))
    report, _ = run(job)
    (res,) = report.results
    assert res.status == "pass"
    mults = [e["multiplicity"] for e in res.payload["entries"]]
    assert mults == [1, 0, 0, 0, 0, 0]


def test_run_sum_rule_job_fails_with_witness():
    job = parse_config(json.dumps({
        "age": {"disjoint_union": {
            "components": [{"sets": {"lambda": "symbolic"}},
                           {"sets": {"lambda": "7/2"}}],
            "rule": "sum"}},
        "N": 3,
        "tasks": ["measure-check"],
    }))
    report, _ = run(job)
    assert report.failed
    (res,) = report.results
    assert res.status == "fail"
    assert res.payload["violations"]


def test_json_determinism_and_no_timing():
    job = parse_config(json.dumps(FIB_CONFIG))
    first, _ = run(job)
    second, _ = run(job)
    assert first.to_json() == second.to_json()
    assert "seconds" not in first.to_json()
    data = json.loads(first.to_json())
    assert data["schema_version"] == "1"


def test_resource_cap_keeps_partial_results():
    job = parse_config(json.dumps({
        "age": {"times_q": {"finite_model": K2_LITERAL}},
        "N": 8,
        "tasks": ["enumerate", "verma"],
        "max_classes_per_level": 5,
    }))
    report, _ = run(job)
    enum, verma = report.results
    assert enum.status == "fail"
    assert enum.payload["coefficients"] == [1, 1, 2, 3, 5]
    assert enum.payload["resource_bound_exceeded"]["cap"] == 5
    assert verma.status == "skipped"
    assert report.failed


def test_specialized_run():
    job = parse_config(json.dumps({
        "age": {"sets": {"lambda": "symbolic"}},
        "N": 4,
        "tasks": ["sl2-check"],
        "specialize": {"lambda": "5/2"},
    }))
    report, _ = run(job)
    (res,) = report.results
    assert res.status == "pass"
    assert res.payload["mu_X"] == "5/2"


# --- DOT ---------------------------------------------------------------------

def dot_nodes(text):
    import re

    return {
        label: node
        for node, label in re.findall(r'(\w+) \[label="([^"]*)"\];', text)
    }


def test_dot_contains_figure_edge(fibonacci_age):
    m = measure_for(fibonacci_age)
    action = build_sl2_action(fibonacci_age, m, 4)
    text = emit_dot(action, "e")
    name = dot_nodes(text)
    assert f'  {name["[1,1]"]} -> {name["[2,1]"]} [label="2"];' in text.splitlines()
    ftext = emit_dot(action, "f")
    fname = dot_nodes(ftext)
    assert (
        f'  {fname["[1,1,1,1]"]} -> {fname["[1,1,1]"]} [label="-8"];'
        in ftext.splitlines()
    )


def test_dot_edge_count_matches_entries(fibonacci_age):
    m = measure_for(fibonacci_age)
    action = build_sl2_action(fibonacci_age, m, 4)
    text = emit_dot(action, "e")
    edge_lines = [l for l in text.splitlines() if "->" in l]
    expected = sum(len(action.e[n].entries) for n in range(4))
    assert len(edge_lines) == expected


def test_dot_level_zero(fibonacci_age):
    m = measure_for(fibonacci_age)
    action = build_sl2_action(fibonacci_age, m, 0)
    text = emit_dot(action, "e")
    assert '[label="∅"]' in text
    assert "->" not in text

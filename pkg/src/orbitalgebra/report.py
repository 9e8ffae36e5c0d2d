"""Job orchestration: run configured tasks and serialize the results.

Task order follows the data dependencies (enumerate, then measure and
operator checks, then decompositions and diagnostics); a failing check is
reported but does not stop independent later tasks. Serialized JSON is
byte-identical across runs of the same config: wall times appear only in
the human-readable table.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from .ages import enumerate_level, has_measure, is_infinite, specialize_age
from .config import JobConfig, Task
from .dot import class_descriptor, emit_dot
from .measures import measure_for, verify_r_measure
from .operators import (
    ActionTruncation,
    LevelMatrix,
    build_sl2_action,
    verify_glr_relations,
    verify_sl2_relations,
)
from .verma import (
    character_identity_holds,
    finite_case_decomposition,
    kernel_cross_check,
    sequence_diagnostics,
    verma_multiplicities,
)

SCHEMA_VERSION = "1"

TASK_ORDER = ("enumerate", "measure-check", "sl2-check", "glr-check", "verma", "diagnostics")


@dataclass
class TaskResult:
    task: Task
    status: str  # "pass" | "fail" | "skipped"
    payload: dict
    seconds: float


@dataclass
class JobReport:
    config: JobConfig
    results: list[TaskResult] = field(default_factory=list)

    @property
    def failed(self) -> bool:
        return any(r.status == "fail" for r in self.results)

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "config": self.config.source,
            "tasks": [
                {
                    "task": r.task.label(),
                    "status": r.status,
                    "payload": r.payload,
                }
                for r in self.results
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    def to_table(self) -> str:
        lines = [f"{'task':<18} {'status':<8} {'time':>8}"]
        for r in self.results:
            lines.append(f"{r.task.label():<18} {r.status:<8} {r.seconds:>7.2f}s")
            for key in sorted(r.payload):
                value = r.payload[key]
                if isinstance(value, (list, dict)):
                    rendered = json.dumps(value, ensure_ascii=False)
                    if len(rendered) > 100:
                        rendered = rendered[:97] + "..."
                else:
                    rendered = str(value)
                lines.append(f"    {key}: {rendered}")
        return "\n".join(lines) + "\n"


def matrix_to_dict(mat: LevelMatrix) -> dict:
    def level_key(level):
        return list(level) if isinstance(level, tuple) else level

    return {
        "source_level": level_key(mat.source),
        "target_level": level_key(mat.target),
        "entries": [
            {"row": t, "col": s, "value": v.render()}
            for (t, s), v in sorted(mat.entries.items())
        ],
    }


def run(job: JobConfig) -> tuple[JobReport, dict[str, str]]:
    """Execute a job; returns the report plus named emission artifacts."""
    age = job.age
    if job.specialize is not None:
        age = specialize_age(age, job.specialize)
    report = JobReport(job)
    artifacts: dict[str, str] = {}

    requested = {t.name: t for t in job.tasks}
    measured = has_measure(age)
    measure = measure_for(age) if measured else None

    # --- enumerate (always needed; reported when requested) ---------------
    t0 = time.perf_counter()
    coeffs: list[int] = []
    cap_hit = None
    for n in range(job.bound + 1):
        classes = enumerate_level(age, n)
        if len(classes) > job.max_classes_per_level:
            cap_hit = (n, len(classes))
            break
        coeffs.append(len(classes))
    enum_seconds = time.perf_counter() - t0
    levels_payload = [
        {
            "level": n,
            "classes": [
                {"id": c.iso_id, "descriptor": class_descriptor(age, c.rep)}
                for c in enumerate_level(age, n)
            ],
        }
        for n in range(len(coeffs))
    ]
    enum_payload = {"coefficients": coeffs, "levels": levels_payload}
    if cap_hit is not None:
        enum_payload["resource_bound_exceeded"] = {
            "level": cap_hit[0],
            "classes": cap_hit[1],
            "cap": job.max_classes_per_level,
        }
    if "enumerate" in requested:
        status = "fail" if cap_hit else "pass"
        report.results.append(TaskResult(requested["enumerate"], status, enum_payload, enum_seconds))

    def add_skipped(task: Task, reason: str):
        report.results.append(TaskResult(task, "skipped", {"reason": reason}, 0.0))

    remaining = [t for t in job.tasks if t.name != "enumerate"]
    remaining.sort(key=lambda t: TASK_ORDER.index(t.name))
    if cap_hit is not None:
        for t in remaining:
            add_skipped(t, "level enumeration cap exceeded; partial results kept")
        return report, artifacts

    action: ActionTruncation | None = None

    for task in remaining:
        t0 = time.perf_counter()
        if task.name == "measure-check":
            rep = verify_r_measure(measure, job.bound)
            payload = rep.as_dict()
            status = "pass" if rep.passed else "fail"
        elif task.name == "sl2-check":
            try:
                rep = verify_sl2_relations(age, measure, job.bound)
            except ZeroDivisionError as exc:
                report.results.append(
                    TaskResult(task, "skipped", {"reason": str(exc)}, time.perf_counter() - t0)
                )
                continue
            action = build_sl2_action(age, measure, job.bound)
            payload = rep.as_dict()
            payload["mu_X"] = action.mu_x.render()
            payload["h"] = [
                {"level": n, "weight": action.h[n].render()} for n in range(job.bound + 1)
            ]
            payload["e_matrices"] = [matrix_to_dict(action.e[n]) for n in range(job.bound)]
            payload["f_matrices"] = [
                matrix_to_dict(action.f[n]) for n in range(1, job.bound + 1)
            ]
            status = "pass" if rep.passed else "fail"
        elif task.name == "glr-check":
            rep = verify_glr_relations(age, measure, task.r, job.bound)
            payload = rep.as_dict()
            payload["r"] = task.r
            status = "pass" if rep.passed else "fail"
        elif task.name == "verma":
            if is_infinite(age):
                from .measures import total_point_measure

                mu_x = total_point_measure(measure)
                dec = verma_multiplicities(coeffs, mu_x)
                payload = dec.as_dict()
                payload["character_identity"] = character_identity_holds(
                    coeffs, dec.multiplicities()
                )
                try:
                    if action is None or action.bound < job.bound:
                        action = build_sl2_action(age, measure, job.bound)
                    kernel = kernel_cross_check(action)
                    payload["kernel_check"] = kernel.as_dict()
                    kernel_ok = kernel.status != "ok" or kernel.passed
                except ZeroDivisionError as exc:
                    payload["kernel_check"] = {"status": "skipped-nonregular", "note": str(exc)}
                    kernel_ok = True
                status = "pass" if payload["character_identity"] and kernel_ok else "fail"
            else:
                fc = finite_case_decomposition(coeffs, age_size(age))
                payload = {"finite_case": fc.as_dict()}
                status = "pass" if fc.symmetric and fc.unimodal else "fail"
        elif task.name == "diagnostics":
            payload = sequence_diagnostics(coeffs).as_dict()
            status = "pass"
        else:  # pragma: no cover - parse_config rejects unknown tasks
            raise AssertionError(task.name)
        report.results.append(TaskResult(task, status, payload, time.perf_counter() - t0))

    if "dot" in job.emit:
        if action is None:
            if measured:
                try:
                    action = build_sl2_action(age, measure, job.bound)
                except ZeroDivisionError:
                    action = build_sl2_action(age, None, job.bound)
            else:
                action = build_sl2_action(age, None, job.bound)
        artifacts["e_action.dot"] = emit_dot(action, "e")
        if action.f:
            artifacts["f_action.dot"] = emit_dot(action, "f")
    return report, artifacts


def age_size(age) -> int:
    """Vertex count of the ambient set of a finite age."""
    from .ages import DisjointUnion, FiniteModel

    if isinstance(age, FiniteModel):
        return age.model.n
    if isinstance(age, DisjointUnion):
        return sum(age_size(c) for c in age.components)
    raise ValueError(f"not a finite age: {age!r}")

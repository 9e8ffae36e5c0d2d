"""Decomposition of the graded invariant space into lowest-weight strings.

Each string contributes the constant sequence 1,1,1,... starting at its
birth level, so multiplicities are first differences of the orbit counts.
The lowering-kernel dimensions provide an independent, measure-dependent
witness for the same numbers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .ages import enumerate_level
from .linalg import matrix_rank
from .operators import ActionTruncation, dense_rows
from .scalars import Scalar


class DecreasingSequenceError(ValueError):
    """A decreasing orbit-count sequence: finite or non-oligomorphic input."""


@dataclass(frozen=True)
class VermaDecomposition:
    mu_x: Scalar
    entries: tuple[tuple[int, Scalar, int], ...]  # (level, lowest weight, multiplicity)

    def multiplicities(self) -> list[int]:
        return [m for (_, _, m) in self.entries]

    def as_dict(self) -> dict:
        return {
            "mu_X": self.mu_x.render(),
            "entries": [
                {"level": n, "lowest_weight": w.render(), "multiplicity": m}
                for (n, w, m) in self.entries
            ],
        }


def verma_multiplicities(a: list[int], mu_x: Scalar) -> VermaDecomposition:
    """Multiplicities m_n = a_n - a_{n-1} with lowest weights 2n - mu(X)."""
    entries = []
    prev = 0
    for n, an in enumerate(a):
        m = an - prev
        if m < 0:
            raise DecreasingSequenceError(
                f"a_{n} = {an} < a_{n-1} = {prev}: not an infinite-age sequence"
            )
        entries.append((n, Scalar.from_int(2 * n) - mu_x, m))
        prev = an
    return VermaDecomposition(mu_x, tuple(entries))


def character_identity_holds(a: list[int], m: list[int]) -> bool:
    """(1-q) * sum a_n q^n == sum m_n q^n as truncated polynomials."""
    if len(a) != len(m):
        return False
    lhs = [a[0]] + [a[n] - a[n - 1] for n in range(1, len(a))]
    return lhs == list(m)


@dataclass
class KernelReport:
    status: str  # "ok" | "skipped-nonregular"
    passed: bool
    per_level: list[tuple[int, int, int]] = field(default_factory=list)  # (n, dim ker, expected)

    def as_dict(self) -> dict:
        return {
            "status": self.status,
            "passed": self.passed,
            "per_level": [
                {"level": n, "kernel_dim": k, "expected": e}
                for (n, k, e) in self.per_level
            ],
        }


def kernel_cross_check(action: ActionTruncation) -> KernelReport:
    """Assert dim ker(f at level n) equals the first difference a_n - a_{n-1}.

    Skipped (with explicit status) when the measure vanishes on any
    enumerated class, since the lowering ratios are then meaningless.
    """
    age, measure = action.age, action.measure
    if measure is None:
        raise ValueError("kernel check needs a measure")
    for n in range(action.bound + 2):
        for cls in enumerate_level(age, n):
            measure.value(cls.rep)
    if measure.zero_classes:
        return KernelReport("skipped-nonregular", passed=False)

    coeffs = action.coeffs()
    per_level = []
    ok = True
    for n in range(action.bound):
        source_ids = action.level_ids(n)
        target_ids = action.level_ids(n - 1)
        expected = coeffs[n] - (coeffs[n - 1] if n > 0 else 0)
        if n == 0:
            dim = len(source_ids)
        else:
            rows = dense_rows(action.f[n], target_ids, source_ids)
            dim = len(source_ids) - matrix_rank(rows)
        per_level.append((n, dim, expected))
        ok = ok and dim == expected
    return KernelReport("ok", passed=ok, per_level=per_level)


@dataclass(frozen=True)
class SequenceDiagnostics:
    monotone: bool
    symmetric: bool
    unimodal: bool
    log_concave: bool

    def as_dict(self) -> dict:
        return {
            "monotone": self.monotone,
            "symmetric": self.symmetric,
            "unimodal": self.unimodal,
            "log_concave": self.log_concave,
        }


def sequence_diagnostics(a: list[int]) -> SequenceDiagnostics:
    """Shape flags for the truncated sequence; no claims beyond the range."""
    monotone = all(a[i] <= a[i + 1] for i in range(len(a) - 1))
    symmetric = all(a[i] == a[len(a) - 1 - i] for i in range(len(a)))
    peak = 0
    for i in range(1, len(a)):
        if a[i] > a[peak]:
            peak = i
    unimodal = all(a[i] <= a[i + 1] for i in range(peak)) and all(
        a[i] >= a[i + 1] for i in range(peak, len(a) - 1)
    )
    log_concave = all(
        a[i] * a[i] >= a[i - 1] * a[i + 1] for i in range(1, len(a) - 1)
    )
    return SequenceDiagnostics(monotone, symmetric, unimodal, log_concave)


@dataclass
class FiniteCaseReport:
    symmetric: bool
    unimodal: bool
    multiplicities: list[int] | None
    staircase_stable_from: int | None

    def as_dict(self) -> dict:
        return {
            "symmetric": self.symmetric,
            "unimodal": self.unimodal,
            "multiplicities": self.multiplicities,
            "staircase_stable_from": self.staircase_stable_from,
        }


def finite_case_decomposition(a: list[int], x_size: int | None) -> FiniteCaseReport:
    """Shape report for finite ambient sets (or the mixed finite+infinite case).

    With ``x_size`` given, checks the palindrome a_n = a_{|X|-n} and
    unimodality. Without it (mixed case, counts eventually constant), the
    first differences form a 0/1 staircase and the report locates where the
    sequence stabilizes.
    """
    diag = sequence_diagnostics(a)
    if x_size is not None:
        span = a[: x_size + 1]
        symmetric = all(
            span[n] == span[x_size - n] for n in range(min(len(span), x_size + 1))
        )
        return FiniteCaseReport(symmetric, diag.unimodal, None, None)
    mults = [a[0]] + [a[n] - a[n - 1] for n in range(1, len(a))]
    staircase = all(m in (0, 1) for m in mults) and all(
        mults[k] >= mults[k + 1] for k in range(len(mults) - 1)
    )
    stable_from = sum(mults) - 1 if staircase else None
    return FiniteCaseReport(diag.symmetric, diag.unimodal, mults, stable_from)

"""Measures on ages and the amalgamation-axiom verifier.

A measure assigns every member of an age a nonzero scalar, normalized at
the empty structure, isomorphism-invariant, and multiplicative over
amalgamations: nu(s1) * nu(s2) = nu(s0) * sum(nu(a_i)) over the
amalgamations of any two extensions of a common base. Checking this for
one-point amalgamations suffices, which is exactly what the verifier does.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .ages import (
    AgeSpec,
    DisjointUnion,
    FiniteModel,
    LinearOrders,
    Sets,
    TimesQ,
    age_signature,
    du_parts,
    enumerate_level,
    has_measure,
    one_point_amalgamations,
    one_point_extensions,
    timesq_blocks,
)
from .scalars import ONE, Scalar, falling_factorial
from .structures import FiniteStructure, canonical_form, count_embeddings


class CountingOnlyError(ValueError):
    """Raised when a measure is requested for a counting-only age."""


class RMeasure:
    """Evaluates the measure of an age's members, memoized by iso class.

    Zero values are legal outputs (they arise from non-regular parameter
    choices) but are recorded in ``zero_classes`` so callers can gate
    measure-sensitive computations on regularity.
    """

    def __init__(self, age: AgeSpec):
        if not has_measure(age):
            raise CountingOnlyError(f"age has no measure: {age!r}")
        self.age = age
        self._memo: dict[str, Scalar] = {}
        self._zero: dict[str, int] = {}
        self._components = None
        self._inner = None
        if isinstance(age, DisjointUnion):
            self._components = [RMeasure(c) for c in age.components]
        if isinstance(age, TimesQ):
            self._inner = RMeasure(age.inner)

    def value(self, s: FiniteStructure) -> Scalar:
        cid = canonical_form(s)
        if cid in self._memo:
            return self._memo[cid]
        val = self._evaluate(s)
        self._memo[cid] = val
        if val.is_zero():
            self._zero[cid] = s.n
        return val

    def _evaluate(self, s: FiniteStructure) -> Scalar:
        age = self.age
        if isinstance(age, Sets):
            return falling_factorial(age.lam, s.n)
        if isinstance(age, LinearOrders):
            return Scalar.from_int((-1) ** s.n)
        if isinstance(age, FiniteModel):
            return Scalar.from_int(count_embeddings(s, age.model))
        if isinstance(age, TimesQ):
            blocks = timesq_blocks(age, s)
            if blocks is None:
                raise ValueError("not a member of the stacked age")
            acc = Scalar.from_int((-1) ** len(blocks))
            for b in blocks:
                acc = acc * self._inner.value(b)
            return acc
        if isinstance(age, DisjointUnion):
            parts = du_parts(age, s)
            if parts is None:
                raise ValueError("not a member of the disjoint union")
            if age.rule == "product":
                acc = ONE
                for sub, part in zip(self._components, parts):
                    acc = acc * sub.value(part)
                return acc
            # the "sum" rule, kept to demonstrate its axiom failure
            if s.n == 0:
                return ONE
            acc = Scalar.from_int(0)
            for sub, part in zip(self._components, parts):
                acc = acc + sub.value(part)
            return acc
        raise TypeError(f"no measure rule for {age!r}")

    @property
    def zero_classes(self) -> list[tuple[str, int]]:
        """(iso id, size) of every zero-valued class seen so far."""
        return sorted(self._zero.items(), key=lambda kv: (kv[1], kv[0]))


def measure_for(age: AgeSpec) -> RMeasure:
    return RMeasure(age)


def total_point_measure(m: RMeasure) -> Scalar:
    """Measure of the whole vertex set: sum over 1-vertex extension types."""
    from .structures import empty_structure

    empty = empty_structure(age_signature(m.age))
    acc = Scalar.from_int(0)
    for ext in one_point_extensions(m.age, empty):
        acc = acc + m.value(ext.assembled())
    return acc


@dataclass(frozen=True)
class AxiomViolation:
    base_id: str
    ext1: tuple
    ext2: tuple
    lhs: Scalar
    rhs: Scalar
    amalgam_ids: tuple[str, ...]

    def as_dict(self) -> dict:
        return {
            "base": self.base_id,
            "ext1": [[sym, sorted(pairs)] for sym, pairs in self.ext1],
            "ext2": [[sym, sorted(pairs)] for sym, pairs in self.ext2],
            "lhs": self.lhs.render(),
            "rhs": self.rhs.render(),
            "amalgams": list(self.amalgam_ids),
        }


@dataclass
class MeasureAxiomReport:
    passed: bool
    bases_checked: int
    pairs_checked: int
    violations: list[AxiomViolation] = field(default_factory=list)
    zero_values: list[tuple[str, int]] = field(default_factory=list)

    @property
    def regular(self) -> bool:
        return not self.zero_values

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "bases_checked": self.bases_checked,
            "pairs_checked": self.pairs_checked,
            "violations": [v.as_dict() for v in self.violations],
            "zero_values": [
                {"class": cid, "size": size} for cid, size in self.zero_values
            ],
        }


def verify_r_measure(m: RMeasure, bound: int) -> MeasureAxiomReport:
    """Check the amalgamation axiom over all bases of size < bound.

    For every base class s0 and every unordered pair of one-point
    extensions, asserts nu(s1) * nu(s2) = nu(s0) * sum over amalgams.
    Violations come back with full witnesses; zero values encountered along
    the way are reported as the regularity diagnostic.
    """
    age = m.age
    violations: list[AxiomViolation] = []
    bases = 0
    pairs = 0
    for k in range(bound):
        for cls in enumerate_level(age, k):
            bases += 1
            exts = one_point_extensions(age, cls.rep)
            base_val = m.value(cls.rep)
            for e1, e2 in itertools.combinations_with_replacement(exts, 2):
                pairs += 1
                lhs = m.value(e1.assembled()) * m.value(e2.assembled())
                amalgams = one_point_amalgamations(age, cls.rep, e1, e2)
                rhs_sum = Scalar.from_int(0)
                ids = []
                for am in amalgams:
                    rhs_sum = rhs_sum + m.value(am.structure)
                    ids.append(canonical_form(am.structure))
                rhs = base_val * rhs_sum
                if lhs != rhs:
                    violations.append(
                        AxiomViolation(
                            cls.iso_id, e1.assignment, e2.assignment,
                            lhs, rhs, tuple(ids),
                        )
                    )
    return MeasureAxiomReport(
        passed=not violations,
        bases_checked=bases,
        pairs_checked=pairs,
        violations=violations,
        zero_values=m.zero_classes,
    )

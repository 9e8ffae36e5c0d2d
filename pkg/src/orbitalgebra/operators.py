"""Raising/lowering/diagonal operators on graded orbit bases.

The graded basis at level n is the list of n-vertex iso classes of an age.
On it, the raising operator e counts vertex deletions (measure-free and
integer valued), the lowering operator f sums measure ratios over one-point
extension types, and h is the diagonal 2n - mu(X). The same recipes, run on
color classes, give the full family of gl_r operators. Everything here is
exact; relation checkers compare normalized scalars for equality.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field

from .ages import AgeSpec, enumerate_level, one_point_extensions
from .linalg import matrix_rank
from .measures import RMeasure, total_point_measure
from .scalars import ONE, ZERO, Scalar
from .structures import (
    ColoredStructure,
    canonical_form,
    canonicalize,
    delete_colored_vertex,
    delete_vertex,
    recolor_vertex,
)


@dataclass(frozen=True)
class LevelMatrix:
    """Sparse operator block between two graded levels.

    ``entries`` maps (target class id, source class id) to a nonzero Scalar.
    """

    source: object
    target: object
    entries: dict[tuple[str, str], Scalar]

    def is_zero(self) -> bool:
        return not self.entries


def _prune(entries: dict[tuple[str, str], Scalar]) -> dict[tuple[str, str], Scalar]:
    return {k: v for k, v in entries.items() if not v.is_zero()}


def compose(outer: LevelMatrix, inner: LevelMatrix) -> LevelMatrix:
    """outer ∘ inner (inner applied first)."""
    entries: dict[tuple[str, str], Scalar] = {}
    by_source: dict[str, list[tuple[str, Scalar]]] = {}
    for (t, s), v in outer.entries.items():
        by_source.setdefault(s, []).append((t, v))
    for (mid, s), v_in in inner.entries.items():
        for t, v_out in by_source.get(mid, ()):
            key = (t, s)
            entries[key] = entries.get(key, ZERO) + v_out * v_in
    return LevelMatrix(inner.source, outer.target, _prune(entries))


def add_matrices(a: LevelMatrix, b: LevelMatrix, sign: int = 1) -> LevelMatrix:
    entries = dict(a.entries)
    for k, v in b.entries.items():
        entries[k] = entries.get(k, ZERO) + (v if sign > 0 else -v)
    return LevelMatrix(a.source, a.target, _prune(entries))


def scale_identity(level, ids, value: Scalar) -> LevelMatrix:
    if value.is_zero():
        return LevelMatrix(level, level, {})
    return LevelMatrix(level, level, {(cid, cid): value for cid in ids})


def dense_rows(mat: LevelMatrix, target_ids: list[str], source_ids: list[str]) -> list[list[Scalar]]:
    return [
        [mat.entries.get((t, s), ZERO) for s in source_ids] for t in target_ids
    ]


# ---------------------------------------------------------------------------
# sl2 on the level basis
# ---------------------------------------------------------------------------

def rank_generating_coeffs(age: AgeSpec, bound: int) -> list[int]:
    """Orbit counts a_0..a_bound (coefficients of the rank series)."""
    return [len(enumerate_level(age, n)) for n in range(bound + 1)]


def e_matrix(age: AgeSpec, n: int) -> LevelMatrix:
    """Raising block level n -> n+1; integer entries, measure-free.

    entry([t], [s]) counts the vertices of t whose deletion lands in [s];
    consequently each column of the transpose sums to n+1 (every vertex of
    t is deleted exactly once).
    """
    entries: dict[tuple[str, str], Scalar] = {}
    for cls in enumerate_level(age, n + 1):
        for v in range(cls.rep.n):
            sid = canonical_form(delete_vertex(cls.rep, v))
            key = (cls.iso_id, sid)
            entries[key] = entries.get(key, ZERO) + ONE
    return LevelMatrix(n, n + 1, _prune(entries))


def f_matrix(age: AgeSpec, measure: RMeasure, n: int) -> LevelMatrix:
    """Lowering block level n -> n-1 with measure-ratio entries.

    entry([u], [t]) sums nu(t)/nu(u) over the one-point extension types of
    u whose assembled structure is isomorphic to t. Extension types stand
    in for the point orbits of the stabilizer of a base set.
    """
    if n == 0:
        return LevelMatrix(0, -1, {})
    entries: dict[tuple[str, str], Scalar] = {}
    for cls in enumerate_level(age, n - 1):
        base_val = measure.value(cls.rep)
        if base_val.is_zero():
            raise ZeroDivisionError(
                f"measure vanishes on {cls.iso_id}; lowering ratios undefined"
            )
        for ext in one_point_extensions(age, cls.rep):
            t = ext.assembled()
            tid = canonical_form(t)
            key = (cls.iso_id, tid)
            ratio = measure.value(t) / base_val
            entries[key] = entries.get(key, ZERO) + ratio
    return LevelMatrix(n, n - 1, _prune(entries))


def h_eigenvalue(measure: RMeasure, n: int) -> Scalar:
    """The diagonal weight 2n - mu(X) at level n."""
    return Scalar.from_int(2 * n) - total_point_measure(measure)


@dataclass
class ActionTruncation:
    """Everything needed to inspect the sl2 action up to level ``bound``.

    e[n] maps level n to n+1 (n <= bound); f[n] maps level n to n-1
    (n <= bound+1): boundary checks at ``bound`` need one extra level,
    which build_sl2_action enumerates silently.
    """

    age: AgeSpec
    measure: RMeasure | None
    bound: int
    mu_x: Scalar | None
    e: dict[int, LevelMatrix]
    f: dict[int, LevelMatrix]
    h: dict[int, Scalar]

    def level_ids(self, n: int) -> list[str]:
        if n < 0:
            return []
        return [cls.iso_id for cls in enumerate_level(self.age, n)]

    def coeffs(self) -> list[int]:
        return rank_generating_coeffs(self.age, self.bound)


def build_sl2_action(age: AgeSpec, measure: RMeasure | None, bound: int) -> ActionTruncation:
    e = {n: e_matrix(age, n) for n in range(bound + 1)}
    f = {}
    h = {}
    mu_x = None
    if measure is not None:
        mu_x = total_point_measure(measure)
        f = {n: f_matrix(age, measure, n) for n in range(bound + 2)}
        h = {n: Scalar.from_int(2 * n) - mu_x for n in range(bound + 2)}
    return ActionTruncation(age, measure, bound, mu_x, e, f, h)


@dataclass(frozen=True)
class RelationViolation:
    level: object
    relation: str
    target: str
    source: str
    lhs: Scalar
    rhs: Scalar

    def as_dict(self) -> dict:
        return {
            "level": list(self.level) if isinstance(self.level, tuple) else self.level,
            "relation": self.relation,
            "target": self.target,
            "source": self.source,
            "lhs": self.lhs.render(),
            "rhs": self.rhs.render(),
        }


@dataclass
class RelationReport:
    passed: bool
    levels_checked: int
    violations: list[RelationViolation] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "levels_checked": self.levels_checked,
            "violations": [v.as_dict() for v in self.violations],
        }


def _diff_violations(level, relation, got: LevelMatrix, want: LevelMatrix) -> list[RelationViolation]:
    out = []
    keys = set(got.entries) | set(want.entries)
    for key in sorted(keys):
        lhs = got.entries.get(key, ZERO)
        rhs = want.entries.get(key, ZERO)
        if lhs != rhs:
            out.append(RelationViolation(level, relation, key[0], key[1], lhs, rhs))
    return out


def verify_sl2_relations(age: AgeSpec, measure: RMeasure, bound: int) -> RelationReport:
    """Check [e,f] = h, [h,e] = 2e, [h,f] = -2f blockwise for levels <= bound."""
    action = build_sl2_action(age, measure, bound)
    violations: list[RelationViolation] = []
    for n in range(bound + 1):
        ids = action.level_ids(n)
        ef = compose(action.e[n - 1], action.f[n]) if n > 0 else LevelMatrix(n, n, {})
        fe = compose(action.f[n + 1], action.e[n])
        got = add_matrices(ef, fe, sign=-1)
        want = scale_identity(n, ids, action.h[n])
        violations.extend(_diff_violations(n, "[e,f]=h", got, want))
        # diagonal h makes the remaining brackets scalar identities per entry
        he = add_matrices(
            LevelMatrix(n, n + 1, {k: action.h[n + 1] * v for k, v in action.e[n].entries.items()}),
            LevelMatrix(n, n + 1, {k: action.h[n] * v for k, v in action.e[n].entries.items()}),
            sign=-1,
        )
        want_he = LevelMatrix(n, n + 1, {k: Scalar.from_int(2) * v for k, v in action.e[n].entries.items()})
        violations.extend(_diff_violations(n, "[h,e]=2e", he, want_he))
        hf = add_matrices(
            LevelMatrix(n, n - 1, {k: action.h[n - 1] * v for k, v in action.f[n].entries.items()}) if n > 0 else LevelMatrix(n, n - 1, {}),
            LevelMatrix(n, n - 1, {k: action.h[n] * v for k, v in action.f[n].entries.items()}) if n > 0 else LevelMatrix(n, n - 1, {}),
            sign=-1,
        )
        want_hf = LevelMatrix(
            n, n - 1,
            {k: Scalar.from_int(-2) * v for k, v in action.f[n].entries.items()} if n > 0 else {},
        )
        violations.extend(_diff_violations(n, "[h,f]=-2f", hf, want_hf))
    return RelationReport(not violations, bound + 1, violations)


def e_injectivity_ranks(age: AgeSpec, bound: int) -> list[tuple[int, int, int]]:
    """(level, rank of e, dim of level) for each level < bound."""
    out = []
    for n in range(bound):
        source_ids = [c.iso_id for c in enumerate_level(age, n)]
        target_ids = [c.iso_id for c in enumerate_level(age, n + 1)]
        mat = e_matrix(age, n)
        rank = matrix_rank(dense_rows(mat, target_ids, source_ids))
        out.append((n, rank, len(source_ids)))
    return out


# ---------------------------------------------------------------------------
# gl_r on color classes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ColoredClass:
    iso_id: str
    rep: ColoredStructure


Multidegree = tuple[int, ...]


def _multidegree(colors: tuple[int, ...], r: int) -> Multidegree:
    return tuple(colors.count(i) for i in range(1, r))


@functools.lru_cache(maxsize=None)
def glr_basis(age: AgeSpec, r: int, total_degree_bound: int) -> dict[Multidegree, tuple[ColoredClass, ...]]:
    """Color classes of age members, grouped by multidegree.

    A class is an age member with every vertex colored 1..r-1, up to
    color-preserving isomorphism; its multidegree lists the color counts.
    """
    if r < 2:
        raise ValueError("glr basis needs r >= 2")
    grouped: dict[Multidegree, dict[str, ColoredStructure]] = {}
    for n in range(total_degree_bound + 1):
        for cls in enumerate_level(age, n):
            for colors in itertools.product(range(1, r), repeat=n):
                cid, canon = canonicalize(ColoredStructure(cls.rep, colors))
                deg = _multidegree(colors, r)
                grouped.setdefault(deg, {})
                if cid not in grouped[deg]:
                    grouped[deg][cid] = canon
    return {
        deg: tuple(ColoredClass(cid, reps[cid]) for cid in sorted(reps))
        for deg, reps in sorted(grouped.items())
    }


def _shift(deg: Multidegree, i: int, delta: int) -> Multidegree | None:
    out = list(deg)
    out[i - 1] += delta
    if out[i - 1] < 0:
        return None
    return tuple(out)


def glr_matrix(
    age: AgeSpec,
    measure: RMeasure | None,
    r: int,
    i: int,
    j: int,
    multidegree: Multidegree,
    bound: int,
) -> LevelMatrix:
    """The block of E_ij out of the given source multidegree.

    E_ij moves one vertex from color block j to color block i; block r is
    the infinite remainder. Concretely on classes: recoloring counts for
    i,j < r; vertex-deletion counts into block r's complement for j = r;
    measure ratios over one-point extensions (new vertex colored j) for
    i = r; diagonals count block sizes, with mu(X) minus the finite part
    for E_rr.
    """
    if not (1 <= i <= r and 1 <= j <= r):
        raise ValueError("indices must lie in 1..r")
    basis = glr_basis(age, r, bound)
    source = basis.get(multidegree, ())
    source_ids = {c.iso_id for c in source}
    if i == j:
        if i < r:
            value = Scalar.from_int(multidegree[i - 1])
        else:
            if measure is None:
                raise CountingOnlyGlr()
            value = total_point_measure(measure) - Scalar.from_int(sum(multidegree))
        return scale_identity(multidegree, sorted(source_ids), value)

    entries: dict[tuple[str, str], Scalar] = {}
    if i < r and j < r:
        lowered = _shift(multidegree, j, -1)
        target_deg = None if lowered is None else _shift(lowered, i, +1)
        if target_deg is None:
            return LevelMatrix(multidegree, None, {})
        for cls in basis.get(target_deg, ()):
            for v in range(cls.rep.base.n):
                if cls.rep.colors[v] != i:
                    continue
                sid = canonical_form(recolor_vertex(cls.rep, v, j))
                if sid in source_ids:
                    key = (cls.iso_id, sid)
                    entries[key] = entries.get(key, ZERO) + ONE
        return LevelMatrix(multidegree, target_deg, _prune(entries))

    if i < r:  # j == r: raise block i by a fresh vertex
        target_deg = _shift(multidegree, i, +1)
        for cls in basis.get(target_deg, ()):
            for v in range(cls.rep.base.n):
                if cls.rep.colors[v] != i:
                    continue
                sid = canonical_form(delete_colored_vertex(cls.rep, v))
                if sid in source_ids:
                    key = (cls.iso_id, sid)
                    entries[key] = entries.get(key, ZERO) + ONE
        return LevelMatrix(multidegree, target_deg, _prune(entries))

    # i == r, j < r: move one block-j vertex into the infinite remainder
    if measure is None:
        raise CountingOnlyGlr()
    target_deg = _shift(multidegree, j, -1)
    if target_deg is None:
        return LevelMatrix(multidegree, None, {})
    for cls in basis.get(target_deg, ()):
        base = cls.rep.base
        base_val = measure.value(base)
        if base_val.is_zero():
            raise ZeroDivisionError(
                f"measure vanishes on {cls.iso_id}; lowering ratios undefined"
            )
        for ext in one_point_extensions(age, base):
            assembled = ext.assembled()
            sid = canonical_form(ColoredStructure(assembled, cls.rep.colors + (j,)))
            if sid in source_ids:
                ratio = measure.value(assembled) / base_val
                key = (cls.iso_id, sid)
                entries[key] = entries.get(key, ZERO) + ratio
    return LevelMatrix(multidegree, target_deg, _prune(entries))


class CountingOnlyGlr(ValueError):
    def __init__(self):
        super().__init__("operator needs a measure; age is counting-only")


def _recolor_class_map(basis, sigma: dict[int, int]):
    """Class bijection induced by permuting colors."""
    mapping = {}
    for classes in basis.values():
        for cls in classes:
            new_colors = tuple(sigma.get(c, c) for c in cls.rep.colors)
            mapping[cls.iso_id] = canonical_form(
                ColoredStructure(cls.rep.base, new_colors)
            )
    return mapping


def verify_glr_relations(age: AgeSpec, measure: RMeasure, r: int, bound: int) -> RelationReport:
    """Check every gl_r commutator case plus color-permutation symmetry.

    [E_ij, E_lm] equals E_im when j=l (minus E_lj when m=i, their
    difference of diagonals when both, zero when neither); checked
    blockwise from every multidegree of total degree <= bound. The
    symmetry check conjugates by each transposition of finite colors.
    """
    full_bound = bound + 2
    basis = glr_basis(age, r, full_bound)

    def mat(i, j, deg):
        if deg is None or min(deg) < 0:
            return LevelMatrix(deg, None, {})
        return glr_matrix(age, measure, r, i, j, deg, full_bound)

    def deg_after(i, j, deg):
        if deg is None:
            return None
        if i == j:
            return deg
        d = list(deg)
        if i < r:
            d[i - 1] += 1
        if j < r:
            d[j - 1] -= 1
        if min(d) < 0:
            return None
        return tuple(d)

    violations: list[RelationViolation] = []
    degrees = [d for d in basis if sum(d) <= bound]
    checked = 0
    for deg in sorted(degrees):
        for i, j, l, m in itertools.product(range(1, r + 1), repeat=4):
            checked += 1
            mid1 = deg_after(l, m, deg)
            first = compose(mat(i, j, mid1), mat(l, m, deg)) if mid1 is not None else LevelMatrix(deg, None, {})
            mid2 = deg_after(i, j, deg)
            second = compose(mat(l, m, mid2), mat(i, j, deg)) if mid2 is not None else LevelMatrix(deg, None, {})
            got = add_matrices(first, second, sign=-1)
            ids = sorted(c.iso_id for c in basis.get(deg, ()))
            if i == m and j == l:
                want = add_matrices(mat(i, i, deg), mat(j, j, deg), sign=-1)
            elif j == l:
                want = mat(i, m, deg)
            elif i == m:
                neg = mat(l, j, deg)
                want = LevelMatrix(deg, neg.target, {k: -v for k, v in neg.entries.items()})
            else:
                want = LevelMatrix(deg, None, {})
            violations.extend(
                _diff_violations(deg, f"[E{i}{j},E{l}{m}]", got, want)
            )

    # S_r symmetry: conjugating by a color transposition permutes the E_ij
    for a, b in itertools.combinations(range(1, r), 2):
        sigma = {a: b, b: a}
        relabel = _recolor_class_map(basis, sigma)
        for deg in sorted(degrees):
            sdeg = list(deg)
            sdeg[a - 1], sdeg[b - 1] = sdeg[b - 1], sdeg[a - 1]
            sdeg = tuple(sdeg)
            for i, j in itertools.product(range(1, r + 1), repeat=2):
                si, sj = sigma.get(i, i), sigma.get(j, j)
                orig = mat(i, j, deg)
                conj = mat(si, sj, sdeg)
                moved = {
                    (relabel[t], relabel[s]): v for (t, s), v in orig.entries.items()
                }
                violations.extend(
                    _diff_violations(
                        deg,
                        f"σE{i}{j}σ⁻¹=E{si}{sj} (σ=({a} {b}))",
                        LevelMatrix(sdeg, conj.target, moved),
                        conj,
                    )
                )
    return RelationReport(not violations, checked, violations)

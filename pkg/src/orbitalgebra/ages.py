"""Amalgamation classes: membership oracles, level enumeration, extensions.

An AgeSpec describes the class of finite structures embeddable into a fixed
homogeneous structure: built-ins (finite sets, finite linear orders, the
subgraphs of an explicit finite model) and combinators (disjoint union with
sort loops, ordered stacks of blocks over a dense order, unordered multisets
of blocks). Enumeration is generative, by closing under one-point
extensions; every generated structure is re-checked against the membership
oracle so a combinator bug cannot silently corrupt a basis.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .scalars import LAMBDA, Scalar
from .structures import (
    FiniteStructure,
    Pair,
    Signature,
    structure,
    canonical_form,
    canonicalize,
    empty_structure,
    induced_substructure,
    iter_embeddings,
)


class NotInAgeError(ValueError):
    pass


class AgeSpec:
    """Base for age descriptions; concrete variants are frozen dataclasses."""


@dataclass(frozen=True)
class Sets(AgeSpec):
    """Age of finite sets (empty signature); measure parameter lam."""

    lam: Scalar = LAMBDA


@dataclass(frozen=True)
class LinearOrders(AgeSpec):
    """Age of finite strict total orders."""


@dataclass(frozen=True)
class FiniteModel(AgeSpec):
    """Age of structures embeddable into the explicit finite model."""

    model: FiniteStructure


@dataclass(frozen=True)
class DisjointUnion(AgeSpec):
    """Members split into sorts, one per component; sorts marked by loops.

    ``rule`` selects the measure recipe: "product" (the one that satisfies
    the amalgamation axiom) or "sum" (kept to demonstrate its failure).
    """

    components: tuple[AgeSpec, ...]
    rule: str = "product"

    def __post_init__(self):
        if len(self.components) < 2:
            raise ValueError("disjoint union needs at least 2 components")
        if self.rule not in ("product", "sum"):
            raise ValueError(f"unknown disjoint-union rule: {self.rule!r}")


@dataclass(frozen=True)
class TimesQ(AgeSpec):
    """Ordered stacks of non-empty inner members along a dense total order."""

    inner: AgeSpec


@dataclass(frozen=True)
class MultisetOver(AgeSpec):
    """Unordered multisets of non-empty inner members; counting-only."""

    inner: AgeSpec


def colored(inner: AgeSpec, m: int) -> DisjointUnion:
    """m interchangeable sorted copies of an age (m-fold disjoint union)."""
    if m < 2:
        raise ValueError("colored needs m >= 2")
    return DisjointUnion(tuple(inner for _ in range(m)))


# ---------------------------------------------------------------------------
# signatures and flags
# ---------------------------------------------------------------------------

def _fresh(name: str, taken) -> str:
    while name in taken:
        name += "_"
    return name


def _du_prefix(i: int, name: str) -> str:
    return f"u{i}.{name}"


@functools.lru_cache(maxsize=None)
def age_signature(age: AgeSpec) -> Signature:
    if isinstance(age, Sets):
        return Signature(())
    if isinstance(age, LinearOrders):
        return Signature(("lt",))
    if isinstance(age, FiniteModel):
        return age.model.signature
    if isinstance(age, DisjointUnion):
        symbols = [f"sort{i}" for i in range(1, len(age.components) + 1)]
        for i, comp in enumerate(age.components, start=1):
            symbols.extend(_du_prefix(i, s) for s in age_signature(comp).symbols)
        return Signature(tuple(symbols))
    if isinstance(age, TimesQ):
        inner = age_signature(age.inner).symbols
        return Signature(inner + (_fresh("ord", inner),))
    if isinstance(age, MultisetOver):
        inner = age_signature(age.inner).symbols
        return Signature(inner + (_fresh("eq", inner),))
    raise TypeError(f"unknown age spec: {age!r}")


def empty_of(age: AgeSpec) -> FiniteStructure:
    return empty_structure(age_signature(age))


def timesq_order_symbol(age: TimesQ) -> str:
    return age_signature(age).symbols[-1]


def multiset_eq_symbol(age: MultisetOver) -> str:
    return age_signature(age).symbols[-1]


def is_infinite(age: AgeSpec) -> bool:
    if isinstance(age, (Sets, LinearOrders, TimesQ, MultisetOver)):
        return True
    if isinstance(age, FiniteModel):
        return False
    if isinstance(age, DisjointUnion):
        return any(is_infinite(c) for c in age.components)
    raise TypeError(f"unknown age spec: {age!r}")


def has_measure(age: AgeSpec) -> bool:
    if isinstance(age, (Sets, LinearOrders, FiniteModel)):
        return True
    if isinstance(age, DisjointUnion):
        return all(has_measure(c) for c in age.components)
    if isinstance(age, TimesQ):
        return has_measure(age.inner)
    if isinstance(age, MultisetOver):
        return False
    raise TypeError(f"unknown age spec: {age!r}")


def specialize_age(age: AgeSpec, point: Fraction) -> AgeSpec:
    """Replace every symbolic measure parameter by its value at ``point``."""
    if isinstance(age, Sets):
        return Sets(Scalar.from_fraction(age.lam.specialize(point)))
    if isinstance(age, (LinearOrders, FiniteModel)):
        return age
    if isinstance(age, DisjointUnion):
        return DisjointUnion(
            tuple(specialize_age(c, point) for c in age.components), age.rule
        )
    if isinstance(age, TimesQ):
        return TimesQ(specialize_age(age.inner, point))
    if isinstance(age, MultisetOver):
        return MultisetOver(specialize_age(age.inner, point))
    raise TypeError(f"unknown age spec: {age!r}")


# ---------------------------------------------------------------------------
# decomposition of members into component parts
# ---------------------------------------------------------------------------

def _reduct(s: FiniteStructure, vertices: list[int], symbols: list[str], target_sig: Signature) -> FiniteStructure:
    """Substructure on ``vertices`` keeping only ``symbols`` (renamed in order)."""
    pos = {v: i for i, v in enumerate(vertices)}
    keep = set(vertices)
    rels = []
    for sym in symbols:
        pairs = frozenset(
            (pos[a], pos[b]) for (a, b) in s.rel(sym) if a in keep and b in keep
        )
        rels.append(pairs)
    return FiniteStructure(target_sig, len(vertices), tuple(rels))


def du_parts(age: DisjointUnion, s: FiniteStructure):
    """Split a candidate into per-sort reducts; None when malformed."""
    k = len(age.components)
    sort_of: dict[int, int] = {}
    for i in range(1, k + 1):
        rel = s.rel(f"sort{i}")
        for (a, b) in rel:
            if a != b:
                return None
            if a in sort_of:
                return None
            sort_of[a] = i
    if len(sort_of) != s.n:
        return None
    members = {i: [v for v in range(s.n) if sort_of[v] == i] for i in range(1, k + 1)}
    parts = []
    for i, comp in enumerate(age.components, start=1):
        comp_sig = age_signature(comp)
        symbols = [_du_prefix(i, name) for name in comp_sig.symbols]
        # component relations must stay inside their own sort
        own = set(members[i])
        for sym in symbols:
            for (a, b) in s.rel(sym):
                if a not in own or b not in own:
                    return None
        parts.append(_reduct(s, members[i], symbols, comp_sig))
    return parts


def _block_partition(n: int, ordered_pairs: frozenset[Pair]):
    """Blocks of mutual incomparability of a strict total preorder.

    Returns the list of blocks in increasing order, or None when the
    relation is not a strict total preorder (all cross-block pairs present,
    none inside a block, no loops).
    """
    for (a, b) in ordered_pairs:
        if a == b:
            return None
    below = {v: frozenset(u for u in range(n) if (u, v) in ordered_pairs) for v in range(n)}
    by_depth: dict[int, list[int]] = {}
    for v in range(n):
        by_depth.setdefault(len(below[v]), []).append(v)
    blocks = [by_depth[d] for d in sorted(by_depth)]
    index = {}
    for bi, block in enumerate(blocks):
        for v in block:
            index[v] = bi
    for u in range(n):
        for v in range(n):
            expected = index[u] < index[v]
            if ((u, v) in ordered_pairs) != expected:
                return None
    return blocks


def timesq_blocks(age: TimesQ, s: FiniteStructure):
    """Ordered blocks of a candidate, as inner reducts; None when malformed."""
    ord_sym = timesq_order_symbol(age)
    blocks = _block_partition(s.n, s.rel(ord_sym))
    if blocks is None:
        return None
    inner_sig = age_signature(age.inner)
    # inner relations may not cross blocks
    block_of = {}
    for bi, block in enumerate(blocks):
        for v in block:
            block_of[v] = bi
    for sym in inner_sig.symbols:
        for (a, b) in s.rel(sym):
            if block_of[a] != block_of[b]:
                return None
    return [
        _reduct(s, block, list(inner_sig.symbols), inner_sig) for block in blocks
    ]


def timesq_block_vertices(age: TimesQ, s: FiniteStructure):
    return _block_partition(s.n, s.rel(timesq_order_symbol(age)))


def multiset_blocks(age: MultisetOver, s: FiniteStructure):
    """Equivalence-class reducts of a candidate; None when malformed."""
    eq_sym = multiset_eq_symbol(age)
    eq = s.rel(eq_sym)
    for v in range(s.n):
        if (v, v) not in eq:
            return None
    for (a, b) in eq:
        if (b, a) not in eq:
            return None
    for (a, b) in eq:
        for c in range(s.n):
            if (b, c) in eq and (a, c) not in eq:
                return None
    seen = set()
    blocks = []
    for v in range(s.n):
        if v in seen:
            continue
        block = [u for u in range(s.n) if (v, u) in eq]
        seen.update(block)
        blocks.append(block)
    inner_sig = age_signature(age.inner)
    block_of = {}
    for bi, block in enumerate(blocks):
        for v in block:
            block_of[v] = bi
    for sym in inner_sig.symbols:
        for (a, b) in s.rel(sym):
            if block_of[a] != block_of[b]:
                return None
    return [
        _reduct(s, block, list(inner_sig.symbols), inner_sig) for block in blocks
    ]


# ---------------------------------------------------------------------------
# membership
# ---------------------------------------------------------------------------

def _is_strict_total_order(n: int, rel: frozenset[Pair]) -> bool:
    for v in range(n):
        if (v, v) in rel:
            return False
    for a in range(n):
        for b in range(a + 1, n):
            if ((a, b) in rel) == ((b, a) in rel):
                return False
    for (a, b) in rel:
        for c in range(n):
            if (b, c) in rel and (a, c) not in rel:
                return False
    return True


def contains(age: AgeSpec, s: FiniteStructure) -> bool:
    if s.signature != age_signature(age):
        raise ValueError(
            f"signature mismatch: structure has {s.signature.symbols}, "
            f"age expects {age_signature(age).symbols}"
        )
    if isinstance(age, Sets):
        return True
    if isinstance(age, LinearOrders):
        return _is_strict_total_order(s.n, s.rel("lt"))
    if isinstance(age, FiniteModel):
        if s.n > age.model.n:
            return False
        return next(iter_embeddings(s, age.model), None) is not None
    if isinstance(age, DisjointUnion):
        parts = du_parts(age, s)
        if parts is None:
            return False
        return all(contains(c, p) for c, p in zip(age.components, parts))
    if isinstance(age, TimesQ):
        blocks = timesq_blocks(age, s)
        if blocks is None:
            return False
        return all(b.n > 0 and contains(age.inner, b) for b in blocks)
    if isinstance(age, MultisetOver):
        blocks = multiset_blocks(age, s)
        if blocks is None:
            return False
        return all(contains(age.inner, b) for b in blocks)
    raise TypeError(f"unknown age spec: {age!r}")


# ---------------------------------------------------------------------------
# one-point extensions
# ---------------------------------------------------------------------------

Assignment = tuple[tuple[str, frozenset[Pair]], ...]


@dataclass(frozen=True)
class OnePointExtension:
    """Relation assignment attaching one new vertex (index base.n) to base."""

    base: FiniteStructure
    assignment: Assignment

    def assembled(self) -> FiniteStructure:
        extra = dict(self.assignment)
        rels = tuple(
            relset | extra.get(sym, frozenset())
            for sym, relset in zip(self.base.signature.symbols, self.base.relations)
        )
        return FiniteStructure(self.base.signature, self.base.n + 1, rels)


def _assignment(sig: Signature, pairs_by_symbol: dict[str, set[Pair]]) -> Assignment:
    return tuple(
        (sym, frozenset(pairs_by_symbol.get(sym, ()))) for sym in sig.symbols
    )


def _translate(pairs: frozenset[Pair], vmap: dict[int, int]) -> set[Pair]:
    return {(vmap[a], vmap[b]) for (a, b) in pairs}


def _extension_assignments(age: AgeSpec, s: FiniteStructure) -> list[dict[str, set[Pair]]]:
    n = s.n
    if isinstance(age, Sets):
        return [{}]

    if isinstance(age, LinearOrders):
        ranked = sorted(range(n), key=lambda v: sum(1 for u in range(n) if (u, v) in s.rel("lt")))
        out = []
        for k in range(n + 1):
            below, above = ranked[:k], ranked[k:]
            pairs = {(u, n) for u in below} | {(n, v) for v in above}
            out.append({"lt": pairs})
        return out

    if isinstance(age, FiniteModel):
        model = age.model
        seen: set[Assignment] = set()
        out = []
        for emb in iter_embeddings(s, model):
            used = set(emb)
            for w in range(model.n):
                if w in used:
                    continue
                pairs_by_sym: dict[str, set[Pair]] = {}
                for sym in model.signature.symbols:
                    rel = model.rel(sym)
                    pairs = set()
                    for v in range(n):
                        if (emb[v], w) in rel:
                            pairs.add((v, n))
                        if (w, emb[v]) in rel:
                            pairs.add((n, v))
                    if (w, w) in rel:
                        pairs.add((n, n))
                    if pairs:
                        pairs_by_sym[sym] = pairs
                key = _assignment(s.signature, pairs_by_sym)
                if key not in seen:
                    seen.add(key)
                    out.append(pairs_by_sym)
        return out

    if isinstance(age, DisjointUnion):
        parts = du_parts(age, s)
        if parts is None:
            raise NotInAgeError("structure is not a disjoint-union member")
        out = []
        for i, (comp, part) in enumerate(zip(age.components, parts), start=1):
            local = [v for v in range(n) if (v, v) in s.rel(f"sort{i}")]
            vmap = {li: g for li, g in enumerate(local)}
            vmap[part.n] = n
            for sub in _extension_assignments(comp, part):
                pairs_by_sym: dict[str, set[Pair]] = {f"sort{i}": {(n, n)}}
                for sym, pairs in sub.items():
                    pairs_by_sym[_du_prefix(i, sym)] = _translate(frozenset(pairs), vmap)
                out.append(pairs_by_sym)
        return out

    if isinstance(age, TimesQ):
        ord_sym = timesq_order_symbol(age)
        vblocks = timesq_block_vertices(age, s)
        if vblocks is None:
            raise NotInAgeError("structure is not a stacked member")
        inner_sig = age_signature(age.inner)
        reducts = [
            _reduct(s, block, list(inner_sig.symbols), inner_sig) for block in vblocks
        ]
        l = len(vblocks)
        out = []
        for j in range(l):
            vmap = {li: g for li, g in enumerate(vblocks[j])}
            vmap[reducts[j].n] = n
            earlier = [u for b in vblocks[:j] for u in b]
            later = [w for b in vblocks[j + 1:] for w in b]
            for sub in _extension_assignments(age.inner, reducts[j]):
                pairs_by_sym = {
                    ord_sym: {(u, n) for u in earlier} | {(n, w) for w in later}
                }
                for sym, pairs in sub.items():
                    pairs_by_sym[sym] = _translate(frozenset(pairs), vmap)
                out.append(pairs_by_sym)
        empty = empty_structure(inner_sig)
        for p in range(l + 1):
            earlier = [u for b in vblocks[:p] for u in b]
            later = [w for b in vblocks[p:] for w in b]
            for sub in _extension_assignments(age.inner, empty):
                pairs_by_sym = {
                    ord_sym: {(u, n) for u in earlier} | {(n, w) for w in later}
                }
                for sym, pairs in sub.items():
                    pairs_by_sym[sym] = _translate(frozenset(pairs), {0: n})
                out.append(pairs_by_sym)
        return out

    if isinstance(age, MultisetOver):
        eq_sym = multiset_eq_symbol(age)
        blocks = multiset_blocks(age, s)
        if blocks is None:
            raise NotInAgeError("structure is not a multiset member")
        eq = s.rel(eq_sym)
        seen_vertices = set()
        vblocks = []
        for v in range(n):
            if v in seen_vertices:
                continue
            block = [u for u in range(n) if (v, u) in eq]
            seen_vertices.update(block)
            vblocks.append(block)
        inner_sig = age_signature(age.inner)
        out = []
        for j, block in enumerate(vblocks):
            reduct = _reduct(s, block, list(inner_sig.symbols), inner_sig)
            vmap = {li: g for li, g in enumerate(block)}
            vmap[reduct.n] = n
            for sub in _extension_assignments(age.inner, reduct):
                pairs_by_sym = {
                    eq_sym: {(u, n) for u in block} | {(n, u) for u in block} | {(n, n)}
                }
                for sym, pairs in sub.items():
                    pairs_by_sym[sym] = _translate(frozenset(pairs), vmap)
                out.append(pairs_by_sym)
        empty = empty_structure(inner_sig)
        for sub in _extension_assignments(age.inner, empty):
            pairs_by_sym = {eq_sym: {(n, n)}}
            for sym, pairs in sub.items():
                pairs_by_sym[sym] = _translate(frozenset(pairs), {0: n})
            out.append(pairs_by_sym)
        return out

    raise TypeError(f"unknown age spec: {age!r}")


def one_point_extensions(age: AgeSpec, s: FiniteStructure) -> list[OnePointExtension]:
    """All ways to attach one new vertex keeping the result in the age.

    Extensions are in bijection with relation assignments for the new
    vertex: an isomorphism over s fixing s pointwise forces identical
    assignments, so no quotient is taken.
    """
    if not contains(age, s):
        raise NotInAgeError(f"structure not in age: {canonical_form(s)}")
    sig = s.signature
    seen: set[Assignment] = set()
    exts = []
    for pairs_by_sym in _extension_assignments(age, s):
        key = _assignment(sig, pairs_by_sym)
        if key in seen:
            continue
        seen.add(key)
        ext = OnePointExtension(s, key)
        assembled = ext.assembled()
        if not contains(age, assembled):
            raise RuntimeError(
                f"extension generator produced a non-member: {canonical_form(assembled)}"
            )
        exts.append(ext)
    exts.sort(key=lambda e: tuple(sorted(pairs) for _, pairs in e.assignment))
    return exts


# ---------------------------------------------------------------------------
# one-point amalgamations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Amalgam:
    """Joint extension over a shared base; j1/j2 are the two vertex maps."""

    structure: FiniteStructure
    j1: tuple[int, ...]
    j2: tuple[int, ...]
    identified: bool


def one_point_amalgamations(
    age: AgeSpec,
    s0: FiniteStructure,
    ext1: OnePointExtension,
    ext2: OnePointExtension,
) -> list[Amalgam]:
    """All amalgams of two one-point extensions over the same base.

    When the assignments coincide, the two new vertices may be identified;
    otherwise the amalgam keeps both, with every relation choice between
    them that stays inside the age. Amalgams with distinct relation data are
    distinct: an isomorphism of amalgamations must commute with j1 and j2,
    hence fixes every vertex.
    """
    if ext1.base != s0 or ext2.base != s0:
        raise ValueError("extensions of different bases")
    n = s0.n
    sig = s0.signature
    base_ids = tuple(range(n))
    out = []
    if ext1.assignment == ext2.assignment:
        ident = ext1.assembled()
        out.append(Amalgam(ident, base_ids + (n,), base_ids + (n,), True))

    joint_rels = []
    e1, e2 = dict(ext1.assignment), dict(ext2.assignment)
    shift = {**{v: v for v in range(n)}, n: n + 1}
    for sym, relset in zip(sig.symbols, s0.relations):
        pairs = set(relset) | set(e1.get(sym, ())) | _translate(e2.get(sym, frozenset()), shift)
        joint_rels.append(pairs)

    cross = [(n, n + 1), (n + 1, n)]
    for choice in itertools.product(*[range(4)] * len(sig.symbols)):
        rels = []
        for bits, pairs in zip(choice, joint_rels):
            extra = {cross[k] for k in range(2) if bits >> k & 1}
            rels.append(frozenset(pairs | extra))
        cand = FiniteStructure(sig, n + 2, tuple(rels))
        if contains(age, cand):
            out.append(Amalgam(cand, base_ids + (n,), base_ids + (n + 1,), False))
    return out


# ---------------------------------------------------------------------------
# level enumeration
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LevelClass:
    """One isomorphism class at a level: id plus canonical representative."""

    iso_id: str
    rep: FiniteStructure


@functools.lru_cache(maxsize=None)
def enumerate_level(age: AgeSpec, n: int) -> tuple[LevelClass, ...]:
    """All iso classes of n-vertex members, sorted by IsoClassId."""
    if n < 0:
        raise ValueError("level must be nonnegative")
    if n == 0:
        empty = empty_structure(age_signature(age))
        return (LevelClass(canonical_form(empty), empty),)
    seen: dict[str, FiniteStructure] = {}
    for cls in enumerate_level(age, n - 1):
        for ext in one_point_extensions(age, cls.rep):
            t = ext.assembled()
            cid, canon = canonicalize(t)
            if cid not in seen:
                seen[cid] = canon
    return tuple(LevelClass(cid, seen[cid]) for cid in sorted(seen))


# ---------------------------------------------------------------------------
# homogeneity of explicit finite models
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HomogeneityReport:
    homogeneous: bool
    classes_checked: int
    counterexample: tuple[str, tuple[int, ...], tuple[int, ...]] | None = None

    def describe(self) -> str:
        if self.homogeneous:
            return f"homogeneous ({self.classes_checked} substructure classes checked)"
        cid, f1, f2 = self.counterexample
        return (
            f"not homogeneous: embeddings {f1} and {f2} of class {cid} "
            "are not related by any automorphism"
        )


def check_homogeneity_finite_model(model: FiniteStructure) -> HomogeneityReport:
    """Check that isomorphisms of substructures lift to automorphisms.

    Walks every substructure class and every pair of embeddings; the first
    pair in distinct automorphism orbits is reported as a concrete
    unliftable isomorphism.
    """
    auts = list(iter_embeddings(model, model))
    reps: dict[str, FiniteStructure] = {}
    for k in range(model.n + 1):
        for subset in itertools.combinations(range(model.n), k):
            sub = induced_substructure(model, subset)
            cid = canonical_form(sub)
            if cid not in reps:
                reps[cid] = sub
    for cid in sorted(reps):
        sub = reps[cid]
        embs = list(iter_embeddings(sub, model))
        if not embs:
            continue
        first = embs[0]
        orbit = {tuple(g[v] for v in first) for g in auts}
        for emb in embs[1:]:
            if emb not in orbit:
                return HomogeneityReport(False, len(reps), (cid, first, emb))
    return HomogeneityReport(True, len(reps))


# ---------------------------------------------------------------------------
# member builders (mainly for tests and demos)
# ---------------------------------------------------------------------------

def du_member(age: DisjointUnion, parts: list[FiniteStructure]) -> FiniteStructure:
    """Assemble a disjoint-union member from per-component members."""
    if len(parts) != len(age.components):
        raise ValueError("one part per component required")
    sig = age_signature(age)
    offsets = []
    total = 0
    for p in parts:
        offsets.append(total)
        total += p.n
    rels: dict[str, set[Pair]] = {sym: set() for sym in sig.symbols}
    for i, (comp, part) in enumerate(zip(age.components, parts), start=1):
        off = offsets[i - 1]
        for v in range(part.n):
            rels[f"sort{i}"].add((v + off, v + off))
        for sym in age_signature(comp).symbols:
            for (a, b) in part.rel(sym):
                rels[_du_prefix(i, sym)].add((a + off, b + off))
    return FiniteStructure(
        sig, total, tuple(frozenset(rels[sym]) for sym in sig.symbols)
    )


def timesq_member(age: TimesQ, blocks: list[FiniteStructure]) -> FiniteStructure:
    """Assemble a stacked member from inner members listed in order."""
    sig = age_signature(age)
    ord_sym = timesq_order_symbol(age)
    offsets = []
    total = 0
    for b in blocks:
        if b.n == 0:
            raise ValueError("blocks must be non-empty")
        offsets.append(total)
        total += b.n
    rels: dict[str, set[Pair]] = {sym: set() for sym in sig.symbols}
    for bi, block in enumerate(blocks):
        off = offsets[bi]
        for sym in age_signature(age.inner).symbols:
            for (a, b) in block.rel(sym):
                rels[sym].add((a + off, b + off))
        for bj in range(bi + 1, len(blocks)):
            for u in range(block.n):
                for w in range(blocks[bj].n):
                    rels[ord_sym].add((u + off, w + offsets[bj]))
    return FiniteStructure(
        sig, total, tuple(frozenset(rels[sym]) for sym in sig.symbols)
    )


def multiset_member(age: MultisetOver, blocks: list[FiniteStructure]) -> FiniteStructure:
    """Assemble a multiset member from inner members (order irrelevant)."""
    sig = age_signature(age)
    eq_sym = multiset_eq_symbol(age)
    offsets = []
    total = 0
    for b in blocks:
        if b.n == 0:
            raise ValueError("blocks must be non-empty")
        offsets.append(total)
        total += b.n
    rels: dict[str, set[Pair]] = {sym: set() for sym in sig.symbols}
    for bi, block in enumerate(blocks):
        off = offsets[bi]
        for sym in age_signature(age.inner).symbols:
            for (a, b) in block.rel(sym):
                rels[sym].add((a + off, b + off))
        for u in range(block.n):
            for w in range(block.n):
                rels[eq_sym].add((u + off, w + off))
    return FiniteStructure(
        sig, total, tuple(frozenset(rels[sym]) for sym in sig.symbols)
    )


# Common finite models.

def complete_graph(m: int) -> FiniteStructure:
    """K_m: the edge relation holds between every two distinct vertices."""
    pairs = {(a, b) for a in range(m) for b in range(m) if a != b}
    return structure(("edge",), m, {"edge": pairs})


def path_graph(m: int) -> FiniteStructure:
    pairs = set()
    for a in range(m - 1):
        pairs.add((a, a + 1))
        pairs.add((a + 1, a))
    return structure(("edge",), m, {"edge": pairs})


def chain(n: int) -> FiniteStructure:
    """The n-element linear order 0 < 1 < ... < n-1."""
    pairs = {(a, b) for a in range(n) for b in range(n) if a < b}
    return structure(("lt",), n, {"lt": pairs})

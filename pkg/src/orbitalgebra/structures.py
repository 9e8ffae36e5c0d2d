"""Finite multi-relational structures: canonical forms, embeddings, surgery.

All relations are binary; vertices are 0..n-1. Unary data (sorts, colors)
is encoded as loops (v, v) by the age combinators. Isomorphism classes are
identified by a canonical string id obtained from a minimal relabeling.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

Pair = tuple[int, int]


@dataclass(frozen=True)
class Signature:
    symbols: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError(f"duplicate relation names: {self.symbols}")

    def index(self, name: str) -> int:
        return self.symbols.index(name)


EMPTY_SIGNATURE = Signature(())


@dataclass(frozen=True)
class FiniteStructure:
    """A finite structure: vertex count plus one pair-set per relation symbol.

    ``relations`` is aligned with ``signature.symbols``.
    """

    signature: Signature
    n: int
    relations: tuple[frozenset[Pair], ...]

    def __post_init__(self):
        if len(self.relations) != len(self.signature.symbols):
            raise ValueError("relations not aligned with signature")
        for rel in self.relations:
            for (a, b) in rel:
                if not (0 <= a < self.n and 0 <= b < self.n):
                    raise ValueError(f"pair {(a, b)} out of range for n={self.n}")

    def rel(self, name: str) -> frozenset[Pair]:
        return self.relations[self.signature.index(name)]

    def __repr__(self):
        return f"FiniteStructure({canonical_form(self)!r})"


def structure(symbols: Iterable[str], n: int, relations: Mapping[str, Iterable[Pair]] | None = None) -> FiniteStructure:
    """Convenience constructor from a name -> pair-list mapping."""
    sig = Signature(tuple(symbols))
    relations = relations or {}
    unknown = set(relations) - set(sig.symbols)
    if unknown:
        raise ValueError(f"unknown relation names: {sorted(unknown)}")
    rels = tuple(
        frozenset((int(a), int(b)) for (a, b) in relations.get(sym, ()))
        for sym in sig.symbols
    )
    return FiniteStructure(sig, n, rels)


def empty_structure(sig: Signature) -> FiniteStructure:
    return FiniteStructure(sig, 0, tuple(frozenset() for _ in sig.symbols))


@dataclass(frozen=True)
class ColoredStructure:
    """A structure with a total vertex coloring by colors 1..r-1."""

    base: FiniteStructure
    colors: tuple[int, ...]

    def __post_init__(self):
        if len(self.colors) != self.base.n:
            raise ValueError("coloring must cover every vertex")
        if any(c < 1 for c in self.colors):
            raise ValueError("colors are 1-based")

    def __repr__(self):
        return f"ColoredStructure({canonical_form(self)!r})"


# ---------------------------------------------------------------------------
# canonical forms
# ---------------------------------------------------------------------------

def _twin_classes(s: FiniteStructure, colors: tuple[int, ...] | None) -> list[int]:
    """Map each vertex to a twin-class representative.

    Two vertices are twins when their transposition is an automorphism
    (color-preserving, in the colored case). Collapsing twins keeps the
    canonical-labeling frontier small on highly symmetric structures;
    dropping a twin is safe because the transposition fixes every other
    vertex, so both branches have identical minimal completions.
    """
    n = s.n
    rep = list(range(n))

    def is_twin(v: int, w: int) -> bool:
        if colors is not None and colors[v] != colors[w]:
            return False
        swap = {v: w, w: v}
        for relset in s.relations:
            for (a, b) in relset:
                if (swap.get(a, a), swap.get(b, b)) not in relset:
                    return False
        return True

    for v in range(n):
        if rep[v] != v:
            continue
        for w in range(v + 1, n):
            if rep[w] == w and is_twin(v, w):
                rep[w] = v
    return rep


def _row(s: FiniteStructure, colors, v: int, prefix: tuple[int, ...]) -> tuple[int, ...]:
    """Encoding row contributed by placing vertex v after ``prefix``."""
    bits = []
    if colors is not None:
        bits.append(colors[v])
    for relset in s.relations:
        for u in prefix:
            bits.append(1 if (v, u) in relset else 0)
            bits.append(1 if (u, v) in relset else 0)
        bits.append(1 if (v, v) in relset else 0)
    return tuple(bits)


def _min_labeling(s: FiniteStructure, colors: tuple[int, ...] | None) -> tuple[int, ...]:
    """Vertex order realizing the minimal row-by-row encoding."""
    n = s.n
    if n == 0:
        return ()
    twin_rep = _twin_classes(s, colors)
    frontier: list[tuple[int, ...]] = [()]
    for _ in range(n):
        best_row = None
        new_frontier: list[tuple[int, ...]] = []
        for state in frontier:
            used = set(state)
            seen_classes = set()
            for v in range(n):
                if v in used:
                    continue
                c = twin_rep[v]
                if c in seen_classes:
                    continue
                seen_classes.add(c)
                row = _row(s, colors, v, state)
                if best_row is None or row < best_row:
                    best_row = row
                    new_frontier = [state + (v,)]
                elif row == best_row:
                    new_frontier.append(state + (v,))
        frontier = new_frontier
    return frontier[0]


def _relabel(s: FiniteStructure, order: tuple[int, ...]) -> FiniteStructure:
    pos = {v: i for i, v in enumerate(order)}
    rels = tuple(
        frozenset((pos[a], pos[b]) for (a, b) in relset) for relset in s.relations
    )
    return FiniteStructure(s.signature, s.n, rels)


def _encode(s: FiniteStructure, colors: tuple[int, ...] | None) -> str:
    parts = [str(s.n)]
    for sym, relset in zip(s.signature.symbols, s.relations):
        pairs = ",".join(f"{a}.{b}" for (a, b) in sorted(relset))
        parts.append(f"{sym}:{pairs}")
    if colors is not None:
        parts.append("c:" + ",".join(str(c) for c in colors))
    return "|".join(parts)


@functools.lru_cache(maxsize=None)
def _canonicalize_plain(s: FiniteStructure) -> tuple[str, FiniteStructure]:
    order = _min_labeling(s, None)
    canon = _relabel(s, order)
    return _encode(canon, None), canon


@functools.lru_cache(maxsize=None)
def _canonicalize_colored(s: ColoredStructure) -> tuple[str, ColoredStructure]:
    order = _min_labeling(s.base, s.colors)
    canon_base = _relabel(s.base, order)
    canon_colors = tuple(s.colors[v] for v in order)
    canon = ColoredStructure(canon_base, canon_colors)
    return _encode(canon_base, canon_colors), canon


def canonicalize(s):
    """Return (IsoClassId, canonically relabeled structure)."""
    if isinstance(s, ColoredStructure):
        return _canonicalize_colored(s)
    return _canonicalize_plain(s)


def canonical_form(s) -> str:
    """IsoClassId: equal for two structures iff they are isomorphic."""
    return canonicalize(s)[0]


# ---------------------------------------------------------------------------
# embeddings
# ---------------------------------------------------------------------------

def _consistent(s: FiniteStructure, t: FiniteStructure, image: list[int], v: int, w: int) -> bool:
    """Can vertex v of s map to w of t given the partial map ``image``?"""
    for rs, rt in zip(s.relations, t.relations):
        if ((v, v) in rs) != ((w, w) in rt):
            return False
        for u, x in enumerate(image):
            if ((v, u) in rs) != ((w, x) in rt):
                return False
            if ((u, v) in rs) != ((x, w) in rt):
                return False
    return True


def iter_embeddings(s: FiniteStructure, t: FiniteStructure) -> Iterator[tuple[int, ...]]:
    """All injective maps s -> t preserving and reflecting every relation."""
    if s.signature != t.signature:
        raise ValueError(
            f"signature mismatch: {s.signature.symbols} vs {t.signature.symbols}"
        )

    image: list[int] = []
    used = [False] * t.n

    def extend(v: int):
        if v == s.n:
            yield tuple(image)
            return
        for w in range(t.n):
            if used[w] or not _consistent(s, t, image, v, w):
                continue
            used[w] = True
            image.append(w)
            yield from extend(v + 1)
            image.pop()
            used[w] = False

    yield from extend(0)


def count_embeddings(s: FiniteStructure, t: FiniteStructure) -> int:
    return sum(1 for _ in iter_embeddings(s, t))


def count_automorphisms(s: FiniteStructure) -> int:
    return count_embeddings(s, s)


# ---------------------------------------------------------------------------
# vertex surgery
# ---------------------------------------------------------------------------

def induced_substructure(s: FiniteStructure, vertices: Iterable[int]) -> FiniteStructure:
    """Restrict to ``vertices``, renumbered 0..k-1 preserving relative order."""
    vs = sorted(set(vertices))
    for v in vs:
        if not (0 <= v < s.n):
            raise ValueError(f"vertex {v} out of range for n={s.n}")
    pos = {v: i for i, v in enumerate(vs)}
    keep = set(vs)
    rels = tuple(
        frozenset((pos[a], pos[b]) for (a, b) in relset if a in keep and b in keep)
        for relset in s.relations
    )
    return FiniteStructure(s.signature, len(vs), rels)


def delete_vertex(s: FiniteStructure, v: int) -> FiniteStructure:
    if not (0 <= v < s.n):
        raise ValueError(f"vertex {v} out of range for n={s.n}")
    return induced_substructure(s, (u for u in range(s.n) if u != v))


def delete_colored_vertex(s: ColoredStructure, v: int) -> ColoredStructure:
    base = delete_vertex(s.base, v)
    colors = s.colors[:v] + s.colors[v + 1:]
    return ColoredStructure(base, colors)


def recolor_vertex(s: ColoredStructure, v: int, color: int) -> ColoredStructure:
    colors = s.colors[:v] + (color,) + s.colors[v + 1:]
    return ColoredStructure(s.base, colors)

"""DOT diagrams of the raising/lowering action, one node per iso class."""

from __future__ import annotations

from .ages import AgeSpec, Sets, TimesQ, enumerate_level, timesq_block_vertices
from .operators import ActionTruncation
from .structures import FiniteStructure


def class_descriptor(age: AgeSpec, rep: FiniteStructure) -> str:
    """Compact display name: tuple notation for stacked ages, [n] for sets,
    the canonical encoding otherwise."""
    if rep.n == 0:
        return "∅"
    if isinstance(age, TimesQ):
        blocks = timesq_block_vertices(age, rep)
        if blocks is not None:
            return "[" + ",".join(str(len(b)) for b in blocks) + "]"
    if isinstance(age, Sets):
        return f"[{rep.n}]"
    from .structures import canonical_form

    return canonical_form(rep)


def emit_dot(action: ActionTruncation, operator: str) -> str:
    """Render the e- or f-action as a labeled digraph, levels left to right."""
    if operator not in ("e", "f"):
        raise ValueError("operator must be 'e' or 'f'")
    age = action.age
    node_id: dict[tuple[int, str], str] = {}
    lines = [f"digraph {operator}_action {{", "  rankdir=LR;"]
    for n in range(action.bound + 1):
        classes = enumerate_level(age, n)
        decls = []
        for idx, cls in enumerate(classes):
            name = f"n{n}_{idx}"
            node_id[(n, cls.iso_id)] = name
            label = class_descriptor(age, cls.rep).replace('"', '\\"')
            decls.append(f'{name} [label="{label}"];')
        lines.append("  { rank=same; " + " ".join(decls) + " }")
    if operator == "e":
        blocks = [(n, action.e[n], n, n + 1) for n in range(action.bound)]
    else:
        blocks = [(n, action.f[n], n, n - 1) for n in range(1, action.bound + 1)]
    for _, mat, src_level, tgt_level in blocks:
        for (t, s), value in sorted(mat.entries.items()):
            src = node_id[(src_level, s)]
            tgt = node_id[(tgt_level, t)]
            lines.append(f'  {src} -> {tgt} [label="{value.render()}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

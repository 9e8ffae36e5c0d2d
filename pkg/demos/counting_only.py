#!/usr/bin/env python3
"""Counting-only ages: sequences with no measure attached.

Multisets of chains count integer partitions; several interchangeable
copies of plain sets count multisets of colors; disjoint unions multiply
rank series. The shape diagnostics run on any truncated sequence.
"""

from math import comb

from orbitalgebra import (
    DisjointUnion,
    FiniteModel,
    LinearOrders,
    MultisetOver,
    Sets,
    TimesQ,
    colored,
    complete_graph,
    rank_generating_coeffs,
    sequence_diagnostics,
)

partitions = MultisetOver(LinearOrders())
print("partition numbers:", rank_generating_coeffs(partitions, 8))

for m in (2, 3, 4):
    series = rank_generating_coeffs(colored(Sets(), m), 6)
    assert series == [comb(n + m - 1, n) for n in range(7)]
    print(f"{m} colors:", series)

# rank series multiply across disjoint unions
k2 = FiniteModel(complete_graph(2))
union = DisjointUnion((k2, Sets()))
r1 = rank_generating_coeffs(k2, 6)
r2 = rank_generating_coeffs(Sets(), 6)
ru = rank_generating_coeffs(union, 6)
print("product rule:", ru,
      "==", [sum(r1[i] * r2[n - i] for i in range(n + 1)) for n in range(7)])

# Fibonacci relatives from stacking complete graphs
for m in (2, 3, 4):
    print(f"stacked K{m}:", rank_generating_coeffs(TimesQ(FiniteModel(complete_graph(m))), 7))

print()
for name, series in [
    ("fibonacci", rank_generating_coeffs(TimesQ(k2), 8)),
    ("partitions", rank_generating_coeffs(partitions, 8)),
    ("constant", rank_generating_coeffs(Sets(), 8)),
]:
    d = sequence_diagnostics(series)
    print(f"{name:>10}: monotone={d.monotone} unimodal={d.unimodal} "
          f"log-concave={d.log_concave}")

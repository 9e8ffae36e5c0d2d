#!/usr/bin/env python3
"""The gl_3 picture: color classes on a triangular multidegree lattice.

For plain sets there is exactly one class per multidegree (a, b) and the
nine operators act with polynomial coefficients; the commutator table is
verified exactly. The same machinery runs unchanged on the stacked-K2 age,
where classes carry genuine structure.
"""

from orbitalgebra import (
    FiniteModel,
    Sets,
    TimesQ,
    complete_graph,
    glr_basis,
    glr_matrix,
    measure_for,
    verify_glr_relations,
)

age = Sets()
measure = measure_for(age)

basis = glr_basis(age, 3, 4)
print("multidegrees of total degree <= 4 (one class each):")
print(sorted(basis))
print()

print("operator coefficients out of (a, b) = (2, 1):")
for (i, j) in [(1, 2), (2, 1), (1, 3), (2, 3), (3, 1), (3, 2), (1, 1), (2, 2), (3, 3)]:
    mat = glr_matrix(age, measure, 3, i, j, (2, 1), 6)
    coeff = next(iter(mat.entries.values())) if mat.entries else "0"
    print(f"  E{i}{j}: {coeff}")
print()

report = verify_glr_relations(age, measure, 3, 4)
print("gl_3 commutators + color-swap symmetry on sets:",
      "pass" if report.passed else "FAIL")

stacked = TimesQ(FiniteModel(complete_graph(2)))
m2 = measure_for(stacked)
b2 = glr_basis(stacked, 3, 3)
print("stacked-K2 class counts per multidegree:",
      {d: len(c) for d, c in sorted(b2.items())})
report2 = verify_glr_relations(stacked, m2, 3, 3)
print("gl_3 relations on the stacked age:", "pass" if report2.passed else "FAIL")

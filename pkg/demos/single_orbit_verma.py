#!/usr/bin/env python3
"""The age of plain finite sets: one orbit per level, one symbolic string.

With the measure parameter kept symbolic the operators are the familiar
closed forms e = n+1, f = λ-n, h = 2n-λ, and the whole graded space is a
single lowest-weight string. Specializing λ to a natural number breaks
regularity, which the measure diagnostic pinpoints.
"""

from fractions import Fraction

from orbitalgebra import (
    Scalar,
    Sets,
    e_matrix,
    f_matrix,
    h_eigenvalue,
    measure_for,
    rank_generating_coeffs,
    specialize_age,
    total_point_measure,
    verify_r_measure,
    verma_multiplicities,
)

age = Sets()
measure = measure_for(age)

print("orbit counts:", rank_generating_coeffs(age, 8))
for n in range(4):
    (e,) = e_matrix(age, n).entries.values()
    (f,) = f_matrix(age, measure, n + 1).entries.values()
    print(f"level {n}: e = {e}, f(from {n+1}) = {f}, h = {h_eigenvalue(measure, n)}")

decomposition = verma_multiplicities(
    rank_generating_coeffs(age, 8), total_point_measure(measure)
)
print("multiplicities:", decomposition.multiplicities())
print("lowest weight of the single string:", decomposition.entries[0][1])
print()

# Specializing before or after matrix assembly agrees entry by entry.
point = Fraction(5, 2)
specialized = specialize_age(age, point)
m_spec = measure_for(specialized)
for n in range(1, 4):
    (sym,) = f_matrix(age, measure, n).entries.values()
    (spec,) = f_matrix(specialized, m_spec, n).entries.values()
    assert sym.specialize(point) == spec.as_fraction()
print(f"specialization at λ = {point} commutes with assembly")

# At λ = 3 the measure vanishes from class size 4 on: not regular.
m3 = measure_for(Sets(Scalar.from_int(3)))
report = verify_r_measure(m3, 5)
print("λ = 3 axiom check still passes:", report.passed)
print("but zero values appear:", report.zero_values)

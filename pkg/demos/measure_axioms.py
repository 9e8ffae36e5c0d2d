#!/usr/bin/env python3
"""One-point amalgamation checks: what passes, and one rule that cannot.

A measure must satisfy nu(s1) nu(s2) = nu(s0) * sum over amalgams, and it
suffices to check the one-point case. The disjoint-union measure obeys
this with the product recipe; the additive recipe fails already over the
empty base, and the verifier produces the witness.
"""

from orbitalgebra import (
    DisjointUnion,
    FiniteModel,
    LinearOrders,
    Scalar,
    Sets,
    TimesQ,
    complete_graph,
    measure_for,
    one_point_amalgamations,
    one_point_extensions,
    verify_r_measure,
)
from orbitalgebra.ages import empty_of

# A hand-run of the axiom on linear orders over the empty base: the two
# single-point extensions amalgamate to the identified point, y1 < y2, or
# y2 < y1, giving (-1)(-1) = 1 * (-1 + 1 + 1).
orders = LinearOrders()
(ext,) = one_point_extensions(orders, empty_of(orders))
amalgams = one_point_amalgamations(orders, empty_of(orders), ext, ext)
m = measure_for(orders)
values = [m.value(a.structure) for a in amalgams]
print("linear orders, empty base:", [str(v) for v in values])

suite = {
    "sets": Sets(),
    "linear orders": orders,
    "K3 subgraphs": FiniteModel(complete_graph(3)),
    "stacked sets": TimesQ(Sets()),
    "stacked K2": TimesQ(FiniteModel(complete_graph(2))),
    "product union": DisjointUnion((Sets(), Sets(Scalar.from_fraction("7/2")))),
}
for name, age in suite.items():
    report = verify_r_measure(measure_for(age), 5)
    print(f"{name:>14}: {'pass' if report.passed else 'FAIL'}"
          f" ({report.pairs_checked} extension pairs)")

# The additive disjoint-union recipe violates the axiom immediately.
bad = DisjointUnion((Sets(), Sets(Scalar.from_fraction("7/2"))), rule="sum")
report = verify_r_measure(measure_for(bad), 2)
print("\nadditive union rule:", "pass" if report.passed else "FAIL")
witness = next(
    v for v in report.violations if not v.lhs.is_rational()
)
print("  witness over the empty base:", witness.lhs, "!=", witness.rhs)

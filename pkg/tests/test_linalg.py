"""Exact rank/kernel, cross-checked against rational elimination."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from orbitalgebra import LAMBDA, ONE, ZERO, Scalar
from orbitalgebra.linalg import kernel_dimension, matrix_rank


def fraction_rank(rows: list[list[Fraction]]) -> int:
    """Classic Gaussian elimination over Q (independent of the library)."""
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            if rows[r][col]:
                factor = rows[r][col] / pv
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def test_zero_matrix():
    assert matrix_rank([[ZERO, ZERO], [ZERO, ZERO]]) == 0
    assert kernel_dimension([[ZERO, ZERO]], 2) == 2


def test_identity_rank():
    assert matrix_rank([[ONE, ZERO], [ZERO, ONE]]) == 2


def test_rank_with_cancellation():
    # second row is lambda times the first
    rows = [[ONE, LAMBDA], [LAMBDA, LAMBDA * LAMBDA]]
    assert matrix_rank(rows) == 1
    assert kernel_dimension(rows, 2) == 1


def test_rank_generic_vs_special():
    # [[lambda, 1], [1, lambda]] drops rank exactly at lambda = +-1
    rows = [[LAMBDA, ONE], [ONE, LAMBDA]]
    assert matrix_rank(rows) == 2


def test_rational_function_entries():
    rows = [[ONE / (LAMBDA - 1), ONE], [ONE, LAMBDA - 1]]
    assert matrix_rank(rows) == 1


small_entries = st.integers(-4, 4)


@settings(max_examples=100, deadline=None)
@given(
    st.lists(
        st.lists(st.tuples(small_entries, small_entries), min_size=3, max_size=3),
        min_size=1,
        max_size=4,
    )
)
def test_rank_agrees_with_specialized_elimination(data):
    # entries a + b*lambda; generic rank equals the max specialized rank
    rows = [[Scalar((a,)) + Scalar((b,)) * LAMBDA for (a, b) in row] for row in data]
    got = matrix_rank(rows)
    points = [Fraction(17, 3), Fraction(-19, 7), Fraction(23)]
    special = [
        fraction_rank([[x.specialize(p) for x in row] for row in rows]) for p in points
    ]
    assert got == max(special)
    assert all(got >= s for s in special)

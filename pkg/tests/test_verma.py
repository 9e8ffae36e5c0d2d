"""Lowest-weight string decomposition and its kernel witness."""

from fractions import Fraction

import pytest

from orbitalgebra import (
    LAMBDA,
    DecreasingSequenceError,
    DisjointUnion,
    FiniteModel,
    Scalar,
    Sets,
    build_sl2_action,
    character_identity_holds,
    complete_graph,
    finite_case_decomposition,
    kernel_cross_check,
    measure_for,
    rank_generating_coeffs,
    sequence_diagnostics,
    total_point_measure,
    verma_multiplicities,
)


def test_sets_single_string():
    a = [1] * 9
    dec = verma_multiplicities(a, LAMBDA)
    assert dec.multiplicities() == [1] + [0] * 8
    assert dec.entries[0][1] == -LAMBDA


def test_two_sets_one_string_per_level():
    lam2 = Scalar.from_fraction(Fraction(7, 2))
    union = DisjointUnion((Sets(), Sets(lam2)))
    a = rank_generating_coeffs(union, 8)
    assert a == list(range(1, 10))
    mu = total_point_measure(measure_for(union))
    dec = verma_multiplicities(a, mu)
    assert dec.multiplicities() == [1] * 9
    for n, weight, _ in dec.entries:
        assert weight == Scalar.from_int(2 * n) - LAMBDA - lam2


def test_fibonacci_differences(fibonacci_age):
    a = rank_generating_coeffs(fibonacci_age, 8)
    dec = verma_multiplicities(a, total_point_measure(measure_for(fibonacci_age)))
    assert dec.multiplicities() == [1, 0, 1, 1, 2, 3, 5, 8, 13]


def test_decreasing_sequence_rejected():
    with pytest.raises(DecreasingSequenceError):
        verma_multiplicities([1, 2, 1], Scalar.from_int(0))


def test_character_identity():
    a = [1, 1, 2, 3, 5, 8, 13, 21, 34]
    m = [a[0]] + [a[n] - a[n - 1] for n in range(1, len(a))]
    assert character_identity_holds(a, m)
    assert not character_identity_holds(a, [1] * len(a))


def test_character_identity_every_measured_infinite_age():
    from conftest import builtin_age_roster
    from orbitalgebra import is_infinite

    for age in builtin_age_roster():
        if not is_infinite(age):
            continue
        a = rank_generating_coeffs(age, 8)
        m = [a[0]] + [a[n] - a[n - 1] for n in range(1, len(a))]
        assert character_identity_holds(a, m)
        assert all(x >= 0 for x in m)


def test_product_law_for_disjoint_unions():
    # multiplicity series of a union = product of rank series times (1-q)
    k2 = FiniteModel(complete_graph(2))
    union = DisjointUnion((k2, Sets()))
    bound = 8
    a = rank_generating_coeffs(union, bound)
    r1 = rank_generating_coeffs(k2, bound)
    r2 = rank_generating_coeffs(Sets(), bound)
    product = [
        sum(r1[i] * r2[n - i] for i in range(n + 1)) for n in range(bound + 1)
    ]
    assert a == product
    mults = verma_multiplicities(
        a, total_point_measure(measure_for(union))
    ).multiplicities()
    lhs = [product[0]] + [product[n] - product[n - 1] for n in range(1, bound + 1)]
    assert mults == lhs


def test_kernel_cross_check_sets():
    age = Sets()
    m = measure_for(age)
    action = build_sl2_action(age, m, 6)
    report = kernel_cross_check(action)
    assert report.status == "ok" and report.passed
    # level 0 kernel is everything, later levels have trivial kernel
    assert report.per_level[0] == (0, 1, 1)
    assert all(k == 0 for (n, k, _) in report.per_level[1:])


def test_kernel_cross_check_fibonacci(fibonacci_age):
    m = measure_for(fibonacci_age)
    action = build_sl2_action(fibonacci_age, m, 6)
    report = kernel_cross_check(action)
    assert report.status == "ok" and report.passed
    by_level = {n: k for (n, k, _) in report.per_level}
    assert by_level[2] == 1  # F_2 - F_1


def test_kernel_check_skipped_when_nonregular():
    age = Sets(Scalar.from_int(3))
    m = measure_for(age)
    # bound 3: lowering blocks still have nonzero bases, but the size-4
    # class (value 3*2*1*0) enters the enumerated range
    action = build_sl2_action(age, m, 3)
    report = kernel_cross_check(action)
    assert report.status == "skipped-nonregular"
    assert not report.passed


def test_lowering_blocks_may_carry_zero_values():
    # at lambda = 3 the level-4 block has a vanishing numerator: the entry
    # disappears rather than crashing (only zero bases are poles)
    age = Sets(Scalar.from_int(3))
    m = measure_for(age)
    from orbitalgebra import f_matrix

    assert f_matrix(age, m, 4).is_zero()
    with pytest.raises(ZeroDivisionError):
        f_matrix(age, m, 5)


def test_mixed_union_staircase():
    for m_size in (2, 3):
        union = DisjointUnion((FiniteModel(complete_graph(m_size)), Sets()))
        a = rank_generating_coeffs(union, 8)
        dec = verma_multiplicities(a, total_point_measure(measure_for(union)))
        expected = [1] * (m_size + 1) + [0] * (8 - m_size)
        assert dec.multiplicities() == expected
        report = finite_case_decomposition(a, None)
        assert report.multiplicities == expected
        assert report.staircase_stable_from == m_size


def test_finite_case_symmetry():
    k2 = FiniteModel(complete_graph(2))
    a = rank_generating_coeffs(k2, 2)
    report = finite_case_decomposition(a, 2)
    assert report.symmetric and report.unimodal
    k3 = FiniteModel(complete_graph(3))
    assert rank_generating_coeffs(k3, 3) == [1, 1, 1, 1]


def test_sequence_diagnostics():
    fib = sequence_diagnostics([1, 1, 2, 3, 5, 8, 13])
    assert fib.monotone and not fib.log_concave  # 1*2 > 1*1 at n=1
    const = sequence_diagnostics([1, 1, 1, 1])
    assert const.monotone and const.symmetric and const.unimodal and const.log_concave
    parts = sequence_diagnostics([1, 1, 2, 3, 5, 7, 11])
    assert parts.monotone
    assert sequence_diagnostics([1, 2, 3, 2, 1]).unimodal
    assert not sequence_diagnostics([2, 1, 2]).unimodal

"""gl_r operators on color classes: bases, closed forms, relations."""

import pytest

from orbitalgebra import (
    LAMBDA,
    Scalar,
    Sets,
    canonical_form,
    enumerate_level,
    glr_basis,
    glr_matrix,
    measure_for,
    verify_glr_relations,
)
from orbitalgebra.structures import ColoredStructure


def test_sets_r3_one_class_per_multidegree():
    basis = glr_basis(Sets(), 3, 4)
    for deg, classes in basis.items():
        assert len(classes) == 1, deg
    assert set(basis) == {
        (a, b) for a in range(5) for b in range(5) if a + b <= 4
    }


def test_r2_basis_forgets_to_level_basis(fibonacci_age):
    # with a single finite color the colored classes biject with plain ones
    basis = glr_basis(fibonacci_age, 2, 4)
    for n in range(5):
        assert len(basis[(n,)]) == len(enumerate_level(fibonacci_age, n))


def test_fibonacci_r3_degree_1_1_classes(fibonacci_age):
    # brute force: 2-vertex members are one doubled block or two stacked
    # singletons; coloring the doubled block (1,2) equals (2,1) via the
    # block swap, the stacked singletons give two rigid colorings
    basis = glr_basis(fibonacci_age, 3, 2)
    assert len(basis[(1, 1)]) == 3
    reps = set()
    for n in range(3):
        for cls in enumerate_level(fibonacci_age, n):
            if cls.rep.n != 2:
                continue
            for colors in [(1, 2), (2, 1)]:
                reps.add(canonical_form(ColoredStructure(cls.rep, colors)))
    assert len(reps) == 3


def test_sets_r3_closed_form_entries():
    age = Sets()
    m = measure_for(age)
    for (a, b) in [(0, 0), (1, 1), (2, 1)]:
        e13 = glr_matrix(age, m, 3, 1, 3, (a, b), 6)
        assert list(e13.entries.values()) == [Scalar.from_int(a + 1)]
        e23 = glr_matrix(age, m, 3, 2, 3, (a, b), 6)
        assert list(e23.entries.values()) == [Scalar.from_int(b + 1)]
        if b > 0:
            e12 = glr_matrix(age, m, 3, 1, 2, (a, b), 6)
            assert list(e12.entries.values()) == [Scalar.from_int(a + 1)]
        e31 = glr_matrix(age, m, 3, 3, 1, (a, b), 6)
        if a > 0:
            assert list(e31.entries.values()) == [LAMBDA - (a + b) + 1]
        else:
            assert e31.is_zero()


def test_diagonal_entries():
    age = Sets()
    m = measure_for(age)
    e11 = glr_matrix(age, m, 3, 1, 1, (2, 1), 6)
    assert list(e11.entries.values()) == [Scalar.from_int(2)]
    e33 = glr_matrix(age, m, 3, 3, 3, (2, 1), 6)
    assert list(e33.entries.values()) == [LAMBDA - 3]


def test_r2_reduces_to_e_and_f(fibonacci_age):
    from orbitalgebra import e_matrix, f_matrix
    from orbitalgebra.structures import ColoredStructure

    age = fibonacci_age
    m = measure_for(age)

    def colored_id(rep):
        return canonical_form(ColoredStructure(rep, (1,) * rep.n))

    for n in range(4):
        plain_e = e_matrix(age, n)
        colored_id_by = {
            c.iso_id: colored_id(c.rep)
            for lev in (n, n + 1)
            for c in enumerate_level(age, lev)
        }
        expected = {
            (colored_id_by[t], colored_id_by[s]): v
            for (t, s), v in plain_e.entries.items()
        }
        raised = glr_matrix(age, m, 2, 1, 2, (n,), 6)
        assert raised.entries == expected
    for n in range(1, 5):
        plain_f = f_matrix(age, m, n)
        colored_id_by = {
            c.iso_id: colored_id(c.rep)
            for lev in (n, n - 1)
            for c in enumerate_level(age, lev)
        }
        expected = {
            (colored_id_by[t], colored_id_by[s]): v
            for (t, s), v in plain_f.entries.items()
        }
        lowered = glr_matrix(age, m, 2, 2, 1, (n,), 6)
        assert lowered.entries == expected


def test_bracket_e13_e31_by_hand():
    # [E13, E31] on (a,b) must equal a - (lambda - a - b)
    age = Sets()
    m = measure_for(age)
    a, b = 2, 1
    e31 = glr_matrix(age, m, 3, 3, 1, (a, b), 6)
    e13_back = glr_matrix(age, m, 3, 1, 3, (a - 1, b), 6)
    first = next(iter(e13_back.entries.values())) * next(iter(e31.entries.values()))
    e13 = glr_matrix(age, m, 3, 1, 3, (a, b), 6)
    e31_back = glr_matrix(age, m, 3, 3, 1, (a + 1, b), 6)
    second = next(iter(e31_back.entries.values())) * next(iter(e13.entries.values()))
    got = first - second
    want = Scalar.from_int(a) - (LAMBDA - Scalar.from_int(a + b))
    assert got == want


def test_disjoint_index_bracket_vanishes():
    age = Sets()
    m = measure_for(age)
    report = verify_glr_relations(age, m, 3, 2)
    assert report.passed


def test_glr_relations_sets_r3():
    report = verify_glr_relations(Sets(), measure_for(Sets()), 3, 4)
    assert report.passed, report.violations[:2]


@pytest.mark.slow
def test_glr_relations_fibonacci_r3(fibonacci_age):
    report = verify_glr_relations(fibonacci_age, measure_for(fibonacci_age), 3, 4)
    assert report.passed, report.violations[:2]


def test_counting_only_rules_raise(partitions_age):
    with pytest.raises(Exception):
        # E_rr needs the total measure; counting-only ages cannot provide it
        glr_matrix(partitions_age, None, 3, 3, 3, (1, 0), 4)

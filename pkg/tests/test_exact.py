"""Exact rational linear algebra: ranks, kernels, spans, integerization."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singideal.exact import (RationalMatrix, in_span, integerize, kernel_basis,
                             kernel_dim, rank, same_subspace, spans_full)

rationals = st.fractions(min_value=-9, max_value=9, max_denominator=4)


def matrices(max_dim=6):
    return st.integers(1, max_dim).flatmap(
        lambda cols: st.lists(
            st.lists(rationals, min_size=cols, max_size=cols),
            min_size=1, max_size=max_dim))


def dot(row, vec):
    return sum((Fraction(a) * b for a, b in zip(row, vec)), Fraction(0))


def test_rank_basics():
    assert rank([[0, 0, 0], [0, 0, 0], [0, 0, 0]]) == 0
    assert rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    rows = [[1, 1, 0], [0, 1, 1], [1, 0, -1]]
    # third row is the difference of the first two
    assert [a - b for a, b in zip(rows[0], rows[1])] == rows[2]
    assert rank(rows) == 2


def test_kernel_basics():
    assert kernel_basis([[1, 0], [0, 1]]) == []
    basis = kernel_basis([[1, 1]])
    assert len(basis) == 1
    v = basis[0]
    assert v[0] + v[1] == 0 and v != (0, 0)
    # single constraint row of the order-2 coset system
    m = RationalMatrix.from_rows([[1, 1]])
    assert kernel_dim(m) == 1


def test_rational_matrix_shape_checks():
    with pytest.raises(ValueError):
        RationalMatrix(2, 2, (1, 2, 3))
    m = RationalMatrix.from_rows([[1, 2], [3, 4]])
    assert m.row(1) == (3, 4)


def test_spans_full_examples():
    assert spans_full([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 3)
    assert not spans_full([[1, 1]], 2)
    with pytest.raises(ValueError):
        spans_full([[1, 0]], 3)


def test_integerize_examples():
    assert integerize([Fraction(1, 2), Fraction(-1, 3)]) == (3, -2)
    assert integerize([2, 4]) == (1, 2)
    assert integerize([-1, 1]) == (1, -1)
    with pytest.raises(ValueError):
        integerize([0, Fraction(0)])


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_nullity_and_exact_kernel(rows):
    cols = len(rows[0])
    r = rank(rows)
    basis = kernel_basis(rows)
    assert r + len(basis) == cols
    for vec in basis:
        assert all(dot(row, vec) == 0 for row in rows)
    # kernel vectors are independent: each has a 1 in its own free column
    assert rank(basis) == len(basis) if basis else True


@settings(max_examples=80, deadline=None)
@given(st.lists(rationals, min_size=1, max_size=8))
def test_integerize_properties(vec):
    if all(x == 0 for x in vec):
        with pytest.raises(ValueError):
            integerize(vec)
        return
    out = integerize(vec)
    from math import gcd
    g = 0
    for x in out:
        g = gcd(g, x)
    assert g == 1
    lead = next(x for x in out if x)
    assert lead > 0
    # out = c * vec for a non-zero rational c, checked by cross-multiplication;
    # the sign of c is whatever makes the leading entry of out positive
    i = next(i for i, x in enumerate(vec) if x != 0)
    c = Fraction(out[i]) / Fraction(vec[i])
    assert c != 0
    assert (c > 0) == (Fraction(vec[i]) > 0)
    assert all(Fraction(o) == c * Fraction(v) for o, v in zip(out, vec))


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_spans_full_matches_rank(rows):
    dim = len(rows[0])
    assert spans_full(rows, dim) == (rank(rows) == dim)


def test_affine_lines_of_f2_squared_span():
    # the six order-2 coset indicators of C2 x C2 fill the 4-dim space
    from singideal.groups import cosets_of_subgroup, cyclic, direct_product, minimal_subgroups
    v4 = direct_product([cyclic(2), cyclic(2)])
    vectors = []
    for sub in minimal_subgroups(v4):
        for coset in cosets_of_subgroup(v4, sub):
            row = [0] * 4
            for x in coset.elements:
                row[x] = 1
            vectors.append(row)
    assert len(vectors) == 6
    assert spans_full(vectors, 4)


def test_in_span_and_same_subspace():
    b1 = [(1, 0, 1), (0, 1, 1)]
    b2 = [(1, 1, 2), (1, -1, 0)]
    assert same_subspace(b1, b2)
    assert in_span(b1, (2, 3, 5))
    assert not in_span(b1, (0, 0, 1))
    assert not same_subspace(b1, [(1, 0, 0)])
    assert same_subspace([], [])
    assert same_subspace([], [(0, 0)])


def test_fraction_entries_cleared_exactly():
    rows = [[Fraction(1, 3), Fraction(1, 6)], [Fraction(2, 3), Fraction(1, 3)]]
    assert rank(rows) == 1
    basis = kernel_basis(rows)
    assert len(basis) == 1
    assert dot(rows[0], basis[0]) == 0

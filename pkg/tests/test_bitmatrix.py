from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from altmat import (
    BitMatrix,
    compose,
    exact_rank,
    flip_transpose,
    gf2_mul,
    gf2_rank,
    gf2_solve,
    stack,
)
from conftest import bit_matrices, square_bit_matrices

A22 = BitMatrix.from_rows([[1, 1, 0], [1, 0, 1], [0, 1, 1]])


# -- independent oracles -------------------------------------------------------


def rank_by_span(m: BitMatrix) -> int:
    """|row span| = 2^rank, by enumerating all row subsets (small only)."""
    span = {0}
    for w in m.bits:
        span |= {v ^ w for v in span}
    return len(span).bit_length() - 1


def rank_by_fractions(m: BitMatrix) -> int:
    """Plain rational Gaussian elimination, independent of the Bareiss path."""
    rows = [[Fraction(e) for e in row] for row in m.to_lists()]
    rank = 0
    for c in range(m.cols):
        sel = next((i for i in range(rank, m.rows) if rows[i][c] != 0), None)
        if sel is None:
            continue
        rows[rank], rows[sel] = rows[sel], rows[rank]
        for i in range(m.rows):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


# -- construction and access ----------------------------------------------------


def test_from_rows_rejects_bad_entries():
    with pytest.raises(ValueError):
        BitMatrix.from_rows([[0, 2]])
    with pytest.raises(ValueError):
        BitMatrix.from_rows([[0, 1], [1]])
    with pytest.raises(ValueError):
        BitMatrix.from_rows([])


def test_dimensions_are_part_of_identity():
    a = BitMatrix.from_rows([[0, 1]])
    b = BitMatrix.from_rows([[0], [1]])
    assert a != b
    assert a == BitMatrix(1, 2, (2,))


def test_row_and_col_sums():
    assert A22.row_sums() == (2, 2, 2)
    assert A22.col_sums() == (2, 2, 2)
    assert A22.row_ones(1) == [0, 2]


# -- flip transpose -------------------------------------------------------------


def test_flip_transpose_hand_values():
    assert flip_transpose(BitMatrix.from_rows([[1, 1], [0, 0]])) == BitMatrix.from_rows(
        [[0, 1], [0, 1]]
    )
    assert flip_transpose(BitMatrix.identity(3)) == BitMatrix.identity(3)
    assert flip_transpose(A22) == A22


@given(bit_matrices())
def test_flip_transpose_is_an_involution(m):
    assert flip_transpose(flip_transpose(m)) == m


@given(square_bit_matrices())
def test_flip_transpose_is_conjugated_transpose(m):
    ia = BitMatrix.anti_identity(m.rows)
    assert flip_transpose(m) == gf2_mul(gf2_mul(ia, m.transpose()), ia)


@given(bit_matrices())
def test_flip_transpose_index_formula(m):
    f = flip_transpose(m)
    assert (f.rows, f.cols) == (m.cols, m.rows)
    for i in range(f.rows):
        for j in range(f.cols):
            assert f.get(i, j) == m.get(m.rows - 1 - j, m.cols - 1 - i)


# -- ranks ----------------------------------------------------------------------


def test_gf2_rank_hand_values():
    assert gf2_rank(BitMatrix.identity(3)) == 3
    assert gf2_rank(BitMatrix.ones(2, 2)) == 1
    # the three rows sum to zero mod 2
    assert gf2_rank(A22) == 2


def test_exact_rank_hand_values():
    assert exact_rank(BitMatrix.identity(3)) == 3
    # det = -2 by cofactor expansion, so full rank over the rationals
    assert exact_rank(A22) == 3


@given(bit_matrices())
def test_gf2_rank_matches_span_enumeration(m):
    assert gf2_rank(m) == rank_by_span(m)


@settings(max_examples=60)
@given(bit_matrices())
def test_exact_rank_matches_fraction_elimination(m):
    assert exact_rank(m) == rank_by_fractions(m)


@given(bit_matrices())
def test_gf2_rank_never_exceeds_exact_rank(m):
    assert gf2_rank(m) <= exact_rank(m) <= min(m.rows, m.cols)


# -- solving --------------------------------------------------------------------


def test_gf2_solve_hand_values():
    assert gf2_solve(BitMatrix.identity(2), (1, 0)) == (1, 0)
    assert gf2_solve(BitMatrix.zeros(1, 1), (0,)) == (0,)
    assert gf2_solve(BitMatrix.zeros(1, 1), (1,)) is None


def test_gf2_solve_rejects_bad_rhs_length():
    with pytest.raises(ValueError):
        gf2_solve(BitMatrix.identity(2), (1, 0, 0))


@given(bit_matrices(), st.data())
def test_gf2_solve_solutions_verify(m, data):
    rhs = tuple(data.draw(st.integers(0, 1)) for _ in range(m.rows))
    x = gf2_solve(m, rhs)
    if x is None:
        # independent consistency check: the rhs enlarges the column span
        aug = BitMatrix(
            m.rows, m.cols + 1,
            tuple(w | (b << m.cols) for w, b in zip(m.bits, rhs)),
        )
        assert gf2_rank(aug) == gf2_rank(m) + 1
    else:
        for i in range(m.rows):
            acc = sum(m.get(i, j) * x[j] for j in range(m.cols)) % 2
            assert acc == rhs[i]


# -- products -------------------------------------------------------------------


@settings(max_examples=60)
@given(square_bit_matrices(), square_bit_matrices())
def test_gf2_mul_matches_naive_product(a, b):
    if a.cols != b.rows:
        a, b = a, BitMatrix.identity(a.cols)
    p = gf2_mul(a, b)
    for i in range(a.rows):
        for j in range(b.cols):
            acc = sum(a.get(i, t) * b.get(t, j) for t in range(a.cols)) % 2
            assert p.get(i, j) == acc


# -- block composition ----------------------------------------------------------


def test_stack_hand_value():
    assert stack(BitMatrix.ones(1, 2), BitMatrix.identity(2)) == BitMatrix.from_rows(
        [[1, 1], [1, 0], [0, 1]]
    )


def test_compose_zero_fill_hand_value():
    o2 = stack(BitMatrix.ones(1, 2), BitMatrix.identity(2))
    o1 = stack(BitMatrix.ones(1, 1), BitMatrix.identity(1))
    assert compose([o2, o1], fill=0) == A22


def test_compose_one_fill_hand_value():
    o2 = stack(BitMatrix.zeros(1, 2), BitMatrix.hollow_ones(2))
    o1 = stack(BitMatrix.zeros(1, 1), BitMatrix.hollow_ones(1))
    assert compose([o2, o1], fill=1) == BitMatrix.from_rows(
        [[0, 0, 1], [0, 1, 0], [1, 0, 0]]
    )


def test_compose_rejects_increasing_heights():
    with pytest.raises(ValueError):
        compose([BitMatrix.ones(1, 1), BitMatrix.ones(2, 1)], fill=0)


@settings(max_examples=60)
@given(st.lists(bit_matrices(max_rows=5, max_cols=4), min_size=1, max_size=4))
def test_compose_fill_complementarity(blocks):
    blocks.sort(key=lambda b: -b.rows)
    joined = compose(blocks, fill=0)
    complemented = compose([b.complement() for b in blocks], fill=1)
    assert joined.xor(complemented) == BitMatrix.ones(joined.rows, joined.cols)

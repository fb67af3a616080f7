import pytest
from hypothesis import given, settings

from altmat import (
    BitMatrix,
    MatrixParseError,
    build_a,
    build_b,
    build_m,
    export_matrix,
    import_matrix,
)
from conftest import bit_matrices

A22 = BitMatrix.from_rows([[1, 1, 0], [1, 0, 1], [0, 1, 1]])


def test_dense_text_hand_value():
    assert export_matrix(A22, "dense") == "110\n101\n011\n"


def test_matrixmarket_hand_value():
    assert export_matrix(A22, "matrixmarket") == (
        "%%MatrixMarket matrix coordinate pattern general\n"
        "3 3 6\n"
        "1 1\n1 2\n2 1\n2 3\n3 2\n3 3\n"
    )


def test_alist_hand_value():
    assert export_matrix(A22, "alist") == (
        "3 3\n2 2\n2 2 2\n2 2 2\n1 2\n1 3\n2 3\n1 2\n1 3\n2 3\n"
    )


def test_unknown_format_rejected():
    with pytest.raises(ValueError):
        export_matrix(A22, "csv")
    with pytest.raises(ValueError):
        import_matrix("", "csv")


@settings(max_examples=60)
@given(bit_matrices(max_rows=6, max_cols=9))
def test_round_trip_on_random_matrices(m):
    for fmt in ("dense", "matrixmarket", "alist"):
        assert import_matrix(export_matrix(m, fmt), fmt) == m


@pytest.mark.parametrize("fmt", ["dense", "matrixmarket", "alist"])
def test_round_trip_on_family_members(fmt):
    for mat in (build_a(4, 3), build_b(1, 4), build_b(6, 2), build_m(4)):
        assert import_matrix(export_matrix(mat, fmt), fmt) == mat


@pytest.mark.parametrize("fmt", ["dense", "matrixmarket", "alist"])
def test_empty_payload_is_a_parse_error(fmt):
    with pytest.raises(MatrixParseError, match="line 1"):
        import_matrix("", fmt)


def test_dense_rejects_ragged_and_foreign_characters():
    with pytest.raises(MatrixParseError, match="line 2"):
        import_matrix("10\n1\n", "dense")
    with pytest.raises(MatrixParseError, match="invalid character"):
        import_matrix("1x\n", "dense")


def test_matrixmarket_rejects_malformed_payloads():
    with pytest.raises(MatrixParseError, match="header"):
        import_matrix("%%MatrixMarket matrix coordinate real general\n1 1 0\n", "matrixmarket")
    good = "%%MatrixMarket matrix coordinate pattern general\n"
    with pytest.raises(MatrixParseError, match="entry lines"):
        import_matrix(good + "2 2 2\n1 1\n", "matrixmarket")
    with pytest.raises(MatrixParseError, match="out of bounds"):
        import_matrix(good + "2 2 1\n3 1\n", "matrixmarket")
    with pytest.raises(MatrixParseError, match="duplicate"):
        import_matrix(good + "2 2 2\n1 1\n1 1\n", "matrixmarket")


def test_alist_rejects_inconsistent_headers():
    text = export_matrix(A22, "alist")
    lines = text.splitlines()
    # corrupt one column weight: the declared weights no longer match
    lines[2] = "2 1 2"
    with pytest.raises(MatrixParseError):
        import_matrix("\n".join(lines) + "\n", "alist")
    # corrupt a row line so the two sections disagree
    lines = text.splitlines()
    lines[7] = "1 3"
    with pytest.raises(MatrixParseError, match="disagrees"):
        import_matrix("\n".join(lines) + "\n", "alist")
    # wrong number of lines
    with pytest.raises(MatrixParseError, match="expected"):
        import_matrix("2 2\n1 1\n1 1\n1 1\n1\n2\n1\n", "alist")


def test_alist_zero_matrix_round_trip():
    z = BitMatrix.zeros(2, 3)
    text = export_matrix(z, "alist")
    assert import_matrix(text, "alist") == z


def test_parse_error_carries_line_number():
    err = MatrixParseError(7, "boom")
    assert err.line == 7
    assert "line 7" in str(err)

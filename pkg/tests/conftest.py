from hypothesis import strategies as st

from altmat import BitMatrix


@st.composite
def bit_matrices(draw, max_rows: int = 7, max_cols: int = 7):
    rows = draw(st.integers(min_value=1, max_value=max_rows))
    cols = draw(st.integers(min_value=1, max_value=max_cols))
    words = draw(
        st.lists(
            st.integers(min_value=0, max_value=(1 << cols) - 1),
            min_size=rows,
            max_size=rows,
        )
    )
    return BitMatrix(rows, cols, tuple(words))


@st.composite
def square_bit_matrices(draw, max_n: int = 7):
    n = draw(st.integers(min_value=1, max_value=max_n))
    words = draw(
        st.lists(
            st.integers(min_value=0, max_value=(1 << n) - 1), min_size=n, max_size=n
        )
    )
    return BitMatrix(n, n, tuple(words))

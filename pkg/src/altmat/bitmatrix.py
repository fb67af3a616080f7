"""Exact (0,1)-matrix core: GF(2) arithmetic, rational rank, block composition.

Rows are packed into Python ints (bit j = column j), so whole-row XOR and
masking are single int operations and sizes in the thousands of columns
stay cheap. All values are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class BitMatrix:
    """Immutable (0,1)-matrix; ``bits[i]`` holds row i with bit j = column j."""

    rows: int
    cols: int
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix must have at least one row and one column")
        if len(self.bits) != self.rows:
            raise ValueError("bit rows do not match declared row count")
        mask = (1 << self.cols) - 1
        for i, word in enumerate(self.bits):
            if word < 0 or word & ~mask:
                raise ValueError(f"row {i} has bits outside {self.cols} columns")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "BitMatrix":
        if not rows:
            raise ValueError("need at least one row")
        ncols = len(rows[0])
        words = []
        for row in rows:
            if len(row) != ncols:
                raise ValueError("ragged rows")
            word = 0
            for j, e in enumerate(row):
                if e not in (0, 1):
                    raise ValueError(f"entry {e!r} is not a bit")
                word |= e << j
            words.append(word)
        return cls(len(rows), ncols, tuple(words))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def ones(cls, rows: int, cols: int) -> "BitMatrix":
        word = (1 << cols) - 1
        return cls(rows, cols, (word,) * rows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def anti_identity(cls, n: int) -> "BitMatrix":
        """Permutation matrix that reverses coordinate order."""
        return cls(n, n, tuple(1 << (n - 1 - i) for i in range(n)))

    @classmethod
    def hollow_ones(cls, n: int) -> "BitMatrix":
        """All-ones matrix minus the identity."""
        word = (1 << n) - 1
        return cls(n, n, tuple(word ^ (1 << i) for i in range(n)))

    # -- element access ----------------------------------------------------

    def get(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError((i, j))
        return (self.bits[i] >> j) & 1

    def row_ones(self, i: int) -> list[int]:
        """Column indices of the ones in row i, ascending."""
        word = self.bits[i]
        out = []
        j = 0
        while word:
            if word & 1:
                out.append(j)
            word >>= 1
            j += 1
        return out

    def to_lists(self) -> list[list[int]]:
        return [[(w >> j) & 1 for j in range(self.cols)] for w in self.bits]

    # -- sums and simple transforms ----------------------------------------

    def row_sums(self) -> tuple[int, ...]:
        return tuple(w.bit_count() for w in self.bits)

    def col_sums(self) -> tuple[int, ...]:
        sums = [0] * self.cols
        for w in self.bits:
            j = 0
            while w:
                if w & 1:
                    sums[j] += 1
                w >>= 1
                j += 1
        return tuple(sums)

    def transpose(self) -> "BitMatrix":
        words = [0] * self.cols
        for i, w in enumerate(self.bits):
            j = 0
            while w:
                if w & 1:
                    words[j] |= 1 << i
                w >>= 1
                j += 1
        return BitMatrix(self.cols, self.rows, tuple(words))

    def complement(self) -> "BitMatrix":
        """All-ones matrix of the same shape minus self."""
        mask = (1 << self.cols) - 1
        return BitMatrix(self.rows, self.cols, tuple(w ^ mask for w in self.bits))

    def xor(self, other: "BitMatrix") -> "BitMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return BitMatrix(
            self.rows, self.cols, tuple(a ^ b for a, b in zip(self.bits, other.bits))
        )

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "BitMatrix":
        words = []
        for i in row_idx:
            src = self.bits[i]
            word = 0
            for t, j in enumerate(col_idx):
                word |= ((src >> j) & 1) << t
            words.append(word)
        return BitMatrix(len(row_idx), len(col_idx), tuple(words))

    def permute_columns(self, perm: Sequence[int]) -> "BitMatrix":
        """New matrix whose column j is old column perm[j]."""
        if sorted(perm) != list(range(self.cols)):
            raise ValueError("not a permutation of the columns")
        return self.submatrix(range(self.rows), perm)

    def is_zero(self) -> bool:
        return all(w == 0 for w in self.bits)


# -- block composition -------------------------------------------------------


def stack(upper: BitMatrix, lower: BitMatrix) -> BitMatrix:
    """Place ``lower`` below ``upper`` (both must have the same width)."""
    if upper.cols != lower.cols:
        raise ValueError("width mismatch in vertical stack")
    return BitMatrix(upper.rows + lower.rows, upper.cols, upper.bits + lower.bits)


def compose(
    blocks: Sequence[BitMatrix], fill: int = 0, top: BitMatrix | None = None
) -> BitMatrix:
    """Join blocks side by side, bottoms aligned, filling upper cells with ``fill``.

    If ``top`` is given it is stacked above the first block before joining.
    Block heights must be non-increasing left to right.
    """
    if not blocks:
        raise ValueError("need at least one block")
    if fill not in (0, 1):
        raise ValueError("fill must be a bit")
    blocks = list(blocks)
    if top is not None:
        blocks[0] = stack(top, blocks[0])
    heights = [b.rows for b in blocks]
    if any(h2 > h1 for h1, h2 in zip(heights, heights[1:])):
        raise ValueError("block row counts must be non-increasing left to right")
    total_rows = heights[0]
    total_cols = sum(b.cols for b in blocks)
    words = [0] * total_rows
    offset = 0
    for b in blocks:
        pad = total_rows - b.rows
        if fill:
            fill_word = ((1 << b.cols) - 1) << offset
            for i in range(pad):
                words[i] |= fill_word
        for i, w in enumerate(b.bits):
            words[pad + i] |= w << offset
        offset += b.cols
    return BitMatrix(total_rows, total_cols, tuple(words))


def flip_transpose(a: BitMatrix) -> BitMatrix:
    """Reflection across the anti-diagonal: result(i,j) = a(rows-j+1, cols-i+1)."""
    r, c = a.rows, a.cols
    words = []
    for i in range(c):
        word = 0
        for j in range(r):
            word |= ((a.bits[r - 1 - j] >> (c - 1 - i)) & 1) << j
        words.append(word)
    return BitMatrix(c, r, tuple(words))


# -- GF(2) linear algebra -----------------------------------------------------


def gf2_mul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Matrix product over GF(2)."""
    if a.cols != b.rows:
        raise ValueError("inner dimension mismatch")
    words = []
    for w in a.bits:
        acc = 0
        j = 0
        while w:
            if w & 1:
                acc ^= b.bits[j]
            w >>= 1
            j += 1
        words.append(acc)
    return BitMatrix(a.rows, b.cols, tuple(words))


def gf2_matvec(a: BitMatrix, x_word: int) -> int:
    """A·x over GF(2) with x packed as an int; returns the packed result."""
    out = 0
    for i, w in enumerate(a.bits):
        out |= ((w & x_word).bit_count() & 1) << i
    return out


def gf2_eliminate(words: list[int], cols: int) -> tuple[list[int], list[int]]:
    """In-place RREF over GF(2); returns (reduced rows, pivot column list).

    Pivot choice is the first nonzero entry scanning columns left to right
    and rows top to bottom, so results are reproducible.
    """
    pivots = []
    r = 0
    for c in range(cols):
        if r >= len(words):
            break
        sel = None
        for i in range(r, len(words)):
            if (words[i] >> c) & 1:
                sel = i
                break
        if sel is None:
            continue
        words[r], words[sel] = words[sel], words[r]
        for i in range(len(words)):
            if i != r and (words[i] >> c) & 1:
                words[i] ^= words[r]
        pivots.append(c)
        r += 1
    return words, pivots


def gf2_rank(a: BitMatrix) -> int:
    """Rank over the two-element field."""
    _, pivots = gf2_eliminate(list(a.bits), a.cols)
    return len(pivots)


def gf2_row_basis(a: BitMatrix) -> list[int]:
    """Deterministic basis (packed rows) of the GF(2) row space."""
    words, pivots = gf2_eliminate(list(a.bits), a.cols)
    return words[: len(pivots)]


def gf2_solve(a: BitMatrix, rhs: Sequence[int]) -> tuple[int, ...] | None:
    """Some x with a·x = rhs over GF(2), or None when the system is inconsistent.

    Free variables are pinned to 0 under leftmost-pivot order, so the
    returned solution is deterministic.
    """
    if len(rhs) != a.rows:
        raise ValueError("right-hand side length must equal the row count")
    aug = [w | (int(b) & 1) << a.cols for w, b in zip(a.bits, rhs)]
    words, pivots = gf2_eliminate(aug, a.cols)
    for w in words[len(pivots) :]:
        if w >> a.cols:
            return None
    x = [0] * a.cols
    for r, c in enumerate(pivots):
        x[c] = (words[r] >> a.cols) & 1
    return tuple(x)


# -- exact rank over the rationals -------------------------------------------


def exact_rank(a: BitMatrix) -> int:
    """Rank of the integer matrix over the rationals.

    Fraction-free (Bareiss) elimination: every intermediate entry is an
    exact minor of the input, so the divisions below are exact integer
    divisions and no floating point is involved.
    """
    m = [list(row) for row in a.to_lists()]
    nrows, ncols = a.rows, a.cols
    rank = 0
    prev = 1
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        sel = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                sel = i
                break
        if sel is None:
            continue
        m[r], m[sel] = m[sel], m[r]
        pivot = m[r][c]
        for i in range(r + 1, nrows):
            mic = m[i][c]
            row_i = m[i]
            row_r = m[r]
            for j in range(c + 1, ncols):
                row_i[j] = (pivot * row_i[j] - mic * row_r[j]) // prev
            row_i[c] = 0
        prev = pivot
        rank += 1
        r += 1
    return rank

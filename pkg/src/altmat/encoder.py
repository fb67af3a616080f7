"""Encoder for the regular code checked by build_a(k, ell).

The check matrix splits as [[T, 0, 0], [I, B, A]] along its recursive block
structure, with T = build_a(k, ell-1). Writing a codeword as (p2 | p1 | s),
the bottom rows give p2 = B·p1 + A·s and the top rows reduce to the small
gap system (T·B)·p1 = T·A·s, of order g = C(k+ell-2, ell-2). The gap matrix
T·B is singular over GF(2) for every (k, ell) with this split (the all-ones
row combination of its rows vanishes because column sums are ell-1 and ell),
so instead of inverting we row-reduce once and keep one particular solution
per message basis vector, with free variables pinned to 0; construction
fails loudly if any basis system is inconsistent.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .bitmatrix import BitMatrix, gf2_eliminate, gf2_matvec, gf2_mul
from .families import build_a


class GapSystemInconsistent(ValueError):
    """Some message basis vector has no codeword completion."""

    def __init__(self, k: int, ell: int, basis_index: int):
        self.k = k
        self.ell = ell
        self.basis_index = basis_index
        super().__init__(
            f"gap system for (k={k}, ell={ell}) is inconsistent at "
            f"message basis index {basis_index}"
        )


@dataclass(frozen=True)
class Partition:
    """Block split [[top, 0, 0], [ident, b, a]] of build_a(k, ell)."""

    k: int
    ell: int
    top: BitMatrix
    ident: BitMatrix
    b: BitMatrix
    a: BitMatrix

    @property
    def gap(self) -> int:
        return self.b.cols

    @property
    def message_len(self) -> int:
        return self.a.cols

    def reassemble(self) -> BitMatrix:
        bottom_words = [
            iw | (bw << self.ident.cols) | (aw << (self.ident.cols + self.b.cols))
            for iw, bw, aw in zip(self.ident.bits, self.b.bits, self.a.bits)
        ]
        words = tuple(self.top.bits) + tuple(bottom_words)
        return BitMatrix(
            self.top.rows + self.ident.rows,
            self.ident.cols + self.b.cols + self.a.cols,
            words,
        )


def partition_h(k: int, ell: int) -> Partition:
    """Slice build_a(k, ell) into the four named blocks.

    Requires 2 <= ell <= k-1 so that the message block is nonempty.
    """
    if ell < 2:
        raise ValueError("no partition for ell < 2")
    if ell >= k:
        raise ValueError("message length is nonpositive for ell >= k")
    h = build_a(k, ell)
    top_rows = comb(k + ell - 2, ell - 2)
    ident_order = comb(k + ell - 2, ell - 1)
    g = comb(k + ell - 2, ell - 2)
    s = comb(k + ell - 1, ell) - comb(k + ell - 1, ell - 1)
    rows = list(range(h.rows))
    top = h.submatrix(rows[:top_rows], range(ident_order))
    assert all(not (h.bits[i] >> ident_order) for i in range(top_rows))
    bottom = rows[top_rows:]
    ident = h.submatrix(bottom, range(ident_order))
    b = h.submatrix(bottom, range(ident_order, ident_order + g))
    a = h.submatrix(bottom, range(ident_order + g, ident_order + g + s))
    return Partition(k, ell, top, ident, b, a)


@dataclass(frozen=True)
class Encoder:
    """Precomputed gap solver: immutable and safe to share across threads."""

    partition: Partition
    phi: BitMatrix
    reduced: BitMatrix
    pivots: tuple[int, ...]
    particular: tuple[int, ...]


def make_encoder(k: int, ell: int) -> Encoder:
    """Row-reduce the gap system once and solve it for every basis message.

    Raises GapSystemInconsistent naming the first basis index whose
    right-hand side falls outside the column space of the gap matrix.
    """
    return encoder_from_partition(partition_h(k, ell))


def encoder_from_partition(part: Partition) -> Encoder:
    k, ell = part.k, part.ell
    phi = gf2_mul(part.top, part.b)
    rhs = gf2_mul(part.top, part.a)
    g, s = part.gap, part.message_len
    aug = [pw | (rw << g) for pw, rw in zip(phi.bits, rhs.bits)]
    words, pivots = gf2_eliminate(aug, g)
    mask = (1 << g) - 1
    bad = 0
    for w in words[len(pivots) :]:
        bad |= w >> g
    if bad:
        raise GapSystemInconsistent(k, ell, (bad & -bad).bit_length() - 1)
    particular = [0] * s
    for r, c in enumerate(pivots):
        tail = words[r] >> g
        i = 0
        while tail:
            if tail & 1:
                particular[i] |= 1 << c
            tail >>= 1
            i += 1
    reduced = BitMatrix(phi.rows, g, tuple(w & mask for w in words))
    return Encoder(part, phi, reduced, tuple(pivots), tuple(particular))


def encode(enc: Encoder, message: Sequence[int]) -> tuple[int, ...]:
    """Codeword (p2 | p1 | message) with build_a(k, ell) · x = 0 over GF(2)."""
    part = enc.partition
    if len(message) != part.message_len:
        raise ValueError(
            f"message must have length {part.message_len}, got {len(message)}"
        )
    s_word = 0
    p1 = 0
    for i, bit in enumerate(message):
        if bit not in (0, 1):
            raise ValueError("message entries must be bits")
        if bit:
            s_word |= 1 << i
            p1 ^= enc.particular[i]
    p2 = gf2_matvec(part.b, p1) ^ gf2_matvec(part.a, s_word)
    out = []
    out.extend((p2 >> i) & 1 for i in range(part.ident.cols))
    out.extend((p1 >> i) & 1 for i in range(part.gap))
    out.extend((s_word >> i) & 1 for i in range(part.message_len))
    return tuple(out)


def verify_codeword(k: int, ell: int, x: Sequence[int]) -> bool:
    """True iff build_a(k, ell) · x = 0 over GF(2)."""
    h = build_a(k, ell)
    if len(x) != h.cols:
        raise ValueError(f"word must have length {h.cols}, got {len(x)}")
    word = 0
    for i, bit in enumerate(x):
        if bit not in (0, 1):
            raise ValueError("word entries must be bits")
        word |= bit << i
    return gf2_matvec(h, word) == 0

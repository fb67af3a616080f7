"""Index-tuple combinatorics, subset-inclusion matrices, and block decomposition.

``build_l_oracle(k)`` realizes the inclusion matrix of (k-2)-subsets into
(k-1)-subsets of a (2k-2)-set, which is an independent route to the sparse
family member build_a(k, k-1). ``build_m(n)`` is the larger incidence matrix
over index tuples of {1..2n} whose rows extend a tuple by one disjoint
complementary pair {i, 2n-i+1}; ``decompose_blocks`` splits it into connected
components and identifies each against the small inclusion matrices.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .bitmatrix import BitMatrix
from .families import build_a


def index_set(ell: int, m: int) -> list[tuple[int, ...]]:
    """All strictly increasing ell-tuples from {1..m}, lexicographic."""
    if ell < 1 or ell > m:
        raise ValueError("need 1 <= ell <= m")
    return list(combinations(range(1, m + 1), ell))


def symplectic_pairs(n: int) -> list[tuple[int, int]]:
    """The n complementary pairs (i, 2n-i+1) of {1..2n}."""
    return [(i, 2 * n - i + 1) for i in range(1, n + 1)]


def build_l_oracle(k: int) -> BitMatrix:
    """Inclusion matrix of (k-2)- into (k-1)-subsets of a (2k-2)-set.

    Rows and columns are in lexicographic order; entry 1 iff the row subset
    is contained in the column subset. Every row has weight k, every column
    weight k-1, and all rows are distinct.
    """
    if k < 2:
        raise ValueError("need k >= 2")
    m = 2 * k - 2
    cols = list(combinations(range(1, m + 1), k - 1))
    col_pos = {c: t for t, c in enumerate(cols)}
    words = []
    for s in combinations(range(1, m + 1), k - 2):
        word = 0
        in_s = set(s)
        for x in range(1, m + 1):
            if x not in in_s:
                word |= 1 << col_pos[tuple(sorted(s + (x,)))]
        words.append(word)
    return BitMatrix(comb(m, k - 2), comb(m, k - 1), tuple(words))


def build_m(n: int) -> BitMatrix:
    """Incidence matrix over I(n-2, 2n) x I(n, 2n).

    Entry (alpha, beta) is 1 iff beta is alpha extended by a complementary
    pair {i, 2n-i+1} disjoint from the support of alpha. Row weights equal
    the number of such disjoint pairs.
    """
    if n < 4:
        raise ValueError("need n >= 4")
    cols = index_set(n, 2 * n)
    col_pos = {c: t for t, c in enumerate(cols)}
    pairs = symplectic_pairs(n)
    words = []
    for alpha in index_set(n - 2, 2 * n):
        sup = set(alpha)
        word = 0
        for i, j in pairs:
            if i not in sup and j not in sup:
                word |= 1 << col_pos[tuple(sorted(alpha + (i, j)))]
        words.append(word)
    return BitMatrix(comb(2 * n, n - 2), comb(2 * n, n), tuple(words))


# -- permutation equivalence --------------------------------------------------


def _adjacency(m: BitMatrix) -> tuple[list[list[int]], list[list[int]]]:
    row_adj = [m.row_ones(i) for i in range(m.rows)]
    col_adj: list[list[int]] = [[] for _ in range(m.cols)]
    for i, ones in enumerate(row_adj):
        for j in ones:
            col_adj[j].append(i)
    return row_adj, col_adj


def bipartite_isomorphism(
    a: BitMatrix, b: BitMatrix
) -> tuple[list[int], list[int]] | None:
    """Row and column permutations carrying a onto b, or None.

    Classic color refinement with individualization: rows and columns get
    colors refined by the multiset of neighbour colors; ambiguous classes
    are split by fixing one vertex and trying each compatible image. Every
    leaf candidate is verified entry by entry, so a returned pair is always
    a genuine witness (row_perm[i] is the b-row matching a-row i).
    """
    if a.rows != b.rows or a.cols != b.cols:
        return None
    ra, ca = _adjacency(a)
    rb, cb = _adjacency(b)

    def refine(rc_a, cc_a, rc_b, cc_b):
        while True:
            key_ra = [(rc_a[i], tuple(sorted(cc_a[j] for j in ra[i]))) for i in range(a.rows)]
            key_rb = [(rc_b[i], tuple(sorted(cc_b[j] for j in rb[i]))) for i in range(b.rows)]
            if sorted(key_ra) != sorted(key_rb):
                return None
            ids = {k: t for t, k in enumerate(sorted(set(key_ra)))}
            new_rc_a = [ids[k] for k in key_ra]
            new_rc_b = [ids[k] for k in key_rb]
            key_ca = [(cc_a[j], tuple(sorted(new_rc_a[i] for i in ca[j]))) for j in range(a.cols)]
            key_cb = [(cc_b[j], tuple(sorted(new_rc_b[i] for i in cb[j]))) for j in range(b.cols)]
            if sorted(key_ca) != sorted(key_cb):
                return None
            ids = {k: t for t, k in enumerate(sorted(set(key_ca)))}
            new_cc_a = [ids[k] for k in key_ca]
            new_cc_b = [ids[k] for k in key_cb]
            if (new_rc_a, new_cc_a, new_rc_b, new_cc_b) == (rc_a, cc_a, rc_b, cc_b):
                return rc_a, cc_a, rc_b, cc_b
            rc_a, cc_a, rc_b, cc_b = new_rc_a, new_cc_a, new_rc_b, new_cc_b

    def extract(rc_a, cc_a, rc_b, cc_b):
        row_of_b = {c: i for i, c in enumerate(rc_b)}
        col_of_b = {c: j for j, c in enumerate(cc_b)}
        row_perm = [row_of_b[c] for c in rc_a]
        col_perm = [col_of_b[c] for c in cc_a]
        for i in range(a.rows):
            image = 0
            for j in ra[i]:
                image |= 1 << col_perm[j]
            if image != b.bits[row_perm[i]]:
                return None
        return row_perm, col_perm

    def solve(rc_a, cc_a, rc_b, cc_b):
        refined = refine(rc_a, cc_a, rc_b, cc_b)
        if refined is None:
            return None
        rc_a, cc_a, rc_b, cc_b = refined
        target = None
        for side, arr in (("r", rc_a), ("c", cc_a)):
            for color, cnt in Counter(arr).items():
                if cnt > 1 and (target is None or cnt < target[2]):
                    target = (side, color, cnt)
        if target is None:
            return extract(rc_a, cc_a, rc_b, cc_b)
        side, color, _ = target
        arr_a, arr_b = (rc_a, rc_b) if side == "r" else (cc_a, cc_b)
        fresh = max(arr_a) + 1
        v = arr_a.index(color)
        for w, c in enumerate(arr_b):
            if c != color:
                continue
            na, nb = list(arr_a), list(arr_b)
            na[v] = fresh
            nb[w] = fresh
            if side == "r":
                res = solve(na, cc_a, nb, cc_b)
            else:
                res = solve(rc_a, na, rc_b, nb)
            if res is not None:
                return res
        return None

    return solve([0] * a.rows, [0] * a.cols, [0] * b.rows, [0] * b.cols)


def permutation_equivalent(a: BitMatrix, b: BitMatrix) -> bool:
    return bipartite_isomorphism(a, b) is not None


# -- block decomposition -------------------------------------------------------


@dataclass
class BlockReport:
    """Identified diagonal blocks of an incidence matrix.

    ``blocks`` maps labels like "L_3" to multiplicities; components that
    match no candidate are only counted in ``unidentified``.
    """

    blocks: dict[str, int] = field(default_factory=dict)
    zero_columns: int = 0
    unidentified: int = 0


def _candidate_order(rows: int, cols: int) -> int | None:
    j = 2
    while True:
        r, c = comb(2 * j - 2, j - 2), comb(2 * j - 2, j - 1)
        if r == rows and c == cols:
            return j
        if r > rows:
            return None
        j += 1


def decompose_blocks(m: BitMatrix) -> BlockReport:
    """Connected components of the row-column incidence graph, identified.

    Each component's submatrix (rows and columns kept in index order) is
    tested for permutation equivalence against the inclusion matrices of
    matching dimensions; zero columns are tallied separately.
    """
    row_adj, col_adj = _adjacency(m)
    report = BlockReport()
    report.zero_columns = sum(1 for ones in col_adj if not ones)
    seen_rows = [False] * m.rows
    seen_cols = [False] * m.cols
    labels: Counter[str] = Counter()
    for start in range(m.rows):
        if seen_rows[start]:
            continue
        comp_rows, comp_cols = [start], []
        seen_rows[start] = True
        queue = deque([("r", start)])
        while queue:
            side, v = queue.popleft()
            if side == "r":
                for j in row_adj[v]:
                    if not seen_cols[j]:
                        seen_cols[j] = True
                        comp_cols.append(j)
                        queue.append(("c", j))
            else:
                for i in col_adj[v]:
                    if not seen_rows[i]:
                        seen_rows[i] = True
                        comp_rows.append(i)
                        queue.append(("r", i))
        comp_rows.sort()
        comp_cols.sort()
        if not comp_cols:
            report.unidentified += 1
            continue
        sub = m.submatrix(comp_rows, comp_cols)
        j = _candidate_order(sub.rows, sub.cols)
        if j is not None and permutation_equivalent(sub, build_a(j, j - 1)):
            labels[f"L_{j}"] += 1
        else:
            report.unidentified += 1
    report.blocks = dict(sorted(labels.items()))
    return report

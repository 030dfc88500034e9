"""Recording tableaux for word insertion and their row strips.

The recording tableau of a word traces which cell each insertion created.
Row strips cut a standard filling into maximal runs of consecutive values
whose cells occupy pairwise distinct columns, reading greedily upward from
1.  A recording tableau is characterized by: rows increase left to right,
every row strip starts in column 1 and moves strictly right as its values
grow, the leftmost column increases top to bottom, and a triple condition
ties every pair of rows (see is_dirt).
"""

from __future__ import annotations

from functools import cache

from .compositions import Composition, check_composition
from .tableaux import Rows, entry_or_inf, is_standard, make_rows, positions


def row_strips(rows: Rows) -> tuple[tuple[int, ...], ...]:
    """Greedy decomposition of a standard filling into row strips."""
    rows = make_rows(rows)
    if not is_standard(rows):
        raise ValueError("row strips are defined for standard fillings")
    pos = positions(rows)
    n = len(pos)
    strips: list[list[int]] = []
    used_cols: set[int] = set()
    for v in range(1, n + 1):
        col = pos[v][0]
        if v == 1 or col in used_cols:
            strips.append([v])
            used_cols = {col}
        else:
            strips[-1].append(v)
            used_cols.add(col)
    return tuple(tuple(s) for s in strips)


def row_strip_shape(rows: Rows) -> Composition:
    return tuple(len(s) for s in row_strips(rows))


def is_dirt(rows: Rows) -> bool:
    """True when rows is the recording tableau of some insertion.

    Checks: standard, rows increase, every row strip starts in column 1 and
    its columns strictly increase with its values, the leftmost column
    strictly increases from top to bottom, and whenever an entry exceeds the
    entry below it in its column, it also exceeds the entry to the right of
    that lower one (absent cells reading as infinity).
    """
    rows = make_rows(rows)
    if not is_standard(rows):
        return False
    for row in rows:
        if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
            return False
    firsts = [row[0] for row in rows]
    if any(firsts[i] <= firsts[i + 1] for i in range(len(firsts) - 1)):
        return False
    pos = positions(rows)
    for strip in row_strips(rows):
        cols = [pos[v][0] for v in strip]
        if cols[0] != 1:
            return False
        if any(cols[i] >= cols[i + 1] for i in range(len(cols) - 1)):
            return False
    ell = len(rows)
    for g in range(1, ell + 1):
        for j in range(g + 1, ell + 1):
            width = min(len(rows[g - 1]), len(rows[j - 1]))
            for i in range(1, width + 1):
                if rows[j - 1][i - 1] > rows[g - 1][i - 1]:
                    if not rows[j - 1][i - 1] > entry_or_inf(rows, i + 1, g):
                        return False
    return True


@cache
def enumerate_dirts(shape: Composition, strip_shape: Composition) -> tuple[Rows, ...]:
    """All recording tableaux of the given shape whose row strip shape is
    strip_shape, in lexicographic order of the row sequence visited.

    Values are placed in increasing order, so each lands at the frontier of
    its row.  Strip starts are forced into column 1 of the highest empty
    row; later members of a strip may extend any started row at a strictly
    larger column than the previous member, provided no row below has its
    frontier exactly at that column (which would break the triple condition
    once the lower row grows or ends).
    """
    shape = check_composition(shape)
    strip_shape = check_composition(strip_shape)
    if sum(shape) != sum(strip_shape):
        raise ValueError("shape and strip shape must have equal sizes")
    ell = len(shape)
    if len(strip_shape) != ell:
        return ()
    grid = [[0] * w for w in shape]
    fill = [0] * ell
    results: list[Rows] = []

    def place(r: int, v: int) -> None:
        grid[r][fill[r]] = v
        fill[r] += 1

    def unplace(r: int) -> None:
        fill[r] -= 1
        grid[r][fill[r]] = 0

    def extend(strip_idx: int, members_left: int, v: int, prev_col: int) -> None:
        if members_left == 0:
            next_strip(strip_idx + 1, v)
            return
        for r in range(ell):
            col = fill[r] + 1
            if fill[r] == 0 or col > shape[r] or col <= prev_col:
                continue
            if any(fill[g] == col for g in range(r)):
                continue
            place(r, v)
            extend(strip_idx, members_left - 1, v + 1, col)
            unplace(r)

    def next_strip(strip_idx: int, v: int) -> None:
        if strip_idx == ell:
            results.append(tuple(tuple(row) for row in grid))
            return
        anchor = ell - strip_idx - 1
        place(anchor, v)
        extend(strip_idx, strip_shape[strip_idx] - 1, v + 1, 1)
        unplace(anchor)

    next_strip(0, 1)
    return tuple(results)


def superstandard(lam: Composition) -> Rows:
    """The recording tableau of a partition shape that fills whole rows,
    top row first, with consecutive blocks."""
    lam = check_composition(lam)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError("superstandard fillings are indexed by partitions")
    rows: list[tuple[int, ...]] = [()] * len(lam)
    v = 1
    for r in range(len(lam), 0, -1):
        rows[r - 1] = tuple(range(v, v + lam[r - 1]))
        v += lam[r - 1]
    return tuple(rows)

"""Row insertion for Young composition tableaux and its inverse.

insert scans the sentinel-extended tableau in reading order (columns right
to left, top to bottom within a column) for the first cell where the carried
value fits between the cell's left neighbor and its occupant.  Landing on a
sentinel appends the value to that row; landing on an entry bumps it and the
scan continues with the bumped value.  A value that fits nowhere opens a new
single-cell row in the leftmost column, as high as it can sit while keeping
the leftmost column increasing, shifting the rows above it up.

rapture is the inverse step: it removes an entry (the cell must be
"virtuous", see is_virtuous), then walks the reading order backwards from
the removal point, re-homing the carried value and evicting smaller
occupants along the way.  The value that falls off the front is the output;
if the carried value comes to rest on a sentinel instead, the output is INF
and the tableau keeps its size.

Leftmost-column cells are never bump or evict targets; the scans skip them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tableaux import (
    INF,
    Rows,
    augmented_cells,
    is_ssyct,
    make_rows,
    shape_of,
)

Cell = tuple[int, int]


@dataclass(frozen=True)
class InsertionResult:
    rows: Rows
    new_cell: Cell
    path: tuple[Cell, ...]


@dataclass(frozen=True)
class RaptureResult:
    rows: Rows
    output: int | float
    route: tuple[Cell, ...]


def _freeze(work: list[list[int]]) -> Rows:
    return tuple(tuple(row) for row in work)


def _aug(work: list[list[int]], col: int, row: int) -> int | float:
    r = work[row - 1]
    return r[col - 1] if col <= len(r) else INF


def _record(events, **kwargs):
    if events is not None:
        events.append(kwargs)


def _insert_into(work: list[list[int]], k: int, events=None) -> tuple[Cell, tuple[Cell, ...]]:
    """Insert k into a mutable row list; returns (new_cell, bumping path)."""
    carry = k
    path: list[Cell] = []
    for col, row in augmented_cells(tuple(len(r) for r in work)):
        if col == 1:
            continue
        left = work[row - 1][col - 2]
        occupant = _aug(work, col, row)
        if left <= carry < occupant:
            if occupant is INF:
                work[row - 1].append(carry)
                path.append((col, row))
                _record(events, event="scan", cell=[col, row], left=left,
                        occupant=occupant, carry=carry, outcome="place")
                return (col, row), tuple(path)
            work[row - 1][col - 1] = carry
            path.append((col, row))
            _record(events, event="scan", cell=[col, row], left=left,
                    occupant=occupant, carry=carry, outcome="bump")
            carry = occupant
        else:
            _record(events, event="scan", cell=[col, row], left=left,
                    occupant=occupant, carry=carry, outcome="skip")
    # Nothing fit: open a new single-cell row, as high as possible subject to
    # every leftmost entry below it being smaller.
    pos = 0
    while pos < len(work) and work[pos][0] < carry:
        pos += 1
    work.insert(pos, [carry])
    new_cell = (1, pos + 1)
    path = [(c, r if r <= pos else r + 1) for c, r in path]
    path.append(new_cell)
    _record(events, event="new-row", row=pos + 1, carry=carry,
            rows_shifted=pos + 1 < len(work))
    return new_cell, tuple(path)


def insert(rows: Rows, k: int, events=None) -> InsertionResult:
    """Insert k into a semistandard Young composition tableau.

    With events a list, appends one dict per scan step for tracing.
    """
    rows = make_rows(rows)
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ValueError(f"inserted value must be a positive integer, got {k!r}")
    if not is_ssyct(rows):
        raise ValueError("insert requires a Young composition tableau")
    work = [list(r) for r in rows]
    new_cell, path = _insert_into(work, k, events)
    return InsertionResult(_freeze(work), new_cell, path)


def is_virtuous(rows: Rows, cell: Cell) -> bool:
    """True when the entry at cell can be raptured.

    The entry must exceed everything below it in its column, sit at the end
    of its row, and every other row ending in the same column must lie
    strictly above it.
    """
    rows = make_rows(rows)
    col, row = cell
    if not (1 <= row <= len(rows) and 1 <= col <= len(rows[row - 1])):
        raise ValueError(f"cell {cell} is not in the diagram")
    if col != len(rows[row - 1]):
        return False
    v = rows[row - 1][col - 1]
    for r in range(1, row):
        below = rows[r - 1]
        if len(below) >= col and below[col - 1] >= v:
            return False
        if len(below) == col:
            return False
    return True


def _rapture_from(work: list[list[int]], cell: Cell, events=None) -> tuple[int | float, tuple[Cell, ...]]:
    col, row = cell
    carry = work[row - 1][col - 1]
    route: list[Cell] = [cell]
    if col == 1:
        del work[row - 1]
        _record(events, event="remove", cell=[col, row], entry=carry, row_removed=True)
    else:
        work[row - 1].pop()
        _record(events, event="remove", cell=[col, row], entry=carry, row_removed=False)
    # Scan the remaining reading order backwards from the removal point.
    domain = [(c, r) for c, r in augmented_cells(tuple(len(r) for r in work))
              if c >= 2 and (c > col or (c == col and r > row))]
    for c, r in reversed(domain):
        left = work[r - 1][c - 2]
        occupant = _aug(work, c, r)
        right = _aug(work, c + 1, r)
        if not left <= carry <= right:
            _record(events, event="scan", cell=[c, r], left=left, occupant=occupant,
                    right=right, carry=carry, outcome="skip")
            continue
        if occupant is INF:
            work[r - 1].append(carry)
            _record(events, event="scan", cell=[c, r], left=left, occupant=occupant,
                    right=right, carry=carry, outcome="settle")
            return INF, tuple(route)
        if occupant >= carry:
            _record(events, event="scan", cell=[c, r], left=left, occupant=occupant,
                    right=right, carry=carry, outcome="pass")
            continue
        work[r - 1][c - 1] = carry
        route.append((c, r))
        _record(events, event="scan", cell=[c, r], left=left, occupant=occupant,
                right=right, carry=carry, outcome="evict")
        carry = occupant
    _record(events, event="output", value=carry)
    return carry, tuple(route)


def rapture(rows: Rows, cell: Cell, events=None) -> RaptureResult:
    """Remove the entry at cell and rebalance, returning the expelled value.

    The cell must be virtuous; rapturing elsewhere would not yield a Young
    composition tableau, so it is rejected.
    """
    rows = make_rows(rows)
    if not is_ssyct(rows):
        raise ValueError("rapture requires a Young composition tableau")
    if not is_virtuous(rows, cell):
        raise ValueError(f"cell {cell} is not virtuous")
    work = [list(r) for r in rows]
    output, route = _rapture_from(work, tuple(cell), events)
    return RaptureResult(_freeze(work), output, route)


def insert_word(word) -> tuple[Rows, Rows]:
    """Insert the letters of a duplicate-free word left to right into the
    empty tableau.  Returns the resulting tableau and the recording tableau
    whose entry j marks the cell created by the j-th insertion."""
    word = tuple(word)
    for x in word:
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            raise ValueError(f"letters must be positive integers, got {x!r}")
    if len(set(word)) != len(word):
        raise ValueError("word has repeated letters")
    p: list[list[int]] = []
    q: list[list[int]] = []
    for j, k in enumerate(word, start=1):
        (col, row), _ = _insert_into(p, k)
        if col == 1:
            q.insert(row - 1, [j])
        else:
            q[row - 1].append(j)
    return _freeze(p), _freeze(q)


def uninsert(p_rows: Rows, q_rows: Rows) -> tuple[int, ...]:
    """Invert insert_word: peel insertions off in reverse recording order."""
    from .dirt import is_dirt  # local import; dirt builds on tableaux only

    p_rows, q_rows = make_rows(p_rows), make_rows(q_rows)
    if shape_of(p_rows) != shape_of(q_rows):
        raise ValueError("tableau and recording tableau shapes differ")
    if not is_ssyct(p_rows):
        raise ValueError("uninsert requires a Young composition tableau")
    if not is_dirt(q_rows):
        raise ValueError("recording tableau is not a valid insertion record")
    p = [list(r) for r in p_rows]
    q = [list(r) for r in q_rows]
    reversed_word: list[int] = []
    while q:
        row = max(range(len(q)), key=lambda r: q[r][-1]) + 1
        col = len(q[row - 1])
        output, _ = _rapture_from(p, (col, row))
        if output is INF:
            raise RuntimeError("insertion record did not unwind to a finite letter")
        reversed_word.append(output)
        q[row - 1].pop()
        if not q[row - 1]:
            del q[row - 1]
    return tuple(reversed(reversed_word))

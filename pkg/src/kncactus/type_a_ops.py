"""Type A jeu de taquin, evacuation, reversal, Bender-Knuth moves and partial involutions."""

from __future__ import annotations

from typing import Sequence

from .core_tableaux import Tableau, TableauError, from_cells


class TypeAError(ValueError):
    pass


def _grid(t: Tableau) -> tuple[dict, set]:
    cells, inner = {}, set()
    for r, row in enumerate(t.rows):
        for c, x in enumerate(row):
            if x is None:
                inner.add((r, c))
            else:
                cells[(r, c)] = x
    return cells, inner


def _corners(inner: set) -> list[tuple[int, int]]:
    return [(r, c) for r, c in inner if (r + 1, c) not in inner and (r, c + 1) not in inner]


def _slide(cells: dict, start: tuple[int, int]) -> tuple[int, int]:
    a, c = start
    while True:
        below = cells.get((a + 1, c))
        right = cells.get((a, c + 1))
        if below is None and right is None:
            return (a, c)
        if below is not None and (right is None or below <= right):
            cells[(a, c)] = below
            a += 1
        else:
            cells[(a, c)] = right
            c += 1
        cells.pop((a, c), None)


def _reverse_slide(cells: dict, start: tuple[int, int], inner: set) -> tuple[int, int]:
    a, c = start
    while True:
        above = cells.get((a - 1, c))
        left = cells.get((a, c - 1))
        if above is None and left is None:
            return (a, c)
        if above is not None and (left is None or above >= left):
            cells[(a, c)] = above
            a -= 1
        else:
            cells[(a, c)] = left
            c -= 1
        cells.pop((a, c), None)


def rectify_A(t: Tableau) -> tuple[Tableau, list[tuple[tuple[int, int], tuple[int, int]]]]:
    """Rectify a skew SSYT; the journal lists ``(start, exit)`` per slide."""
    cells, inner = _grid(t)
    journal = []
    while inner:
        corner = max(_corners(inner))
        inner.discard(corner)
        journal.append((corner, _slide(cells, corner)))
    return from_cells(cells, t.n, "A"), journal


def anti_rectify_A(t: Tableau, journal: Sequence[tuple[tuple[int, int], tuple[int, int]]]) -> Tableau:
    cells, inner = _grid(t)
    for start, exit_cell in reversed(journal):
        end = _reverse_slide(cells, exit_cell, inner)
        if end != start:
            raise TypeAError(f"reverse slide ended at {end}, expected {start}")
        inner.add(end)
    return from_cells(cells, t.n, "A", inner)


def rect_A(t: Tableau) -> Tableau:
    return rectify_A(t)[0]


def evacuation_A(t: Tableau, m: int | None = None) -> Tableau:
    """Schutzenberger evacuation on the alphabet ``[m]``: complement, rotate by pi, rectify."""
    if t.inner:
        raise TypeAError("evacuation needs a straight tableau")
    m = t.n if m is None else m
    if not t.rows:
        return t
    height = len(t.rows)
    width = t.outer[0]
    cells = {}
    inner = set()
    for r, c, x in t.cells():
        if x > m:
            raise TypeAError(f"entry {x} exceeds {m}")
        cells[(height - 1 - r, width - 1 - c)] = m + 1 - x
    for r in range(height):
        for c in range(width):
            if (r, c) not in cells:
                inner.add((r, c))
    # inner cells form the complement of the rotated shape; keep only the top-left part
    rot = from_cells(cells, t.n, "A", inner)
    out = rect_A(rot)
    if out.outer != t.outer:
        raise TypeAError("evacuation changed the shape")
    return out


def reversal_A(t: Tableau, m: int | None = None) -> Tableau:
    """Coplactic reversal: anti-rectify the evacuated rectification along the same journal."""
    r, journal = rectify_A(t)
    return anti_rectify_A(evacuation_A(r, m), journal)


# ---------------------------------------------------------------------------
# Bender-Knuth involutions


def bender_knuth_A(t: Tableau, i: int) -> Tableau:
    """``t_i``: swap the numbers of free ``i`` and ``i+1`` in every row."""
    cells, inner = _grid(t)
    new = dict(cells)
    rows = {}
    for (r, c), x in cells.items():
        rows.setdefault(r, []).append(c)
    for r, cols in rows.items():
        free_i = [c for c in sorted(cols) if cells[(r, c)] == i and cells.get((r + 1, c)) != i + 1]
        free_j = [c for c in sorted(cols) if cells[(r, c)] == i + 1 and cells.get((r - 1, c)) != i]
        block = sorted(free_i + free_j)
        l = len(free_j)
        for idx, c in enumerate(block):
            new[(r, c)] = i if idx < l else i + 1
    return from_cells(new, t.n, "A", inner)


def bk_word(t: Tableau, word: Sequence[int]) -> Tableau:
    """Apply ``t_{w_1} ... t_{w_k}`` (rightmost first)."""
    for i in reversed(word):
        t = bender_knuth_A(t, i)
    return t


def q_word(i: int) -> list[int]:
    """``q_{[1,i]} = t_1 (t_2 t_1) ... (t_i ... t_1)`` as a word."""
    w: list[int] = []
    for k in range(1, i + 1):
        w.extend(range(k, 0, -1))
    return w


def promotion_q(t: Tableau, i: int) -> Tableau:
    """``q_{[1,i]}`` through Bender-Knuth moves."""
    return bk_word(t, q_word(i))


def dual_bk_A(t: Tableau, i: int, m: int | None = None) -> Tableau:
    """``t~_{m-i} = q_{[1,m-1]} t_i q_{[1,m-1]}`` on the alphabet ``[m]``."""
    m = t.n if m is None else m
    return promotion_q(bender_knuth_A(promotion_q(t, m - 1), i), m - 1)


# ---------------------------------------------------------------------------
# Partial involutions


def _band(t: Tableau, lo: int, hi: int) -> tuple[dict, set]:
    """Cells with letters in ``[lo, hi]``; cells with smaller letters or inner cells become inner."""
    cells, inner = {}, set()
    for r, row in enumerate(t.rows):
        for c, x in enumerate(row):
            if x is None or x < lo:
                inner.add((r, c))
            elif x <= hi:
                cells[(r, c)] = x
    return cells, inner


def partial_xi_A(t: Tableau, p: int, q: int) -> Tableau:
    """``xi_{[p,q]}``: reverse the letters ``p..q+1`` and freeze the rest."""
    m = t.n
    if not 1 <= p <= q <= m - 1:
        raise TypeAError(f"interval [{p},{q}] outside the diagram of A_{m - 1}")
    cells, inner = _band(t, p, q + 1)
    shifted = {rc: x - p + 1 for rc, x in cells.items()}
    width = q - p + 2
    piece = from_cells(shifted, width, "A", inner)
    rev = reversal_A(piece, width)
    out = {}
    for r, row in enumerate(t.rows):
        for c, x in enumerate(row):
            if x is not None and (x < p or x > q + 1):
                out[(r, c)] = x
    for r, c, x in rev.cells():
        out[(r, c)] = x + p - 1
    t_inner = {(r, c) for r, row in enumerate(t.rows) for c, x in enumerate(row) if x is None}
    res = from_cells(out, m, "A", t_inner)
    res.validate()
    return res


def intervals_disconnected(J1: Sequence[int], J2: Sequence[int]) -> bool:
    a1, b1 = J1
    a2, b2 = J2
    return b1 + 1 < a2 or b2 + 1 < a1


def partial_xi_A_union(t: Tableau, intervals: Sequence[Sequence[int]]) -> Tableau:
    for k, J in enumerate(intervals):
        for J2 in intervals[k + 1:]:
            if not intervals_disconnected(J, J2):
                raise TypeAError(f"intervals {tuple(J)} and {tuple(J2)} are not disconnected")
    for p, q in intervals:
        t = partial_xi_A(t, p, q)
    return t


def evac_m(t: Tableau, m: int) -> Tableau:
    """Evacuation restricted to letters ``1..m``; larger letters stay put."""
    if m <= 1:
        return t
    return partial_xi_A(t, 1, m - 1)


def check_semistandard_A(t: Tableau) -> None:
    if t.kind != "A":
        raise TableauError("expected a type A tableau")
    t.validate()

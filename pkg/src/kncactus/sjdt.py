"""Symplectic jeu de taquin: elementary and complete slides, rectification and reverse slides.

Slides run on a mutable :class:`Grid` (cell map plus inner-cell set).  Splits of a
punctured column are computed on its letters alone and placed on the letter cells.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .core_tableaux import (
    PUNCTURE,
    Tableau,
    TableauError,
    coadmissible_inverse,
    coadmissible_of,
    column_count_N,
    from_cells,
    is_admissible,
    key,
    sort_column,
    split_column,
)
from .words_plactic import r3_contract_full


class SlideError(RuntimeError):
    pass


@dataclass(frozen=True)
class Contraction:
    col: int
    top: int
    bottom: int
    z: int


@dataclass(frozen=True)
class SlideEvent:
    start: tuple[int, int]
    exit: tuple[int, int]
    contraction: Contraction | None = None


@dataclass
class Grid:
    n: int
    cells: dict = field(default_factory=dict)
    inner: set = field(default_factory=set)

    @classmethod
    def from_tableau(cls, t: Tableau) -> "Grid":
        if t.kind != "C":
            raise TableauError("symplectic slides need a type C tableau")
        cells, inner = {}, set()
        for r, row in enumerate(t.rows):
            for c, x in enumerate(row):
                if x is None:
                    inner.add((r, c))
                else:
                    cells[(r, c)] = x
        return cls(t.n, cells, inner)

    def copy(self) -> "Grid":
        return Grid(self.n, dict(self.cells), set(self.inner))

    def to_tableau(self) -> Tableau:
        return from_cells(self.cells, self.n, "C", self.inner)

    def puncture(self) -> tuple[int, int] | None:
        for rc, x in self.cells.items():
            if x == PUNCTURE:
                return rc
        return None

    def column(self, c: int) -> list[tuple[int, int]]:
        return sorted((r, x) for (r, cc), x in self.cells.items() if cc == c)

    def letters(self, c: int) -> list[tuple[int, int]]:
        return [(r, x) for r, x in self.column(c) if x != PUNCTURE]

    def key(self) -> tuple:
        return (tuple(sorted(self.cells.items())), tuple(sorted(self.inner)))

    def inner_corners(self) -> list[tuple[int, int]]:
        return [(r, c) for r, c in self.inner if (r + 1, c) not in self.inner and (r, c + 1) not in self.inner]


def _split_map(g: Grid, c: int) -> dict[int, tuple[int, int]]:
    cells = g.letters(c)
    if not cells:
        return {}
    lc, rc = split_column(tuple(x for _, x in cells), g.n)
    return {r: (lc[k], rc[k]) for k, (r, _) in enumerate(cells)}


def _phi_map(g: Grid, c: int) -> dict[int, int]:
    cells = g.letters(c)
    if not cells:
        return {}
    phi = coadmissible_of(tuple(x for _, x in cells), g.n)
    return {r: phi[k] for k, (r, _) in enumerate(cells)}


def _write_column(g: Grid, c: int, rows: Sequence[int], values: Sequence[int]) -> None:
    for r, x in zip(rows, values):
        g.cells[(r, c)] = x


def b2_contraction_letter(col: Sequence[int], n: int) -> int:
    """Letter ``i`` erased when a column becomes non-admissible in a horizontal slide."""
    cands = [i for i in range(1, n + 1) if i in col and -i in col and column_count_N(col, i) > i]
    if not cands:
        raise SlideError(f"non-admissible column {tuple(col)} without a contractible pair")
    return min(cands)


def contract_column(g: Grid, c: int) -> Contraction:
    """Erase the offending pair of column ``c``; top cell becomes inner, bottom cell leaves."""
    col = g.column(c)
    rows = [r for r, _ in col]
    vals = [x for _, x in col]
    if PUNCTURE in vals:
        raise SlideError("cannot contract a punctured column")
    i = b2_contraction_letter(vals, g.n)
    rest = [x for x in vals if x != i and x != -i]
    top, bottom = rows[0], rows[-1]
    del g.cells[(top, c)]
    del g.cells[(bottom, c)]
    g.inner.add((top, c))
    _write_column(g, c, rows[1:-1], rest)
    if not is_admissible(rest, g.n):
        raise SlideError(f"column {c + 1} still not admissible after contraction")
    return Contraction(c, top, bottom, i)


def forward_step(g: Grid, before_contract: Callable[[Grid], None] | None = None) -> tuple[str, object]:
    """One elementary slide.  Returns ``("down"|"right", contraction)`` or ``("exit", cell)``.

    ``before_contract`` sees the grid after a B.2 move that leaves a non-admissible column.
    """
    pos = g.puncture()
    if pos is None:
        raise SlideError("no puncture")
    a, c = pos
    n = g.n
    below = g.cells.get((a + 1, c))
    right = g.cells.get((a, c + 1))
    alpha = _split_map(g, c)[a + 1][1] if below is not None else None
    beta = _split_map(g, c + 1)[a][0] if right is not None else None
    if alpha is None and beta is None:
        del g.cells[(a, c)]
        return "exit", (a, c)
    if alpha is not None and (beta is None or key(alpha, n) <= key(beta, n)):
        g.cells[(a, c)] = below
        g.cells[(a + 1, c)] = PUNCTURE
        return "down", None
    rows1 = [r for r, _ in g.column(c)]
    rows2 = [r for r, _ in g.column(c + 1)]
    if beta < 0:
        # B.1: through the coadmissible picture of the left column
        if right != beta:
            raise SlideError("barred split entry differs from the column entry")
        phi1 = _phi_map(g, c)
        phi1[a] = beta
        new1 = coadmissible_inverse(tuple(phi1[r] for r in rows1), n)
        _write_column(g, c, rows1, new1)
        g.cells[(a, c + 1)] = PUNCTURE
        return "right", None
    # B.2: beta moves left, the right column is rebuilt through its coadmissible picture
    phi2 = _phi_map(g, c + 1)
    if phi2[a] != beta:
        raise SlideError("unbarred split entry differs from the coadmissible entry")
    del phi2[a]
    rest_rows = [r for r in rows2 if r != a]
    new2 = coadmissible_inverse(tuple(phi2[r] for r in rest_rows), n) if rest_rows else ()
    _write_column(g, c + 1, rest_rows, new2)
    g.cells[(a, c + 1)] = PUNCTURE
    g.cells[(a, c)] = beta
    vals = [x for _, x in g.column(c)]
    if is_admissible(vals, n) and len(vals) <= n:
        return "right", None
    if before_contract is not None:
        before_contract(g)
    return "right", contract_column(g, c)


def complete_slide_grid(g: Grid, corner: tuple[int, int], trace: list | None = None) -> SlideEvent:
    """Slide the inner corner ``corner`` of ``g`` in place until the puncture exits."""
    if corner not in g.inner or corner not in g.inner_corners():
        raise SlideError(f"{corner} is not an inner corner")
    g.inner.discard(corner)
    g.cells[corner] = PUNCTURE
    contraction = None
    hook = (lambda h: trace.append(h.to_tableau())) if trace is not None else None
    while True:
        kind, info = forward_step(g, hook)
        if trace is not None and kind != "exit":
            trace.append(g.to_tableau())
        if kind == "exit":
            return SlideEvent(corner, info, contraction)
        if info is not None:
            if contraction is not None or info.col != corner[1]:
                raise SlideError("contraction away from the starting column")
            contraction = info


def complete_slide(t: Tableau, corner: tuple[int, int]) -> Tableau:
    g = Grid.from_tableau(t)
    complete_slide_grid(g, corner)
    return g.to_tableau()


def slide_trace(t: Tableau, corner: tuple[int, int]) -> list[Tableau]:
    """Punctured intermediate tableaux of one complete slide, followed by the result."""
    g = Grid.from_tableau(t)
    trace: list[Tableau] = []
    complete_slide_grid(g, corner, trace)
    return trace + [g.to_tableau()]


def default_corner(g: Grid) -> tuple[int, int]:
    """Inner corner in the lowest row."""
    return max(g.inner_corners())


def rectify_grid(g: Grid, choose: Callable[[Grid], tuple[int, int]] = default_corner) -> list[SlideEvent]:
    journal = []
    while g.inner:
        journal.append(complete_slide_grid(g, choose(g)))
    return journal


def rectify(t: Tableau, choose: Callable[[Grid], tuple[int, int]] = default_corner) -> Tableau:
    g = Grid.from_tableau(t)
    rectify_grid(g, choose)
    return g.to_tableau()


def rectify_with_journal(t: Tableau) -> tuple[Tableau, list[SlideEvent]]:
    g = Grid.from_tableau(t)
    journal = rectify_grid(g)
    return g.to_tableau(), journal


# ---------------------------------------------------------------------------
# Reverse slides


def reverse_step(g: Grid) -> tuple[str, object]:
    """One reverse elementary slide.  Returns ``("up"|"left", None)`` or ``("enter", cell)``."""
    pos = g.puncture()
    if pos is None:
        raise SlideError("no puncture")
    a, c = pos
    n = g.n
    above = g.cells.get((a - 1, c))
    left = g.cells.get((a, c - 1))
    gamma = _split_map(g, c)[a - 1][0] if above is not None else None
    delta = None
    if left is not None:
        vals = [x for _, x in g.letters(c - 1)]
        # a freshly dilated column has no split; the B.2 move is undone with the letter itself
        delta = _split_map(g, c - 1)[a][1] if is_admissible(vals, n) and len(vals) <= n else left
    if gamma is None and delta is None:
        del g.cells[(a, c)]
        g.inner.add((a, c))
        return "enter", (a, c)
    if gamma is not None and (delta is None or key(gamma, n) >= key(delta, n)):
        g.cells[(a, c)] = above
        g.cells[(a - 1, c)] = PUNCTURE
        return "up", None
    rows1 = [r for r, _ in g.column(c - 1)]
    rows2 = [r for r, _ in g.column(c)]
    if delta < 0:
        phi1 = _phi_map(g, c - 1)
        if phi1[a] != delta:
            raise SlideError("barred split entry differs from the coadmissible entry")
        del phi1[a]
        rest = [r for r in rows1 if r != a]
        new1 = coadmissible_inverse(tuple(phi1[r] for r in rest), n) if rest else ()
        _write_column(g, c - 1, rest, new1)
        g.cells[(a, c - 1)] = PUNCTURE
        g.cells[(a, c)] = delta
        return "left", None
    if left != delta:
        raise SlideError("unbarred split entry differs from the column entry")
    g.cells[(a, c - 1)] = PUNCTURE
    phi2 = _phi_map(g, c)
    phi2[a] = delta
    new2 = coadmissible_inverse(tuple(phi2[r] for r in rows2), n)
    _write_column(g, c, rows2, new2)
    return "left", None


def dilation_candidates(rest: Sequence[int], n: int, height: int) -> list[tuple[int, ...]]:
    """Columns of the given height whose horizontal-slide contraction yields ``rest``."""
    out = []
    for k in range(1, n + 1):
        if k in rest or -k in rest:
            continue
        col = sort_column(list(rest) + [k, -k], n)
        if len(col) != height:
            continue
        if is_admissible(col, n) and len(col) <= n:
            continue
        try:
            if b2_contraction_letter(col, n) == k:
                out.append(col)
        except SlideError:
            continue
    return out


def reverse_slide_grid(g: Grid, exit_cell: tuple[int, int], contraction: Contraction | None = None,
                       trace: list | None = None) -> tuple[int, int]:
    """Undo one complete slide in place; returns the inner cell where the reverse slide ends.

    With a ``contraction`` the column ``contraction.col`` is first dilated in place
    (its top cell must be inner and its bottom cell vacant).  Several dilations may
    fit; the one whose reverse slide is undone by the forward slide is kept, and it
    must be unique.
    """
    if exit_cell in g.cells or exit_cell in g.inner:
        raise SlideError(f"exit cell {exit_cell} is occupied")
    if contraction is None:
        g.cells[exit_cell] = PUNCTURE
        return _reverse_run(g, trace)
    c1, top, bottom = contraction.col, contraction.top, contraction.bottom
    if (top, c1) not in g.inner or (bottom, c1) in g.cells:
        raise SlideError("contraction cells are not vacant")
    found = []
    for h in dilations(g, c1, top, bottom):
        steps: list | None = [] if trace is not None else None
        work = h.copy()
        work.cells[exit_cell] = PUNCTURE
        if steps is not None:
            steps.append(work.to_tableau())
        try:
            end = _reverse_run(work, steps)
            check = work.copy()
            ev = complete_slide_grid(check, end)
        except (SlideError, TableauError, KeyError):
            continue
        if ev.exit == exit_cell and ev.contraction is not None and \
                (ev.contraction.col, ev.contraction.top, ev.contraction.bottom) == (c1, top, bottom) and \
                check.key() == g.key():
            found.append((work, end, steps))
    if len(found) != 1:
        raise SlideError(f"dilation of column {c1 + 1} has {len(found)} valid predecessors")
    work, end, steps = found[0]
    if trace is not None:
        trace.extend(steps)
    g.cells, g.inner = work.cells, work.inner
    return end


def _reverse_run(g: Grid, trace: list | None) -> tuple[int, int]:
    while True:
        kind, info = reverse_step(g)
        if kind == "enter":
            return info
        if trace is not None:
            trace.append(g.to_tableau())


def dilations(g: Grid, c: int, top: int, bottom: int) -> list[Grid]:
    """Grids obtained by refilling rows ``top..bottom`` of column ``c`` with a dilated column."""
    rows = [r for r, _ in g.column(c)]
    rest = [x for _, x in g.column(c)]
    if rows != list(range(top + 1, bottom)):
        raise SlideError(f"column {c + 1} is not packed between rows {top + 1} and {bottom + 1}")
    out = []
    for col in dilation_candidates(rest, g.n, bottom - top + 1):
        h = g.copy()
        h.inner.discard((top, c))
        _write_column(h, c, range(top, bottom + 1), col)
        out.append(h)
    return out


def anti_rectify_grid(g: Grid, journal: Sequence[SlideEvent]) -> None:
    for ev in reversed(journal):
        end = reverse_slide_grid(g, ev.exit, ev.contraction)
        if end != ev.start:
            raise SlideError(f"reverse slide ended at {end}, expected {ev.start}")


def anti_rectify(t: Tableau, journal: Sequence[SlideEvent]) -> Tableau:
    g = Grid.from_tableau(t)
    anti_rectify_grid(g, journal)
    return g.to_tableau()


# ---------------------------------------------------------------------------
# Reduced slides on [+-j, n]


def shift_letters(cells: dict, d: int) -> dict:
    """Add ``d`` to unbarred letters and subtract it from barred ones."""
    return {rc: (x if x == PUNCTURE else (x + d if x > 0 else x - d)) for rc, x in cells.items()}


def _check_window(g: Grid, j: int) -> None:
    for (r, c), x in g.cells.items():
        if x != PUNCTURE and abs(x) < j:
            raise SlideError(f"letter {x} at row {r + 1}, col {c + 1} outside [+-{j}, {g.n}]")


def reduce_grid(g: Grid, j: int) -> tuple[Grid, list[tuple[int, int, int, int]]]:
    """Shift into ``C_{n-j+1}`` and R3-contract every column until admissible.

    Returns the new grid and the contractions ``(col, top_row, bottom_row, z)``; the
    top cell of each contraction is reported but left for the caller to place.
    """
    _check_window(g, j)
    m = g.n - j + 1
    h = Grid(m, shift_letters(g.cells, -(j - 1)), set(g.inner))
    events = []
    width = max((c for _, c in h.cells), default=-1) + 1
    for c in range(width):
        while True:
            col = h.column(c)
            letters = [(r, x) for r, x in col if x != PUNCTURE]
            vals = [x for _, x in letters]
            if is_admissible(vals, m) and len(vals) <= m:
                break
            new, removed = r3_contract_full(vals, m)
            z = removed[0]
            one = tuple(x for x in vals if x != z and x != -z)
            rows = [r for r, _ in letters]
            top, bottom = rows[0], rows[-1]
            del h.cells[(top, c)]
            del h.cells[(bottom, c)]
            _write_column(h, c, rows[1:-1], one)
            events.append((c, top, bottom, z))
    return h, events


def reduced_slide_j(t: Tableau, j: int) -> Tableau:
    """A complete reduced slide ``SJDT_j`` of the punctured tableau ``t``.

    Contracted cells are dropped; the returned tableau keeps the puncture at the exit.
    """
    g = Grid.from_tableau(t)
    start = g.puncture()
    if start is None:
        raise SlideError("reduced slide needs a punctured tableau")
    h, _ = reduce_grid(g, j)
    while True:
        kind, info = forward_step(h)
        if kind == "exit":
            h.cells[info] = PUNCTURE
            break
        if info is not None:
            # top cell of a contraction is dropped as well
            h.inner.discard((info.top, info.col))
    out = Grid(g.n, shift_letters(h.cells, j - 1), set(h.inner))
    return out.to_tableau()


def reduced_rectify_j(t: Tableau, j: int) -> Tableau:
    """``rect_j``: shift, pre-contract (top cells become inner), rectify, shift back."""
    g = Grid.from_tableau(t)
    h, events = reduce_grid(g, j)
    for c, top, _, _ in events:
        h.inner.add((top, c))
    rectify_grid(h)
    return Grid(g.n, shift_letters(h.cells, j - 1), set()).to_tableau()

"""Symplectic evacuation, reversal, colorful tableau switching, reflections and Bender-Knuth moves.

The colorful algorithm computes ``xi_[j,n]`` on a KN tableau.  Letters in
``[+-(j-1)]`` are frozen; the rest is shifted into ``C_{n-j+1}`` and rectified
while bookkeeping letters record where cells entered and left:

* green letters fill the frozen unbarred part, the inner shape ``mu``;
* purple pairs ``p_k``/``p_k'`` mark pairs erased before sliding (R3 contractions);
* red pairs ``r_k``/``r_k'`` mark pairs erased by a B.2 contraction during a slide.

After Santos evacuation of the rectified body every slide is undone in the order
recorded in the outer tableau, dilating columns where pairs were erased.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .core_tableaux import PUNCTURE, Tableau, TableauError, from_cells, is_admissible, sort_column
from .crystal import CrystalError, eps_phi, e_power, f_power, rank_of
from .sjdt import Grid, SlideError, SlideEvent, forward_step, rectify_grid, reverse_slide_grid, shift_letters
from .words_plactic import r3_contract_once

COLORS = ("green", "purple", "purple'", "red", "red'")
_TAGS = {"green": "g", "purple": "p", "purple'": "p", "red": "r", "red'": "r"}


class SwitchingError(RuntimeError):
    pass


@dataclass(frozen=True)
class ColorLetter:
    color: str
    index: int

    def __post_init__(self) -> None:
        if self.color not in COLORS:
            raise ValueError(f"unknown color {self.color!r}")
        if self.index < 1:
            raise ValueError("color index must be positive")

    @property
    def primed(self) -> bool:
        return self.color.endswith("'")

    def partner(self) -> "ColorLetter":
        if self.color == "green":
            raise ValueError("green letters have no partner")
        base = self.color.rstrip("'")
        return ColorLetter(base if self.primed else base + "'", self.index)

    def __str__(self) -> str:
        return f"{_TAGS[self.color]}{self.index}{chr(39) if self.primed else ''}"


class RankOrder:
    """Explicit total order on the bookkeeping letters, smallest first."""

    def __init__(self, letters: Sequence[ColorLetter] = ()):
        self.seq: list[ColorLetter] = list(letters)

    def rank(self, x: ColorLetter) -> int:
        return self.seq.index(x)

    def lt(self, x: ColorLetter, y: ColorLetter) -> bool:
        return self.rank(x) < self.rank(y)

    def insert_below(self, anchor: ColorLetter, new: Sequence[ColorLetter]) -> None:
        k = self.rank(anchor)
        self.seq[k:k] = list(new)

    def __iter__(self):
        return iter(self.seq)


@dataclass
class SwitchState:
    """The triple (U, body, V) of the colorful algorithm, plus its history."""

    n: int
    j: int
    body: Grid
    inner: dict = field(default_factory=dict)
    outer: dict = field(default_factory=dict)
    order: RankOrder = field(default_factory=RankOrder)
    journal: list = field(default_factory=list)
    trace: list = field(default_factory=list)
    frozen_plus: dict = field(default_factory=dict)
    frozen_minus: dict = field(default_factory=dict)

    def snapshot(self, moving: ColorLetter | None = None, grid: Grid | None = None) -> str:
        g = self.body if grid is None else grid
        return render_colored(g, self.inner, self.outer, self.j, moving)

    def record(self, caption: str, moving: ColorLetter | None = None, grid: Grid | None = None) -> None:
        snap = self.snapshot(moving, grid)
        if not self.trace or self.trace[-1][1] != snap:
            self.trace.append((caption, snap))


def render_colored(g: Grid, inner: dict, outer: dict, j: int = 1, moving: ColorLetter | None = None) -> str:
    """Rows joined by ``/``; letters in the original alphabet, bookkeeping letters by name.

    The puncture shows the name of the letter being slid (or ``*``); other empty cells ``.``.
    """
    cells: dict = {}
    for rc, x in shift_letters(g.cells, j - 1).items():
        cells[rc] = (str(moving) if moving is not None else "*") if x == PUNCTURE else str(x)
    for rc, lab in list(inner.items()) + list(outer.items()):
        if rc not in cells:
            cells[rc] = str(lab)
    if not cells:
        return ""
    nrows = max(r for r, _ in cells) + 1
    rows = []
    for r in range(nrows):
        width = max((c for rr, c in cells if rr == r), default=-1) + 1
        rows.append(",".join(cells.get((r, c), ".") for c in range(width)))
    return "/".join(rows)


# ---------------------------------------------------------------------------
# Santos evacuation and full reversal


def _rotated_complement(t: Tableau) -> Grid:
    height, width = len(t.rows), t.outer[0]
    cells = {(height - 1 - r, width - 1 - c): -x for r, c, x in t.cells()}
    inner = {(r, c) for r in range(height) for c in range(width) if (r, c) not in cells}
    return Grid(t.n, cells, inner)


def evacuation_C(t: Tableau, trace: list | None = None) -> Tableau:
    """Santos evacuation: swap bars, rotate by pi and rectify."""
    if t.kind != "C":
        raise TableauError("evacuation_C needs a type C tableau")
    if t.inner or t.puncture is not None:
        raise TableauError("evacuation needs a straight tableau")
    if not t.rows:
        return t
    g = _rotated_complement(t)
    if trace is not None:
        trace.append(g.to_tableau())
        _rectify_traced(g, trace)
    else:
        rectify_grid(g)
    out = g.to_tableau()
    if out.outer != t.outer:
        raise SwitchingError(f"evacuation changed the shape {t.outer} to {out.outer}")
    return out


def _rectify_traced(g: Grid, trace: list) -> None:
    from .sjdt import complete_slide_grid, default_corner

    while g.inner:
        complete_slide_grid(g, default_corner(g), trace)


def reversal_C(t: Tableau) -> Tableau:
    """Coplactic reversal of a skew KN tableau (``xi`` on its whole crystal component)."""
    return colorful_switching(t, 1).result


def reversal_C_direct(t: Tableau) -> Tableau:
    """``arect . evac . rect`` replayed along the rectification journal."""
    from .sjdt import anti_rectify, rectify_with_journal

    r, journal = rectify_with_journal(t)
    return anti_rectify(evacuation_C(r), journal)


# ---------------------------------------------------------------------------
# Colorful switching


@dataclass
class SwitchResult:
    result: Tableau
    state: SwitchState
    rect: Tableau
    evac: Tableau
    evac_trace: list
    V: str = ""


def _initial_state(t: Tableau, j: int) -> SwitchState:
    n = t.n
    cells, inner, plus, minus = {}, [], {}, {}
    for r, row in enumerate(t.rows):
        for c, x in enumerate(row):
            if x is None:
                inner.append((r, c))
            elif x == PUNCTURE:
                raise TableauError("cannot switch a punctured tableau")
            elif abs(x) >= j:
                cells[(r, c)] = x
            elif x > 0:
                plus[(r, c)] = x
                inner.append((r, c))
            else:
                minus[(r, c)] = x
    body = Grid(n - j + 1, shift_letters(cells, -(j - 1)), set(inner))
    greens = {}
    # row reading order labels the frozen cells
    for k, rc in enumerate(sorted(inner), start=1):
        greens[rc] = ColorLetter("green", k)
    order = RankOrder(sorted(greens.values(), key=lambda x: x.index))
    return SwitchState(n, j, body, dict(greens), {}, order, [], [], plus, minus)


def _purple_contractions(state: SwitchState) -> None:
    g = state.body
    m = g.n
    width = max((c for _, c in g.cells), default=-1) + 1
    k = 0
    purples, primes = [], []
    for c in range(width):
        while True:
            letters = g.letters(c)
            vals = [x for _, x in letters]
            if is_admissible(vals, m) and len(vals) <= m:
                break
            step = r3_contract_once(vals, m)
            if step is None:
                raise SwitchingError(f"column {c + 1} has no R3 contraction")
            rest, z = step
            rows = [r for r, _ in letters]
            top, bottom = rows[0], rows[-1]
            del g.cells[(top, c)]
            del g.cells[(bottom, c)]
            for r, x in zip(rows[1:-1], rest):
                g.cells[(r, c)] = x
            k += 1
            p = ColorLetter("purple", k)
            state.inner[(top, c)] = p
            state.outer[(bottom, c)] = p.partner()
            g.inner.add((top, c))
            purples.append(p)
            primes.append(p.partner())
            state.record(f"purple contraction of {z + state.j - 1} in column {c + 1}")
    state.order.seq.extend(purples + primes[::-1])


def _forward(state: SwitchState) -> None:
    g = state.body
    reds = 0
    pending = sorted(state.inner, key=lambda rc: state.order.rank(state.inner[rc]), reverse=True)
    while pending:
        start = pending.pop(0)
        u = state.inner.pop(start)
        g.inner.discard(start)
        g.cells[start] = PUNCTURE
        state.record(f"slide {u}", u)
        contraction = None
        while True:
            kind, info = forward_step(g, lambda h: state.record("before contraction", u, h))
            if kind == "exit":
                state.outer[info] = u
                break
            if info is not None:
                if contraction is not None or info.col != start[1]:
                    raise SwitchingError("red contraction away from the starting column")
                contraction = info
                reds += 1
                r = ColorLetter("red", reds)
                state.inner[(info.top, info.col)] = r
                state.outer[(info.bottom, info.col)] = r.partner()
                state.order.insert_below(u, [r, r.partner()])
                pending.insert(0, (info.top, info.col))
            state.record(f"slide {u}", u)
        state.journal.append((u, SlideEvent(start, info, contraction)))
        state.record(f"{u} exits")


def _purple_dilation(g: Grid, c: int, top: int, bottom: int) -> None:
    rows = [r for r, _ in g.column(c)]
    rest = tuple(x for _, x in g.column(c))
    if rows != list(range(top + 1, bottom)):
        raise SwitchingError(f"column {c + 1} is not packed for a purple dilation")
    cands = []
    for k in range(1, g.n + 1):
        if k in rest or -k in rest:
            continue
        col = sort_column(list(rest) + [k, -k], g.n)
        if r3_contract_once(col, g.n) == (rest, k):
            cands.append(col)
    if len(cands) != 1:
        raise SwitchingError(f"purple dilation of column {c + 1} has {len(cands)} candidates")
    g.inner.discard((top, c))
    for r, x in zip(range(top, bottom + 1), cands[0]):
        g.cells[(r, c)] = x


def _backward(state: SwitchState) -> None:
    g = state.body
    events = {u: ev for u, ev in state.journal}
    for v in list(state.order):
        cells = [rc for rc, lab in state.outer.items() if lab == v]
        if not cells:
            continue
        (cell,) = cells
        if v.color == "red'":
            tops = [rc for rc, lab in state.inner.items() if lab == v.partner()]
            if len(tops) != 1 or tops[0][1] != cell[1] or tops[0][0] >= cell[0]:
                raise SwitchingError(f"{v.partner()} did not return above {v}")
            del state.inner[tops[0]]
            del state.outer[cell]
            state.record(f"erase {v.partner()} and {v}")
            continue
        if v.color == "purple'":
            continue
        ev = events[v]
        del state.outer[cell]
        steps: list = []
        end = reverse_slide_grid(g, cell, ev.contraction, steps)
        for snap in steps:
            state.record(f"reverse slide {v}", v, Grid.from_tableau(snap))
        if end != ev.start:
            raise SwitchingError(f"{v} returned to {end}, expected {ev.start}")
        state.inner[end] = v
        state.record(f"{v} enters", None)
    purples = [v for v in state.order if v.color == "purple'"]
    for v in purples:
        (cell,) = [rc for rc, lab in state.outer.items() if lab == v]
        (top,) = [rc for rc, lab in state.inner.items() if lab == v.partner()]
        if top[1] != cell[1]:
            raise SwitchingError(f"{v.partner()} and {v} are in different columns")
        del state.inner[top]
        del state.outer[cell]
        _purple_dilation(g, cell[1], top[0], cell[0])
        state.record(f"purple dilation in column {cell[1] + 1}")


def colorful_switching(t: Tableau, j: int) -> SwitchResult:
    """Run Steps I-IV of the colorful algorithm and keep every intermediate state."""
    if t.kind != "C":
        raise TableauError("colorful switching needs a type C tableau")
    n = t.n
    if not 1 <= j <= n:
        raise SwitchingError(f"j = {j} outside [1, {n}]")
    state = _initial_state(t, j)
    greens = {rc: lab for rc, lab in state.inner.items()}
    state.record("start")
    _purple_contractions(state)
    _forward(state)
    rect = state.body.to_tableau()
    labels_V = render_colored(Grid(n, {}, set()), {}, state.outer)
    evac_trace: list = []
    ev = evacuation_C(rect, evac_trace)
    state.body = Grid.from_tableau(ev)
    state.body.inner = set(state.inner)
    state.record("evacuated")
    _backward(state)
    if state.inner != greens:
        raise SwitchingError("green letters did not return to the frozen shape")
    cells = shift_letters(state.body.cells, j - 1)
    cells.update(state.frozen_plus)
    cells.update(state.frozen_minus)
    inner = [rc for rc in greens if rc not in state.frozen_plus]
    out = from_cells(cells, n, "C", inner)
    shift_back = lambda s: Grid(n, shift_letters(Grid.from_tableau(s).cells, j - 1), set()).to_tableau()  # noqa: E731
    return SwitchResult(out, state, shift_back(rect), shift_back(ev), evac_trace, labels_V)


def partial_reversal_Cjn(t: Tableau, j: int) -> Tableau:
    """``xi_[j,n]`` by colorful switching; the single node ``{n}`` uses the reflection."""
    n = t.n
    if not 1 <= j <= n:
        raise SwitchingError(f"j = {j} outside [1, {n}]")
    if j == n:
        return reflection_xi_i(t, n)
    return colorful_switching(t, j).result


# ---------------------------------------------------------------------------
# Reflections and Bender-Knuth involutions


def reflection_xi_i(t: Tableau, i: int) -> Tableau:
    """Kashiwara reflection on the ``i``-string: ``f^(phi-eps)`` or ``e^(eps-phi)``."""
    if not 1 <= i <= rank_of(t):
        raise CrystalError(f"color {i} outside [1, {rank_of(t)}]")
    eps, phi = eps_phi(t, i)
    out = f_power(t, i, phi - eps) if phi >= eps else e_power(t, i, eps - phi)
    assert out is not None
    return out


def partial_xi_C(t: Tableau, interval: Sequence[int]) -> Tableau:
    """``xi_[p,q]``: switching when ``q = n``, virtualization otherwise."""
    p, q = interval
    n = t.n
    if not 1 <= p <= q <= n:
        raise SwitchingError(f"interval [{p},{q}] outside [1, {n}]")
    if p == q:
        return reflection_xi_i(t, p)
    if q == n:
        return partial_reversal_Cjn(t, p)
    from .virtualization import virtual_partial_xi_C

    return virtual_partial_xi_C(t, p, q)


def q_C(t: Tableau, p: int, q: int) -> Tableau:
    """``q_[p,q]`` with ``q_[p,p-1]`` the identity."""
    if q < p:
        return t
    return partial_xi_C(t, (p, q))


def symplectic_bk(t: Tableau, i: int) -> Tableau:
    """Symplectic Bender-Knuth involution ``t_i``, ``1 <= i <= 2n-1`` (rightmost factor first)."""
    n = t.n
    if not 1 <= i <= 2 * n - 1:
        raise SwitchingError(f"t_{i} outside [1, {2 * n - 1}]")
    if i == n:
        return reflection_xi_i(t, n)
    if i == 1:
        return q_C(t, 1, 1)
    if i < n:
        for a, b in ((1, i - 2), (1, i - 1), (1, i), (1, i - 1)):
            t = q_C(t, a, b)
        return t
    k = i - n + 1
    return q_C(q_C(t, n - k + 2, n), n - k + 1, n)

"""Crystal operators on tableaux via the signature rule, crystal graphs and branching."""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .core_tableaux import (
    Tableau,
    TableauError,
    is_kn_tableau,
    reading_cells,
    render,
    replace_cells,
    weight,
)


class CrystalError(ValueError):
    pass


def rank_of(t: Tableau) -> int:
    """Number of Dynkin nodes: ``n`` for type C, ``n - 1`` for type A on ``[n]``."""
    return t.n if t.kind == "C" else t.n - 1


def _check_color(t: Tableau, i: int) -> None:
    if not 1 <= i <= rank_of(t):
        raise CrystalError(f"color {i} outside 1..{rank_of(t)}")


def _sign(x: int, i: int, n: int, kind: str) -> int:
    """+1 if ``f_i`` can act on ``x``, -1 if ``e_i`` can, 0 otherwise."""
    if kind == "A":
        return 1 if x == i else -1 if x == i + 1 else 0
    if i == n:
        return 1 if x == n else -1 if x == -n else 0
    if x == i or x == -(i + 1):
        return 1
    if x == i + 1 or x == -i:
        return -1
    return 0


def _lower(x: int, i: int, n: int, kind: str) -> int:
    if kind == "A":
        return i + 1
    if i == n:
        return -n
    return i + 1 if x == i else -i


def _raise(x: int, i: int, n: int, kind: str) -> int:
    if kind == "A":
        return i
    if i == n:
        return n
    return i if x == i + 1 else -(i + 1)


def reduced_signature(word: Sequence[int], i: int, n: int, kind: str = "C") -> tuple[list[int], list[int]]:
    """Positions of the unmatched ``-`` and ``+`` letters after cancelling ``+-`` pairs."""
    stack_plus: list[int] = []
    minus: list[int] = []
    for pos, x in enumerate(word):
        s = _sign(x, i, n, kind)
        if s > 0:
            stack_plus.append(pos)
        elif s < 0:
            if stack_plus:
                stack_plus.pop()
            else:
                minus.append(pos)
    return minus, stack_plus


def f_word(word: Sequence[int], i: int, n: int, kind: str = "C") -> list[int] | None:
    _, plus = reduced_signature(word, i, n, kind)
    if not plus:
        return None
    w = list(word)
    p = plus[0]
    w[p] = _lower(w[p], i, n, kind)
    return w


def e_word(word: Sequence[int], i: int, n: int, kind: str = "C") -> list[int] | None:
    minus, _ = reduced_signature(word, i, n, kind)
    if not minus:
        return None
    w = list(word)
    p = minus[-1]
    w[p] = _raise(w[p], i, n, kind)
    return w


def _apply(t: Tableau, i: int, op: Callable) -> Tableau | None:
    _check_color(t, i)
    cells = reading_cells(t)
    word = [t.rows[r][c] for r, c in cells]
    new = op(word, i, t.n, t.kind)
    if new is None:
        return None
    changes = {rc: y for rc, x, y in zip(cells, word, new) if x != y}
    return replace_cells(t, changes)


def f(t: Tableau, i: int) -> Tableau | None:
    """Lowering operator ``f_i``; ``None`` stands for the zero element."""
    return _apply(t, i, f_word)


def e(t: Tableau, i: int) -> Tableau | None:
    """Raising operator ``e_i``; ``None`` stands for the zero element."""
    return _apply(t, i, e_word)


def eps_phi(t: Tableau, i: int) -> tuple[int, int]:
    _check_color(t, i)
    word = [t.rows[r][c] for r, c in reading_cells(t)]
    minus, plus = reduced_signature(word, i, t.n, t.kind)
    return len(minus), len(plus)


def pairing(wt: Sequence[int], i: int, n: int, kind: str = "C") -> int:
    """``<wt, alpha_i^vee>``."""
    if kind == "C" and i == n:
        return wt[n - 1]
    return wt[i - 1] - wt[i]


def simple_root(i: int, n: int, kind: str = "C") -> tuple[int, ...]:
    size = n
    a = [0] * size
    if kind == "C" and i == n:
        a[n - 1] = 2
    else:
        a[i - 1] = 1
        a[i] = -1
    return tuple(a)


def f_power(t: Tableau, i: int, k: int) -> Tableau | None:
    for _ in range(k):
        if t is None:
            return None
        t = f(t, i)
    return t


def e_power(t: Tableau, i: int, k: int) -> Tableau | None:
    for _ in range(k):
        if t is None:
            return None
        t = e(t, i)
    return t


def apply_ops(t: Tableau, ops: Iterable[str]) -> Tableau | None:
    """Apply a sequence like ``["f1", "e2"]`` left to right."""
    for op in ops:
        op = op.strip()
        if not op:
            continue
        kind, idx = op[0], op[1:]
        if kind not in "fe" or not idx.isdigit():
            raise CrystalError(f"bad operator {op!r}")
        t = (f if kind == "f" else e)(t, int(idx))
        if t is None:
            return None
    return t


def highest_in(t: Tableau, colors: Iterable[int]) -> tuple[Tableau, list[int]]:
    """Raise greedily within ``colors``; returns the source and the ``e`` colors used."""
    colors = sorted(colors)
    path = []
    moved = True
    while moved:
        moved = False
        for i in colors:
            u = e(t, i)
            if u is not None:
                t = u
                path.append(i)
                moved = True
                break
    return t, path


def lowest_in(t: Tableau, colors: Iterable[int]) -> tuple[Tableau, list[int]]:
    colors = sorted(colors)
    path = []
    moved = True
    while moved:
        moved = False
        for i in colors:
            u = f(t, i)
            if u is not None:
                t = u
                path.append(i)
                moved = True
                break
    return t, path


def theta(J: Sequence[int], n: int, kind: str = "C") -> Callable[[int], int]:
    """Diagram automorphism of the interval ``J``: identity when ``n`` is in ``J`` (type C)."""
    p, q = min(J), max(J)
    if kind == "C" and q == n:
        return lambda d: d
    return lambda d: p + q - d


def xi_oracle(t: Tableau, J: Sequence[int]) -> Tableau:
    """Schutzenberger-Lusztig involution of the ``J``-branched component, by crystal paths."""
    J = sorted(J)
    if not J:
        return t
    high, path = highest_in(t, J)
    low, _ = lowest_in(high, J)
    th = theta(J, rank_of(t) if t.kind == "C" else rank_of(t), t.kind)
    out = low
    # t = f_{path[0]} ... f_{path[-1]} (high); raising order was path[0] first
    for j in reversed(path):
        out = e(out, th(j))
        if out is None:
            raise CrystalError("component is not a normal crystal")
    return out


def xi_oracle_union(t: Tableau, intervals: Sequence[Sequence[int]]) -> Tableau:
    for J in intervals:
        t = xi_oracle(t, J)
    return t


# ---------------------------------------------------------------------------
# Crystal graphs


@dataclass
class CrystalGraph:
    vertices: list[Tableau]
    arrows: list[tuple[int, int, int]]
    colors: tuple[int, ...]
    n: int
    kind: str = "C"
    complete: bool = True
    index: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.index:
            self.index = {v: k for k, v in enumerate(self.vertices)}

    def __len__(self) -> int:
        return len(self.vertices)

    def out_arrow(self) -> dict[tuple[int, int], int]:
        return {(s, i): d for s, i, d in self.arrows}

    def components(self) -> list[int]:
        """Component id per vertex (ids in order of first vertex)."""
        parent = list(range(len(self.vertices)))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for s, _, d in self.arrows:
            ra, rb = find(s), find(d)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        roots: dict[int, int] = {}
        return [roots.setdefault(find(v), len(roots)) for v in range(len(self.vertices))]

    def sources_sinks(self) -> list[tuple[list[int], list[int]]]:
        comp = self.components()
        has_in = set(d for _, _, d in self.arrows)
        has_out = set(s for s, _, _ in self.arrows)
        k = max(comp, default=-1) + 1
        out: list[tuple[list[int], list[int]]] = [([], []) for _ in range(k)]
        for v, c in enumerate(comp):
            if v not in has_in:
                out[c][0].append(v)
            if v not in has_out:
                out[c][1].append(v)
        return out

    def highest_of(self, v: int) -> int:
        c = self.components()[v]
        srcs = self.sources_sinks()[c][0]
        if len(srcs) != 1:
            raise CrystalError(f"component {c} has {len(srcs)} sources")
        return srcs[0]

    def lowest_of(self, v: int) -> int:
        c = self.components()[v]
        sinks = self.sources_sinks()[c][1]
        if len(sinks) != 1:
            raise CrystalError(f"component {c} has {len(sinks)} sinks")
        return sinks[0]

    def component_of(self, v: int) -> int:
        return self.components()[v]

    def to_dot(self) -> str:
        palette = ["blue", "red", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"]
        lines = ["digraph crystal {", "  node [shape=box, fontname=monospace];"]
        for k, v in enumerate(self.vertices):
            lines.append(f'  v{k} [label="{render(v)}"];')
        for s, i, d in self.arrows:
            color = palette[(i - 1) % len(palette)]
            lines.append(f'  v{s} -> v{d} [label="{i}", color={color}];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "kind": self.kind,
            "colors": list(self.colors),
            "complete": self.complete,
            "vertices": [render(v) for v in self.vertices],
            "weights": [list(weight(v)) for v in self.vertices],
            "arrows": [list(a) for a in self.arrows],
            "components": self.components(),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def generate_crystal(seed: Tableau, colors: Iterable[int] | None = None) -> CrystalGraph:
    """BFS closure of ``seed`` under ``f_i`` for the given colors.

    Frontier order is FIFO with colors ascending, so output is reproducible.
    A seed that is not highest weight only yields its down-set; ``complete`` is then False.
    """
    if seed.kind == "C" and not is_kn_tableau(seed):
        raise CrystalError(f"{render(seed)} is not a KN tableau")
    colors = tuple(sorted(range(1, rank_of(seed) + 1) if colors is None else set(colors)))
    for i in colors:
        _check_color(seed, i)
    complete = all(e(seed, i) is None for i in colors)
    vertices = [seed]
    index = {seed: 0}
    arrows = []
    queue = deque([0])
    while queue:
        k = queue.popleft()
        v = vertices[k]
        for i in colors:
            w = f(v, i)
            if w is None:
                continue
            j = index.get(w)
            if j is None:
                j = len(vertices)
                index[w] = j
                vertices.append(w)
                queue.append(j)
            arrows.append((k, i, j))
    return CrystalGraph(vertices, arrows, colors, seed.n, seed.kind, complete, index)


def generate_full(vertices: Sequence[Tableau], colors: Iterable[int] | None = None) -> CrystalGraph:
    """Crystal graph on a given vertex set (closed under the operators)."""
    vertices = list(vertices)
    if not vertices:
        return CrystalGraph([], [], (), 0)
    t0 = vertices[0]
    colors = tuple(sorted(range(1, rank_of(t0) + 1) if colors is None else set(colors)))
    index = {v: k for k, v in enumerate(vertices)}
    arrows = []
    for k, v in enumerate(vertices):
        for i in colors:
            w = f(v, i)
            if w is None:
                continue
            if w not in index:
                raise CrystalError(f"vertex set not closed: f_{i}({render(v)}) = {render(w)}")
            arrows.append((k, i, index[w]))
    return CrystalGraph(vertices, arrows, colors, t0.n, t0.kind, True, index)


def branch(g: CrystalGraph, J: Iterable[int]) -> CrystalGraph:
    J = tuple(sorted(set(J)))
    if not set(J) <= set(g.colors):
        raise CrystalError(f"colors {J} not contained in {g.colors}")
    arrows = [a for a in g.arrows if a[1] in J]
    return CrystalGraph(g.vertices, arrows, J, g.n, g.kind, g.complete, g.index)


def character(g: CrystalGraph) -> Counter:
    return Counter(weight(v) for v in g.vertices)


def reflect_weight(wt: Sequence[int], i: int, n: int, kind: str = "C") -> tuple[int, ...]:
    """Simple reflection ``r_i`` acting on a weight vector."""
    w = list(wt)
    if kind == "C" and i == n:
        w[n - 1] = -w[n - 1]
    else:
        w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def is_symmetric_character(ch: Counter, n: int, kind: str = "C") -> bool:
    r = n if kind == "C" else n - 1
    for i in range(1, r + 1):
        moved = Counter({reflect_weight(w, i, n, kind): m for w, m in ch.items()})
        if moved != ch:
            return False
    return True


def highest_weight_tableau(shape: Sequence[int], n: int, kind: str = "C") -> Tableau:
    if len(shape) > n:
        raise TableauError(f"shape {tuple(shape)} has more than {n} rows")
    return Tableau.yamanouchi(shape, n, kind)


def crystal_of_shape(shape: Sequence[int], n: int, kind: str = "C") -> CrystalGraph:
    return generate_crystal(highest_weight_tableau(shape, n, kind))

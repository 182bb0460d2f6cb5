"""Letters, skew tableaux, admissible columns, splits and the coadmissible bijection.

Letters of the type C alphabet ``1 < ... < n < -n < ... < -1`` are signed
integers: ``k`` is unbarred, ``-k`` is the barred letter.  Type A tableaux use
positive integers ``1..m`` with the natural order.  Inside a row tuple an inner
(skew) cell is ``None`` and the puncture is ``0``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

PUNCTURE = 0

Row = tuple  # tuple[int | None, ...]


class TableauError(ValueError):
    """Raised for malformed tableaux, with a location when one is known."""


def key(x: int, n: int) -> int:
    """Position of letter ``x`` in the ordered type C alphabet of rank ``n``."""
    return x if x > 0 else 2 * n + 1 + x


def letter_from_key(k: int, n: int) -> int:
    return k if k <= n else k - 2 * n - 1


def sort_column(letters: Iterable[int], n: int) -> tuple[int, ...]:
    return tuple(sorted(letters, key=lambda x: key(x, n)))


def all_letters(n: int) -> list[int]:
    return list(range(1, n + 1)) + list(range(-n, 0))


# ---------------------------------------------------------------------------
# Shapes


def normalize_shape(parts: Sequence[int]) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise TableauError(f"negative part in shape {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise TableauError(f"shape {parts} is not weakly decreasing")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def conjugate(parts: Sequence[int]) -> tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > c) for c in range(parts[0]))


def partitions_of(total: int, max_parts: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``total`` with at most ``max_parts`` parts, largest first."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions_of(total - first, max_parts - 1, first):
            yield (first,) + rest


def partitions_upto(size: int, max_parts: int) -> list[tuple[int, ...]]:
    return [p for s in range(size + 1) for p in partitions_of(s, max_parts)]


# ---------------------------------------------------------------------------
# Tableau value


@dataclass(frozen=True)
class Tableau:
    """A (possibly skew, possibly punctured) tableau in English notation.

    ``rows[r]`` lists the cells of row ``r`` from column 0; inner cells are
    ``None`` and must form a prefix of the row.  ``kind`` is ``"C"`` for the
    symplectic alphabet of rank ``n`` and ``"A"`` for the alphabet ``[n]``.
    """

    rows: tuple
    n: int
    kind: str = "C"

    # -- construction -----------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int | None]], n: int, kind: str = "C",
                  check: bool = True) -> "Tableau":
        t = cls(tuple(tuple(r) for r in rows), n, kind)
        t = t.trimmed()
        if check:
            t.validate()
        return t

    @classmethod
    def empty(cls, n: int, kind: str = "C") -> "Tableau":
        return cls((), n, kind)

    @classmethod
    def yamanouchi(cls, shape: Sequence[int], n: int, kind: str = "C") -> "Tableau":
        shape = normalize_shape(shape)
        return cls(tuple(tuple([i + 1] * p) for i, p in enumerate(shape)), n, kind)

    def trimmed(self) -> "Tableau":
        rows = list(self.rows)
        while rows and len(rows[-1]) == 0:
            rows.pop()
        if len(rows) == len(self.rows):
            return self
        return Tableau(tuple(rows), self.n, self.kind)

    # -- shape data -------------------------------------------------------
    @property
    def outer(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def inner(self) -> tuple[int, ...]:
        out = []
        for r in self.rows:
            k = 0
            while k < len(r) and r[k] is None:
                k += 1
            out.append(k)
        while out and out[-1] == 0:
            out.pop()
        return tuple(out)

    @property
    def puncture(self) -> tuple[int, int] | None:
        for r, row in enumerate(self.rows):
            for c, x in enumerate(row):
                if x == PUNCTURE:
                    return (r, c)
        return None

    def is_straight(self) -> bool:
        return not self.inner

    def size(self) -> int:
        return sum(1 for _ in self.cells())

    def cells(self) -> Iterator[tuple[int, int, int]]:
        """Letter cells ``(row, col, letter)`` in row-major order (no puncture)."""
        for r, row in enumerate(self.rows):
            for c, x in enumerate(row):
                if x is not None and x != PUNCTURE:
                    yield r, c, x

    def get(self, r: int, c: int) -> int | None:
        if 0 <= r < len(self.rows) and 0 <= c < len(self.rows[r]):
            return self.rows[r][c]
        return None

    def column_cells(self, c: int) -> list[tuple[int, int]]:
        """``(row, entry)`` for the non-inner cells of column ``c``, top to bottom."""
        out = []
        for r, row in enumerate(self.rows):
            if c < len(row) and row[c] is not None:
                out.append((r, row[c]))
        return out

    def columns(self) -> list[tuple[int, ...]]:
        """Letters of each column, left to right (puncture skipped)."""
        width = max(self.outer, default=0)
        return [tuple(x for _, x in self.column_cells(c) if x != PUNCTURE) for c in range(width)]

    def lt(self, a: int, b: int) -> bool:
        if self.kind == "A":
            return a < b
        return key(a, self.n) < key(b, self.n)

    def sort_key(self, x: int) -> int:
        return x if self.kind == "A" else key(x, self.n)

    # -- validation -------------------------------------------------------
    def validate(self) -> None:
        outer = self.outer
        if any(a < b for a, b in zip(outer, outer[1:])):
            raise TableauError(f"outer shape {outer} is not a partition")
        inner_raw = []
        punctures = 0
        for r, row in enumerate(self.rows):
            k = 0
            while k < len(row) and row[k] is None:
                k += 1
            for c in range(k, len(row)):
                x = row[c]
                if x is None:
                    raise TableauError(f"inner cell after a filled cell at row {r + 1}, col {c + 1}")
                if x == PUNCTURE:
                    punctures += 1
                    continue
                self._check_letter(x, r, c)
            inner_raw.append(k)
        if any(a < b for a, b in zip(inner_raw, inner_raw[1:])):
            raise TableauError(f"inner shape {tuple(inner_raw)} is not a partition")
        if punctures > 1:
            raise TableauError("more than one puncture")
        for r, row in enumerate(self.rows):
            for c in range(len(row) - 1):
                a, b = row[c], row[c + 1]
                if a in (None, PUNCTURE) or b in (None, PUNCTURE):
                    continue
                if self.lt(b, a):
                    raise TableauError(f"row {r + 1} decreases at col {c + 2}")
        for c in range(max(outer, default=0)):
            col = [(r, x) for r, x in self.column_cells(c) if x != PUNCTURE]
            for (r1, a), (r2, b) in zip(col, col[1:]):
                if not self.lt(a, b):
                    raise TableauError(f"column {c + 1} not strictly increasing at row {r2 + 1}")

    def _check_letter(self, x: int, r: int, c: int) -> None:
        if self.kind == "A":
            ok = 1 <= x <= self.n
        else:
            ok = 1 <= abs(x) <= self.n
        if not ok:
            raise TableauError(f"letter {x} outside the alphabet at row {r + 1}, col {c + 1}")

    # -- serialization ----------------------------------------------------
    def render(self) -> str:
        return render(self)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "kind": self.kind,
            "outer": list(self.outer),
            "inner": list(self.inner),
            "rows": [[None if x is None else x for x in row] for row in self.rows],
        }

    def __str__(self) -> str:
        return render(self)


def with_rows(t: Tableau, rows) -> Tableau:
    return Tableau(tuple(tuple(r) for r in rows), t.n, t.kind).trimmed()


def from_cells(cells: dict, n: int, kind: str = "C", inner_cells: Iterable[tuple[int, int]] = ()) -> Tableau:
    """Build a tableau from ``{(r, c): entry}`` plus explicitly inner cells."""
    grid: dict[tuple[int, int], int | None] = dict(cells)
    for rc in inner_cells:
        grid[rc] = None
    if not grid:
        return Tableau((), n, kind)
    nrows = max(r for r, _ in grid) + 1
    rows = []
    for r in range(nrows):
        cols = [c for (rr, c) in grid if rr == r]
        if not cols:
            rows.append(())
            continue
        width = max(cols) + 1
        row = []
        for c in range(width):
            if (r, c) not in grid:
                row.append(None)
            else:
                row.append(grid[(r, c)])
        rows.append(tuple(row))
    return Tableau(tuple(rows), n, kind).trimmed()


# ---------------------------------------------------------------------------
# Text and JSON formats


def _render_cell(x) -> str:
    if x is None:
        return "."
    if x == PUNCTURE:
        return "*"
    return str(x)


def render(t: Tableau) -> str:
    return "/".join(",".join(_render_cell(x) for x in row) for row in t.rows)


def parse(text: str, n: int, kind: str = "C", check: bool = True) -> Tableau:
    """Parse the canonical format, e.g. ``".,2,-2,-1/-2,-2,-1/-1"``."""
    text = "".join(text.split())
    if text == "":
        return Tableau.empty(n, kind)
    rows = []
    for r, chunk in enumerate(text.split("/")):
        row = []
        if chunk == "":
            rows.append(())
            continue
        for c, tok in enumerate(chunk.split(",")):
            if tok == ".":
                row.append(None)
            elif tok == "*":
                row.append(PUNCTURE)
            else:
                try:
                    x = int(tok)
                except ValueError:
                    raise TableauError(f"bad letter {tok!r} at row {r + 1}, col {c + 1}") from None
                if x == 0:
                    raise TableauError(f"letter 0 is not allowed at row {r + 1}, col {c + 1}")
                row.append(x)
        rows.append(tuple(row))
    return Tableau.from_rows(rows, n, kind, check=check)


def from_json(data: dict | str) -> Tableau:
    if isinstance(data, str):
        data = json.loads(data)
    rows = [tuple(x for x in row) for row in data["rows"]]
    t = Tableau.from_rows(rows, int(data["n"]), data.get("kind", "C"))
    if "outer" in data and tuple(data["outer"]) != t.outer:
        raise TableauError("outer shape does not match rows")
    if "inner" in data and normalize_shape(data["inner"]) != t.inner:
        raise TableauError("inner shape does not match rows")
    return t


# ---------------------------------------------------------------------------
# Admissible columns


def column_count_N(col: Sequence[int], m: int) -> int:
    """Number of letters ``x`` of the column with ``x <= m`` or ``x >= -m``."""
    return sum(1 for x in col if (x > 0 and x <= m) or (x < 0 and -x <= m))


def _as_column(col) -> tuple[int, ...]:
    if isinstance(col, Tableau):
        cols = [c for c in col.columns() if c]
        if len(cols) > 1:
            raise TableauError("expected a single column")
        return cols[0] if cols else ()
    return tuple(col)


def is_admissible(col, n: int) -> bool:
    col = _as_column(col)
    return all(column_count_N(col, m) <= m for m in range(1, n + 1))


def first_violation(col: Sequence[int], n: int) -> int | None:
    for m in range(1, n + 1):
        if column_count_N(col, m) > m:
            return m
    return None


def is_column(col: Sequence[int], n: int) -> bool:
    return all(key(a, n) < key(b, n) for a, b in zip(col, col[1:]))


@lru_cache(maxsize=None)
def _split_cached(col: tuple[int, ...], n: int) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    s = set(col)
    zs = sorted((z for z in s if z > 0 and -z in s), reverse=True)
    ts = []
    bound = None
    for z in zs:
        top = z if bound is None else min(bound, z)
        t = top - 1
        while t >= 1 and (t in s or -t in s):
            t -= 1
        if t < 1:
            return None
        ts.append(t)
        bound = t
    lc = [x for x in col if x not in zs] + ts
    rc = [x for x in col if -x not in zs or x > 0] + [-t for t in ts]
    return sort_column(lc, n), sort_column(rc, n)


def split_column(col, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The split ``(lC, rC)`` of an admissible column."""
    col = _as_column(col)
    out = _split_cached(col, n)
    if out is None or not is_admissible(col, n):
        m = first_violation(col, n)
        raise TableauError(f"column {col} is not admissible: N({m}) > {m}")
    return out


def coadmissible_of(col, n: int) -> tuple[int, ...]:
    """Phi: unbarred letters of lC followed by barred letters of rC."""
    lc, rc = split_column(col, n)
    return tuple(x for x in lc if x > 0) + tuple(x for x in rc if x < 0)


@lru_cache(maxsize=None)
def admissible_columns(n: int, height: int) -> tuple[tuple[int, ...], ...]:
    letters = sorted(all_letters(n), key=lambda x: key(x, n))
    return tuple(c for c in combinations(letters, height) if is_admissible(c, n))


@lru_cache(maxsize=None)
def _phi_inverse_table(n: int, height: int) -> dict:
    return {coadmissible_of(c, n): c for c in admissible_columns(n, height)}


def coadmissible_inverse(col: Sequence[int], n: int) -> tuple[int, ...]:
    """Phi inverse; raises if ``col`` is not coadmissible."""
    col = tuple(col)
    try:
        return _phi_inverse_table(n, len(col))[col]
    except KeyError:
        raise TableauError(f"column {col} is not coadmissible for n={n}") from None


def is_coadmissible(col: Sequence[int], n: int) -> bool:
    return tuple(col) in _phi_inverse_table(n, len(col))


def admissible_by_T_set(col: Sequence[int], n: int) -> bool:
    """Admissibility through the existence of the set T of the definition."""
    return _split_cached(tuple(col), n) is not None


# ---------------------------------------------------------------------------
# KN tableaux


def split_tableau(t: Tableau) -> list[tuple[int, list[tuple[int, ...]]]]:
    """For each column ``c``: (top row, [lC, rC]) of its letters."""
    out = []
    width = max(t.outer, default=0)
    for c in range(width):
        cells = [(r, x) for r, x in t.column_cells(c) if x != PUNCTURE]
        if not cells:
            out.append((0, [(), ()]))
            continue
        col = tuple(x for _, x in cells)
        lc, rc = split_column(col, t.n)
        out.append((cells[0][0], [lc, rc]))
    return out


def kn_violation(t: Tableau) -> str | None:
    """A human-readable reason why ``t`` is not KN, or ``None``."""
    if t.kind != "C":
        return "not a type C tableau"
    try:
        t.validate()
    except TableauError as exc:
        return str(exc)
    width = max(t.outer, default=0)
    splits: dict[int, dict[int, tuple[int, int]]] = {}
    for c in range(width):
        cells = [(r, x) for r, x in t.column_cells(c) if x != PUNCTURE]
        if not cells:
            continue
        col = tuple(x for _, x in cells)
        if not is_admissible(col, t.n):
            m = first_violation(col, t.n)
            return f"column {c + 1} is not admissible: N({m}) > {m}"
        lc, rc = split_column(col, t.n)
        splits[c] = {r: (lc[i], rc[i]) for i, (r, _) in enumerate(cells)}
    n = t.n
    for c in range(width - 1):
        left, right = splits.get(c, {}), splits.get(c + 1, {})
        for r, (_, rc) in left.items():
            if r in right and key(rc, n) > key(right[r][0], n):
                return f"split not semi-standard at row {r + 1} between columns {c + 1} and {c + 2}"
    return None


def is_kn_tableau(t: Tableau) -> bool:
    return kn_violation(t) is None


def weight(t: Tableau) -> tuple[int, ...]:
    w = [0] * t.n
    for _, _, x in t.cells():
        if x > 0:
            w[x - 1] += 1
        elif t.kind == "C":
            w[-x - 1] -= 1
    return tuple(w)


def shape_of_straight(t: Tableau) -> tuple[int, ...]:
    if t.inner:
        raise TableauError("expected a straight tableau")
    return t.outer


def column_heights_to_lambda(t: Tableau) -> tuple[int, ...]:
    """Partition (row lengths) of a straight tableau."""
    return t.outer


# ---------------------------------------------------------------------------
# Brute-force enumeration (oracles)


def enumerate_kn(outer: Sequence[int], n: int, inner: Sequence[int] = ()) -> list[Tableau]:
    """All KN tableaux of shape ``outer/inner`` by column-wise backtracking."""
    outer = normalize_shape(outer)
    inner = normalize_shape(inner)
    inner = inner + (0,) * (len(outer) - len(inner))
    width = outer[0] if outer else 0
    col_rows = []
    for c in range(width):
        rows = [r for r in range(len(outer)) if inner[r] <= c < outer[r]]
        col_rows.append(rows)
    results: list[Tableau] = []
    grid: dict[tuple[int, int], int] = {}

    def rec(c: int) -> None:
        if c == width:
            cells = dict(grid)
            inner_cells = [(r, k) for r in range(len(outer)) for k in range(inner[r])]
            t = from_cells(cells, n, "C", inner_cells)
            if is_kn_tableau(t):
                results.append(t)
            return
        rows = col_rows[c]
        for col in admissible_columns(n, len(rows)):
            ok = True
            for r, x in zip(rows, col):
                left = grid.get((r, c - 1))
                if left is not None and key(left, n) > key(x, n):
                    ok = False
                    break
            if not ok:
                continue
            for r, x in zip(rows, col):
                grid[(r, c)] = x
            rec(c + 1)
            for r in rows:
                del grid[(r, c)]

    rec(0)
    return results


def enumerate_ssyt(outer: Sequence[int], m: int, inner: Sequence[int] = ()) -> list[Tableau]:
    """All type A semistandard tableaux of shape ``outer/inner`` in ``[m]``."""
    outer = normalize_shape(outer)
    inner = normalize_shape(inner)
    inner = inner + (0,) * (len(outer) - len(inner))
    cells = [(r, c) for r in range(len(outer)) for c in range(inner[r], outer[r])]
    results: list[Tableau] = []
    grid: dict[tuple[int, int], int] = {}

    def rec(i: int) -> None:
        if i == len(cells):
            inner_cells = [(r, k) for r in range(len(outer)) for k in range(inner[r])]
            results.append(from_cells(dict(grid), m, "A", inner_cells))
            return
        r, c = cells[i]
        lo = 1
        if (r, c - 1) in grid:
            lo = max(lo, grid[(r, c - 1)])
        if (r - 1, c) in grid:
            lo = max(lo, grid[(r - 1, c)] + 1)
        for x in range(lo, m + 1):
            grid[(r, c)] = x
            rec(i + 1)
        grid.pop((r, c), None)

    rec(0)
    return results


def reading_cells(t: Tableau) -> list[tuple[int, int]]:
    """Cells of ``t`` in reading order: columns right to left, each top to bottom."""
    width = max(t.outer, default=0)
    out = []
    for c in range(width - 1, -1, -1):
        for r, x in t.column_cells(c):
            if x == PUNCTURE:
                raise TableauError("cannot read a punctured tableau")
            out.append((r, c))
    return out


def replace_cells(t: Tableau, changes: dict) -> Tableau:
    rows = [list(r) for r in t.rows]
    for (r, c), x in changes.items():
        rows[r][c] = x
    return Tableau(tuple(tuple(r) for r in rows), t.n, t.kind)

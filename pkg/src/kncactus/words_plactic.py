"""Reading words, symplectic Knuth relations, plactic classes and type A column insertion."""

from __future__ import annotations

from typing import Iterable, Sequence

from .core_tableaux import (
    PUNCTURE,
    Tableau,
    TableauError,
    column_count_N,
    first_violation,
    from_cells,
    is_admissible,
    key,
    reading_cells,
)

RULES = ("R1a", "R1b", "R2a", "R2b", "R3contract", "R3dilate")


class KnuthError(ValueError):
    pass


def parse_word(text: str) -> list[int]:
    out = []
    for k, tok in enumerate(text.replace(",", " ").split()):
        try:
            x = int(tok)
        except ValueError:
            raise TableauError(f"bad letter {tok!r} at position {k + 1}") from None
        if x == 0:
            raise TableauError(f"letter 0 is not allowed at position {k + 1}")
        out.append(x)
    return out


def render_word(word: Sequence[int]) -> str:
    return " ".join(str(x) for x in word)


def reading_word(t: Tableau) -> list[int]:
    """Columns right to left, each read top to bottom."""
    if t.puncture is not None:
        raise TableauError("cannot read a punctured tableau")
    return [t.rows[r][c] for r, c in reading_cells(t)]


def word_weight(word: Sequence[int], n: int) -> tuple[int, ...]:
    w = [0] * n
    for x in word:
        w[abs(x) - 1] += 1 if x > 0 else -1
    return tuple(w)


# ---------------------------------------------------------------------------
# R3 on column words


def r3_contract_index(col: Sequence[int], n: int) -> int | None:
    """The ``z`` deleted by one R3 contraction of a column word, or ``None`` if admissible.

    The shortest non-admissible prefix is located and ``z`` is the smallest unbarred
    letter of it with ``N(z) = z + 1``.
    """
    col = tuple(col)
    for end in range(1, len(col) + 1):
        prefix = col[:end]
        if not is_admissible(prefix, n) or end > n:
            cands = [z for z in prefix if z > 0 and -z in prefix and column_count_N(prefix, z) == z + 1]
            if not cands:
                raise KnuthError(f"no contractible pair in {prefix}")
            return min(cands)
    return None


def r3_contract_once(col: Sequence[int], n: int) -> tuple[tuple[int, ...], int] | None:
    z = r3_contract_index(col, n)
    if z is None:
        return None
    return tuple(x for x in col if x != z and x != -z), z


def r3_contract_full(col: Sequence[int], n: int) -> tuple[tuple[int, ...], list[int]]:
    """Iterate R3 contractions until the column is admissible; returns removed ``z``'s."""
    col = tuple(col)
    removed = []
    while True:
        step = r3_contract_once(col, n)
        if step is None:
            return col, removed
        col, z = step
        removed.append(z)


def _is_column_word(w: Sequence[int], n: int) -> bool:
    return all(key(a, n) < key(b, n) for a, b in zip(w, w[1:]))


def knuth_step(word: Sequence[int], position: int, rule: str, n: int, z: int | None = None) -> list[int]:
    """Apply one elementary symplectic Knuth relation at ``position`` (0-based).

    ``R1a``: ``y z x -> y x z`` with ``x <= y < z`` and ``z != -x``.
    ``R1b``: ``x z y -> z x y`` with ``x < y <= z`` and ``z != -x``.
    ``R2a``: ``y (x-1) (-(x-1)) -> y x (-x)`` with ``1 < x <= n`` and ``x <= y <= -x``.
    ``R2b``: ``x (-x) y -> (x-1) (-(x-1)) y`` with the same bounds.
    ``R3contract``: the factor starting at ``position`` is a column word that is not
    admissible while all its proper prefixes are; the pair ``(z, -z)`` is deleted.
    ``R3dilate``: inverse of contraction, inserting ``z`` and ``-z`` into the column factor
    starting at ``position`` and running to the end of the longest column factor.
    """
    w = list(word)
    k = lambda a: key(a, n)  # noqa: E731
    p = position
    if rule in ("R1a", "R1b", "R2a", "R2b"):
        if p < 0 or p + 3 > len(w):
            raise KnuthError(f"{rule}: position {p} out of range")
        a, b, c = w[p:p + 3]
        if rule == "R1a":
            y, zz, x = a, b, c
            if k(x) <= k(y) < k(zz) and zz != -x:
                w[p:p + 3] = [y, x, zz]
                return w
        elif rule == "R1b":
            x, zz, y = a, b, c
            if k(x) < k(y) <= k(zz) and zz != -x:
                w[p:p + 3] = [zz, x, y]
                return w
        elif rule == "R2a":
            y, u, v = a, b, c
            x = u + 1
            if u > 0 and v == -u and 1 < x <= n and k(x) <= k(y) <= k(-x):
                w[p:p + 3] = [y, x, -x]
                return w
        elif rule == "R2b":
            x, v, y = a, b, c
            if x > 0 and v == -x and 1 < x <= n and k(x) <= k(y) <= k(-x):
                w[p:p + 3] = [x - 1, -(x - 1), y]
                return w
        raise KnuthError(f"{rule} does not match at position {p}")
    if rule == "R3contract":
        for end in range(p + 1, len(w) + 1):
            factor = w[p:end]
            if not _is_column_word(factor, n):
                break
            if not is_admissible(factor, n) or len(factor) > n:
                step = r3_contract_once(factor, n)
                assert step is not None
                return w[:p] + list(step[0]) + w[end:]
        raise KnuthError(f"R3contract does not match at position {p}")
    if rule == "R3dilate":
        if z is None:
            raise KnuthError("R3dilate needs the letter z")
        end = p
        while end < len(w) and _is_column_word(w[p:end + 1], n):
            end += 1
        factor = w[p:end]
        if not is_admissible(factor, n) or z in factor or -z in factor:
            raise KnuthError(f"R3dilate does not match at position {p}")
        for stop in range(len(factor), -1, -1):
            big = sorted(list(factor[:stop]) + [z, -z], key=k)
            if r3_contract_once(big, n) == (tuple(factor[:stop]), z) and all(
                is_admissible(big[:m], n) for m in range(len(big))
            ):
                return w[:p] + big + list(factor[stop:]) + w[end:]
        raise KnuthError(f"R3dilate with z={z} does not match at position {p}")
    raise KnuthError(f"unknown rule {rule!r}")


# ---------------------------------------------------------------------------
# Plactic classes


def diagonal_tableau(word: Sequence[int], n: int) -> Tableau:
    """Skew tableau whose reading word is ``word``: one cell per letter on an anti-diagonal."""
    m = len(word)
    cells = {}
    inner = []
    for j, x in enumerate(word):
        r, c = j, m - 1 - j
        cells[(r, c)] = x
        inner.extend((r, cc) for cc in range(c))
    return from_cells(cells, n, "C", inner)


def plactic_normal_form(word: Sequence[int], n: int) -> Tableau:
    from .sjdt import rectify

    return rectify(diagonal_tableau(word, n))


def plactic_equivalent(w1: Sequence[int], w2: Sequence[int], n: int) -> bool:
    if word_weight(w1, n) != word_weight(w2, n):
        return False
    return plactic_normal_form(w1, n) == plactic_normal_form(w2, n)


# ---------------------------------------------------------------------------
# Type A column insertion


def _columns_of(p: Tableau) -> list[list[int]]:
    return [list(c) for c in p.columns()]


def _from_columns(cols: Sequence[Sequence[int]], m: int) -> Tableau:
    cells = {(r, c): x for c, col in enumerate(cols) for r, x in enumerate(col)}
    return from_cells(cells, m, "A")


def column_insert_letter(cols: list[list[int]], x: int) -> tuple[int, int]:
    """Insert ``x`` into the columns in place; returns the new cell."""
    c = 0
    while True:
        if c == len(cols):
            cols.append([x])
            return (0, c)
        col = cols[c]
        for r, y in enumerate(col):
            if y >= x:
                col[r], x = x, y
                break
        else:
            col.append(x)
            return (len(col) - 1, c)
        c += 1


def column_insert_A(p: Tableau | None, word: Iterable[int], m: int) -> tuple[Tableau, Tableau]:
    """``[p <- w]`` by Schensted column insertion, plus the recording tableau."""
    cols = _columns_of(p) if p is not None else []
    rec: dict[tuple[int, int], int] = {}
    label = 0
    for x in word:
        if not 1 <= x <= m:
            raise TableauError(f"letter {x} outside [1, {m}]")
        label += 1
        rec[column_insert_letter(cols, x)] = label
    return _from_columns(cols, m), from_cells(rec, max(label, 1), "A")


def reverse_column_insert_A(p: Tableau, q: Tableau) -> list[int]:
    """The word whose column insertion gives ``(p, q)``."""
    if p.outer != q.outer or p.inner or q.inner:
        raise TableauError("shape mismatch between insertion and recording tableaux")
    cols = _columns_of(p)
    labels = {(r, c): x for r, c, x in q.cells()}
    order = sorted(labels, key=lambda rc: -labels[rc])
    word = []
    for r, c in order:
        col = cols[c]
        if r != len(col) - 1:
            raise TableauError(f"recording tableau not standard at row {r + 1}, col {c + 1}")
        x = col.pop()
        if not col:
            cols.pop(c)
        for cc in range(c - 1, -1, -1):
            prev = cols[cc]
            # column insertion bumps the smallest entry >= x, so undo with the largest <= x
            idx = max(i for i, y in enumerate(prev) if y <= x)
            prev[idx], x = x, prev[idx]
        word.append(x)
    word.reverse()
    return word

"""Baker's embedding of type C_n crystals into type A_{2n-1} crystals.

Type A letters are ``1..2n``; the symplectic letter ``x`` becomes ``key(x, n)``, so
``k`` stays ``k`` and ``-k`` becomes ``2n + 1 - k``.  Node ``i`` of ``A_{2n-1}`` is
paired with node ``2n - i``; node ``n`` is fixed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core_tableaux import (
    Tableau,
    TableauError,
    conjugate,
    from_cells,
    is_admissible,
    key,
    letter_from_key,
    normalize_shape,
    sort_column,
    split_column,
)
from .crystal import e as e_op
from .crystal import eps_phi
from .crystal import f as f_op
from .type_a_ops import bender_knuth_A, dual_bk_A, partial_xi_A, partial_xi_A_union
from .words_plactic import column_insert_A, reverse_column_insert_A


class VirtualizationError(ValueError):
    pass


def to_A(x: int, n: int) -> int:
    return key(x, n)


def from_A(a: int, n: int) -> int:
    return letter_from_key(a, n)


@dataclass(frozen=True)
class VirtualShape:
    lam: tuple[int, ...]
    lam_A: tuple[int, ...]
    n: int


def column_heights(shape: Sequence[int]) -> list[int]:
    """Column heights of ``shape``, left to right."""
    return list(conjugate(normalize_shape(shape)))


def lambda_A(shape: Sequence[int], n: int) -> VirtualShape:
    """``lambda^A``: each column of height ``i`` contributes ``omega_i + omega_{2n-i}``."""
    lam = normalize_shape(shape)
    if len(lam) > n:
        raise VirtualizationError(f"shape {lam} has more than {n} parts")
    heights = []
    for i in column_heights(lam):
        heights += [i, 2 * n - i]
    cols = sorted(heights, reverse=True)
    return VirtualShape(lam, conjugate(cols) if cols else (), n)


def lambda_from_A(shape_A: Sequence[int], n: int) -> tuple[int, ...]:
    """Recover ``lambda`` from ``lambda^A`` (columns shorter than ``n``, plus half of those equal to ``n``)."""
    hs = column_heights(shape_A)
    small = [h for h in hs if h < n]
    big = sorted((2 * n - h for h in hs if h > n), reverse=True)
    mid = [h for h in hs if h == n]
    if sorted(small, reverse=True) != big or len(mid) % 2:
        raise VirtualizationError(f"shape {tuple(shape_A)} is not of the form lambda^A")
    cols = sorted(small + [n] * (len(mid) // 2), reverse=True)
    return conjugate(cols) if cols else ()


# ---------------------------------------------------------------------------
# The virtual column split


def psi(col: Sequence[int], n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Baker's virtual split of an admissible column of height ``i``.

    Returns ``(left, right)`` with heights ``2n - i`` and ``i``: ``right`` is the right
    split column; ``left`` is the left split column completed by every pair ``x, -x``
    with neither letter in it.
    """
    col = tuple(col)
    if not is_admissible(col, n) or len(col) > n:
        raise VirtualizationError(f"column {col} is not admissible")
    lc, rc = split_column(col, n)
    absent = [x for x in range(1, n + 1) if x not in lc and -x not in lc]
    left = sort_column(list(lc) + absent + [-x for x in absent], n)
    return left, tuple(rc)


def psi_inv(left: Sequence[int], right: Sequence[int], n: int) -> tuple[int, ...]:
    left, right = tuple(left), tuple(right)
    lc = tuple(x for x in left if -x not in left)
    col = sort_column([x for x in right if x > 0] + [x for x in lc if x < 0], n)
    try:
        ok = is_admissible(col, n) and len(col) <= n and psi(col, n) == (left, right)
    except (VirtualizationError, TableauError):
        ok = False
    if not ok:
        raise VirtualizationError(f"({left}, {right}) is not a virtual split")
    return col


def psi_word(col: Sequence[int], n: int) -> list[int]:
    """``w(psi(C))`` in type A letters: right column then left column, each top to bottom."""
    left, right = psi(col, n)
    return [to_A(x, n) for x in right] + [to_A(x, n) for x in left]


def psi_tableau(col: Sequence[int], n: int) -> Tableau:
    left, right = psi(col, n)
    cells = {(r, 0): to_A(x, n) for r, x in enumerate(left)}
    cells.update({(r, 1): to_A(x, n) for r, x in enumerate(right)})
    return from_cells(cells, 2 * n, "A")


# ---------------------------------------------------------------------------
# E and its inverse


def virtual_word(t: Tableau) -> list[int]:
    """``w_T``: the virtual words of the columns, rightmost column first."""
    if t.kind != "C" or t.inner:
        raise VirtualizationError("embedding needs a straight type C tableau")
    word: list[int] = []
    for col in reversed(t.columns()):
        word += psi_word(col, t.n)
    return word


def embed_E_with_Q(t: Tableau) -> tuple[Tableau, Tableau]:
    n = t.n
    if not t.rows:
        return Tableau.empty(2 * n, "A"), Tableau.empty(1, "A")
    return column_insert_A(None, virtual_word(t), 2 * n)


def embed_E(t: Tableau) -> Tableau:
    return embed_E_with_Q(t)[0]


def build_Q_lambda(shape: Sequence[int], n: int) -> Tableau:
    """Recording tableau of ``E``: add ``omega_i`` then ``omega_{2n-i}`` per column, rightmost first."""
    lam = normalize_shape(shape)
    if len(lam) > n:
        raise VirtualizationError(f"shape {lam} has more than {n} parts")
    rows: list[int] = []
    cells = {}
    label = 0
    for i in reversed(column_heights(lam)):
        for h in (i, 2 * n - i):
            for r in range(h):
                if r == len(rows):
                    rows.append(0)
                label += 1
                cells[(r, rows[r])] = label
                rows[r] += 1
    return from_cells(cells, max(label, 1), "A")


def invert_E(p: Tableau, shape: Sequence[int] | None = None, n: int | None = None) -> Tableau:
    """``E^{-1}``: reverse column insertion against ``Q_lambda`` then ``psi^{-1}`` per column pair."""
    if p.kind != "A":
        raise VirtualizationError("invert_E needs a type A tableau")
    n = p.n // 2 if n is None else n
    if p.n != 2 * n:
        raise VirtualizationError(f"alphabet [{p.n}] is not [2n] for n = {n}")
    lam = lambda_from_A(p.outer, n) if shape is None else normalize_shape(shape)
    if not p.rows:
        return Tableau.empty(n, "C")
    if lambda_A(lam, n).lam_A != p.outer:
        raise VirtualizationError(f"shape {p.outer} is not lambda^A for {lam}")
    word = reverse_column_insert_A(p, build_Q_lambda(lam, n))
    heights = column_heights(lam)
    cols: list[tuple[int, ...]] = []
    pos = 0
    for k, i in enumerate(reversed(heights)):
        right = [from_A(a, n) for a in word[pos:pos + i]]
        left = [from_A(a, n) for a in word[pos + i:pos + 2 * n]]
        pos += 2 * n
        try:
            cols.append(psi_inv(left, right, n))
        except VirtualizationError as ex:
            raise VirtualizationError(
                f"not in the image of E: column pair {k + 1} (column {len(heights) - k} of lambda): {ex}"
            ) from None
    cols.reverse()
    cells = {(r, c): x for c, col in enumerate(cols) for r, x in enumerate(col)}
    out = from_cells(cells, n, "C")
    out.validate()
    return out


# ---------------------------------------------------------------------------
# Virtual crystal operators


def _pair_nodes(i: int, n: int) -> list[int]:
    if not 1 <= i <= n:
        raise VirtualizationError(f"color {i} outside [1, {n}]")
    return [n, n] if i == n else [i, 2 * n - i]


def virtual_f(p: Tableau, i: int) -> Tableau | None:
    """``f^E_i = f_i f_{2n-i}`` for ``i < n`` and ``f^E_n = f_n^2``."""
    for k in _pair_nodes(i, p.n // 2):
        p = f_op(p, k)
        if p is None:
            return None
    return p


def virtual_e(p: Tableau, i: int) -> Tableau | None:
    for k in _pair_nodes(i, p.n // 2):
        p = e_op(p, k)
        if p is None:
            return None
    return p


def virtual_eps_phi(p: Tableau, i: int) -> tuple[int, int]:
    """Symplectic ``(eps_i, phi_i)`` read off the image: node ``n`` halves."""
    n = p.n // 2
    eps, phi = eps_phi(p, i)
    if i == n:
        return eps // 2, phi // 2
    return eps, phi


# ---------------------------------------------------------------------------
# Virtual involutions


def virtual_intervals(p_: int, q_: int, n: int) -> list[tuple[int, int]]:
    """Type A intervals realizing ``s_[p,q]``: ``[p,q]`` and ``[2n-q,2n-p]``, or ``[p,2n-p]`` when ``q = n``."""
    if not 1 <= p_ <= q_ <= n:
        raise VirtualizationError(f"interval [{p_},{q_}] outside [1, {n}]")
    if q_ == n:
        return [(p_, 2 * n - p_)]
    return [(p_, q_), (2 * n - q_, 2 * n - p_)]


def virtual_partial_xi(p: Tableau, p_: int, q_: int) -> Tableau:
    n = p.n // 2
    ivs = virtual_intervals(p_, q_, n)
    if len(ivs) == 1:
        return partial_xi_A(p, *ivs[0])
    return partial_xi_A_union(p, ivs)


def virtual_partial_xi_C(t: Tableau, p_: int, q_: int) -> Tableau:
    """``E^{-1} xi^A E`` on a straight KN tableau."""
    lam = t.outer
    out = virtual_partial_xi(embed_E(t), p_, q_)
    try:
        return invert_E(out, lam, t.n)
    except VirtualizationError as ex:
        raise VirtualizationError(f"virtual xi_[{p_},{q_}] left the image of E: {ex}") from None


def check_diagram(t: Tableau, interval: Sequence[int]) -> bool:
    """``E(xi_J(t)) == xi^E_J(E(t))``, with ``xi_J`` from the crystal-path oracle."""
    from .crystal import xi_oracle

    p_, q_ = interval
    lhs = embed_E(xi_oracle(t, list(range(p_, q_ + 1))))
    return lhs == virtual_partial_xi(embed_E(t), p_, q_)


def virtual_bk(p: Tableau, i: int) -> Tableau:
    """Virtual symplectic Bender-Knuth involutions on ``A_{2n-1}`` tableaux (``1 <= i <= 2n-1``)."""
    n = p.n // 2
    if not 1 <= i <= 2 * n - 1:
        raise VirtualizationError(f"t_{i} outside [1, {2 * n - 1}]")
    if i < n:
        return bender_knuth_A(dual_bk_A(p, i, 2 * n), i)
    k = i - n + 1
    for a, b in ((n - k + 2, n + k - 2), (n - k + 1, n + k - 1)):
        if a <= b:
            p = partial_xi_A(p, a, b)
    return p


def virtual_bk_C(t: Tableau, i: int) -> Tableau:
    return invert_E(virtual_bk(embed_E(t), i), t.outer, t.n)

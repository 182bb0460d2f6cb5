"""Property-based round trips on random KN tableaux."""

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from kncactus.core_tableaux import (
    Tableau,
    coadmissible_inverse,
    coadmissible_of,
    is_kn_tableau,
    parse,
    partitions_upto,
    render,
)
from kncactus.crystal import e, f
from kncactus.sjdt import anti_rectify, rectify_with_journal
from kncactus.symplectic_involutions import reversal_C, reversal_C_direct
from kncactus.virtualization import embed_E, invert_E
from kncactus.words_plactic import column_insert_A, reverse_column_insert_A

SHAPES = {n: [lam for lam in partitions_upto(6, n) if lam] for n in (2, 3, 4)}


@st.composite
def kn_tableaux(draw):
    n = draw(st.sampled_from((2, 3, 4)))
    t = Tableau.yamanouchi(draw(st.sampled_from(SHAPES[n])), n)
    for down, i in draw(st.lists(st.tuples(st.booleans(), st.integers(1, n)), max_size=30)):
        u = (f if down else e)(t, i)
        t = t if u is None else u
    return t


@st.composite
def skew_kn(draw):
    """Push the top rows of a random KN tableau right; keep the result when it is still KN."""
    t = draw(kn_tableaux())
    k = draw(st.integers(1, 2))
    m = draw(st.integers(1, len(t.rows)))
    rows = [["."] * (k if r < m else 0) + [str(x) for x in row] for r, row in enumerate(t.rows)]
    out = parse("/".join(",".join(row) for row in rows), t.n, check=False)
    assume(is_kn_tableau(out))
    return out


@settings(max_examples=1000, deadline=None)
@given(kn_tableaux())
def test_parse_render(t):
    assert parse(render(t), t.n) == t


@settings(max_examples=1000, deadline=None)
@given(kn_tableaux())
def test_coadmissible_map(t):
    for col in t.columns():
        assert coadmissible_inverse(coadmissible_of(col, t.n), t.n) == col


@settings(max_examples=1000, deadline=None)
@given(kn_tableaux())
def test_virtual_embedding(t):
    assert invert_E(embed_E(t), t.outer, t.n) == t


@settings(max_examples=1000, deadline=None)
@given(st.lists(st.integers(1, 6), max_size=12))
def test_column_insertion(word):
    p, q = column_insert_A(None, word, 6)
    assert reverse_column_insert_A(p, q) == word


@settings(max_examples=300, deadline=None)
@given(skew_kn())
def test_rectify_then_anti_rectify(t):
    r, journal = rectify_with_journal(t)
    assert anti_rectify(r, journal) == t


@settings(max_examples=300, deadline=None)
@given(skew_kn())
def test_switching_matches_replay(t):
    assert reversal_C(t) == reversal_C_direct(t)

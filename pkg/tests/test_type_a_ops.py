from kncactus.core_tableaux import enumerate_ssyt, parse, render
from kncactus.type_a_ops import (
    bender_knuth_A,
    bk_word,
    dual_bk_A,
    evacuation_A,
    partial_xi_A,
    promotion_q,
    q_word,
    reversal_A,
)


def A(text, m):
    return parse(text, m, kind="A")


def test_bender_knuth_swaps_free_letters():
    assert render(bender_knuth_A(A("1,1,2", 2), 1)) == "1,2,2"
    # the 1 above a 2 is paired, so the free letters are balanced
    assert render(bender_knuth_A(A("1,1,2/2", 2), 1)) == "1,1,2/2"


def test_bender_knuth_is_an_involution():
    for t in enumerate_ssyt((3, 1), 3):
        for i in (1, 2):
            assert bender_knuth_A(bender_knuth_A(t, i), i) == t


def test_q_word_shape():
    assert q_word(3) == [1, 2, 1, 3, 2, 1]


def test_evacuation_matches_promotion_word():
    for m in (3, 4):
        for t in enumerate_ssyt((2, 1), m):
            assert evacuation_A(t, m) == promotion_q(t, m - 1)
            assert evacuation_A(evacuation_A(t, m), m) == t


def test_partial_xi_is_evacuation_on_the_band():
    for t in enumerate_ssyt((2, 2), 3):
        assert partial_xi_A(t, 1, 2) == evacuation_A(t, 3)
        assert partial_xi_A(t, 1, 1) == bender_knuth_A(t, 1)


def test_dual_bk_is_an_involution():
    for t in enumerate_ssyt((2, 1), 4):
        assert dual_bk_A(dual_bk_A(t, 1, 4), 1, 4) == t


def test_reversal_of_skew_is_an_involution():
    t = A(".,1,2/1,3", 3)
    r = reversal_A(t, 3)
    assert r.inner == t.inner
    assert reversal_A(r, 3) == t


def test_bk_word_applies_rightmost_first():
    t = A("1,2/3", 3)
    assert bk_word(t, [2, 1]) == bender_knuth_A(bender_knuth_A(t, 1), 2)

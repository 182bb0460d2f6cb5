from kncactus.core_tableaux import enumerate_kn, is_kn_tableau, parse, render
from kncactus.crystal import f
from kncactus.sjdt import (
    Grid,
    anti_rectify,
    complete_slide,
    dilation_candidates,
    rectify,
    rectify_with_journal,
    slide_trace,
)


def test_full_reversal_first_slide_contracts():
    t = parse(".,2,-2,-1/-2,-2,-1/-1", 3)
    chain = slide_trace(t, (0, 0))
    assert render(chain[-1]) == ".,-2,-1,-1/-2,-1"
    assert render(rectify(t)) == "-2,-2,-1,-1/-1"


def test_rectification_is_kn_and_order_free():
    for t in enumerate_kn((3, 2), 2, (1,)) + enumerate_kn((2, 2, 1), 3, (1, 1)):
        r = rectify(t)
        assert is_kn_tableau(r) and not r.inner
        assert rectify(t, choose=lambda g: min(g.inner_corners())) == r


def test_anti_rectify_inverts_rectify():
    for t in enumerate_kn((3, 2, 1), 2, (2,))[:200]:
        r, journal = rectify_with_journal(t)
        assert anti_rectify(r, journal) == t


def test_slides_commute_with_lowering_operators():
    for t in enumerate_kn((3, 1), 2, (1,)):
        for i in (1, 2):
            a, b = f(t, i), f(complete_slide(t, (0, 0)), i)
            assert (None if a is None else complete_slide(a, (0, 0))) == b


def test_dilation_is_not_unique_for_two_bar_two():
    assert len(dilation_candidates((2, -2), 3, 4)) >= 2


def test_grid_corners():
    g = Grid.from_tableau(parse(".,.,1/.,2/1", 2))
    assert sorted(g.inner_corners()) == [(0, 1), (1, 0)]

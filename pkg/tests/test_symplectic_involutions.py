import pytest

from kncactus.core_tableaux import enumerate_kn, parse, render, weight
from kncactus.crystal import xi_oracle
from kncactus.symplectic_involutions import (
    SwitchingError,
    colorful_switching,
    evacuation_C,
    partial_xi_C,
    reflection_xi_i,
    reversal_C,
    reversal_C_direct,
    symplectic_bk,
)


def test_evacuation_is_the_crystal_reversal_on_straight_shapes():
    for t in enumerate_kn((2, 1), 2) + enumerate_kn((2, 1), 3):
        assert evacuation_C(t) == xi_oracle(t, list(range(1, t.n + 1)))


def test_switching_agrees_with_journal_replay():
    for t in enumerate_kn((3, 2), 2, (1,)) + enumerate_kn((2, 2, 1), 3, (1,))[:300]:
        assert reversal_C(t) == reversal_C_direct(t)


def test_full_reversal_example():
    t = parse(".,2,-2,-1/-2,-2,-1/-1", 3)
    assert render(reversal_C(t)) == ".,1,1,2/1,2,2/-2"


def test_switching_keeps_a_trace():
    res = colorful_switching(parse(".,2,-2,-1/-2,-2,-1/-1", 3), 1)
    captions = [c for c, _ in res.state.trace]
    assert captions[0] == "start"
    assert "evacuated" in captions
    assert render(res.rect) == "-2,-2,-1,-1/-1"
    assert render(res.evac) == "1,1,1,2/2"


@pytest.mark.parametrize("interval", [(1, 2), (2, 3), (1, 3), (2, 2), (3, 3)])
def test_partial_xi_matches_oracle(interval):
    p, q = interval
    for t in enumerate_kn((2, 1), 3):
        assert partial_xi_C(t, interval) == xi_oracle(t, list(range(p, q + 1)))


def test_reflection_reverses_the_string():
    t = parse("1", 2)
    assert reflection_xi_i(t, 1) == parse("2", 2)
    assert weight(reflection_xi_i(parse("2,-2", 2), 2)) == (0, 0)


def test_bk_involutions():
    n = 2
    for t in enumerate_kn((2, 1), n):
        for i in range(1, 2 * n):
            assert symplectic_bk(symplectic_bk(t, i), i) == t


def test_switching_rejects_bad_j():
    with pytest.raises(SwitchingError):
        colorful_switching(parse("1", 2), 3)

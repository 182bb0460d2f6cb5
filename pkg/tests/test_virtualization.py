import pytest

from kncactus.core_tableaux import enumerate_kn, enumerate_ssyt
from kncactus.crystal import e, f
from kncactus.virtualization import (
    VirtualizationError,
    build_Q_lambda,
    check_diagram,
    embed_E,
    embed_E_with_Q,
    invert_E,
    lambda_A,
    lambda_from_A,
    psi,
    psi_inv,
    virtual_e,
    virtual_f,
)


def test_psi_completes_the_left_column():
    assert psi((2, -2), 3) == ((1, 3, -3, -2), (2, -1))
    assert psi_inv((1, 3, -3, -2), (2, -1), 3) == (2, -2)
    with pytest.raises(VirtualizationError):
        psi_inv((1, 2, -2, -1), (2, -1), 3)


def test_lambda_A_round_trip():
    for lam in [(1,), (2, 1), (2, 2), (3, 1, 1)]:
        assert lambda_from_A(lambda_A(lam, 3).lam_A, 3) == lam
    assert lambda_A((1,), 2).lam_A == (2, 1, 1)


def test_recording_tableau_is_fixed():
    for lam in [(1,), (2, 1), (2, 2)]:
        q = build_Q_lambda(lam, 3)
        for t in enumerate_kn(lam, 3):
            assert embed_E_with_Q(t)[1] == q


def test_E_is_injective_and_invertible():
    ts = enumerate_kn((2, 1), 3)
    images = [embed_E(t) for t in ts]
    assert len(set(images)) == len(ts)
    assert all(invert_E(p, (2, 1), 3) == t for p, t in zip(images, ts))


def test_E_intertwines_crystal_operators():
    for t in enumerate_kn((2, 1), 2) + enumerate_kn((1, 1), 3):
        for i in range(1, t.n + 1):
            for op, vop in ((f, virtual_f), (e, virtual_e)):
                u = op(t, i)
                assert (None if u is None else embed_E(u)) == vop(embed_E(t), i)


def test_virtual_xi_squares_commute():
    for t in enumerate_kn((2, 1), 3):
        for iv in ((1, 1), (1, 2), (2, 3), (1, 3)):
            assert check_diagram(t, iv)


def test_invert_rejects_non_image():
    images = {embed_E(t) for t in enumerate_kn((1,), 2)}
    shape = lambda_A((1,), 2).lam_A
    outside = [p for p in enumerate_ssyt(shape, 4) if p not in images]
    assert outside
    for p in outside:
        with pytest.raises(VirtualizationError, match="not in the image"):
            invert_E(p, (1,), 2)

from collections import Counter

from kncactus.core_tableaux import Tableau, enumerate_kn, parse, render, weight
from kncactus.crystal import (
    branch,
    character,
    crystal_of_shape,
    e,
    eps_phi,
    f,
    generate_crystal,
    highest_in,
    is_symmetric_character,
    lowest_in,
    theta,
    xi_oracle,
)


def test_signature_bracketing():
    assert f(parse("1", 2), 1) == parse("2", 2)
    assert f(parse("2", 2), 2) == parse("-2", 2)
    assert f(parse("-2", 2), 1) == parse("-1", 2)
    assert f(parse("-1", 2), 1) is None


def test_figure_vertex_count_and_components():
    g = crystal_of_shape((2, 1), 2)
    assert len(g) == 16
    assert len(g.sources_sinks()) == 1
    assert set(g.vertices) == set(enumerate_kn((2, 1), 2))


def test_e_inverts_f_and_string_lengths():
    for t in enumerate_kn((2, 1), 3):
        for i in (1, 2, 3):
            u = f(t, i)
            if u is not None:
                assert e(u, i) == t
                assert eps_phi(u, i) == (eps_phi(t, i)[0] + 1, eps_phi(t, i)[1] - 1)


def test_branching_components_have_unique_extremes():
    g = crystal_of_shape((2, 1), 2)
    for J in ((1,), (2,)):
        for srcs, sinks in branch(g, J).sources_sinks():
            assert len(srcs) == 1 and len(sinks) == 1


def test_levi_branch_component_counts():
    g = crystal_of_shape((2, 1), 2)
    assert len(branch(g, (2,)).sources_sinks()) == 8


def test_character_is_weyl_symmetric():
    ch = character(crystal_of_shape((2, 1), 2))
    assert sum(ch.values()) == 16
    assert is_symmetric_character(ch, 2)


def test_theta_and_xi_oracle_swap_extremes():
    assert [theta([1, 2, 3], 3)(i) for i in (1, 2, 3)] == [1, 2, 3]
    assert [theta([1, 2], 3)(i) for i in (1, 2)] == [2, 1]
    top = Tableau.yamanouchi((2, 1), 2)
    bottom, _ = lowest_in(top, [1, 2])
    assert xi_oracle(top, [1, 2]) == bottom
    assert highest_in(bottom, [1, 2])[0] == top


def test_xi_oracle_is_an_involution_reversing_weight():
    for t in enumerate_kn((2, 1), 2):
        x = xi_oracle(t, [1, 2])
        assert xi_oracle(x, [1, 2]) == t
        assert weight(x) == tuple(-a for a in weight(t))


def test_generate_from_non_highest_seed_is_partial():
    g = generate_crystal(parse("1,2/-2", 2))
    assert not g.complete
    assert render(g.vertices[0]) == "1,2/-2"


def test_dot_and_json_export():
    g = crystal_of_shape((1,), 2)
    assert g.to_dot().count("->") == 3
    data = g.to_json()
    assert data["vertices"] == ["1", "2", "-2", "-1"]
    assert Counter(tuple(w) for w in data["weights"]) == character(g)

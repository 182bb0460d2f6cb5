import pytest

from kncactus.core_tableaux import (
    Tableau,
    TableauError,
    admissible_by_T_set,
    admissible_columns,
    coadmissible_inverse,
    coadmissible_of,
    conjugate,
    enumerate_kn,
    enumerate_ssyt,
    from_json,
    is_admissible,
    is_kn_tableau,
    key,
    kn_violation,
    letter_from_key,
    parse,
    render,
    split_column,
    weight,
)


def test_letter_order_and_keys():
    n = 3
    letters = [1, 2, 3, -3, -2, -1]
    assert [key(x, n) for x in letters] == [1, 2, 3, 4, 5, 6]
    assert all(letter_from_key(key(x, n), n) == x for x in letters)


def test_parse_render_canonical_format():
    text = ".,2,-2,-1/-2,-2,-1/-1"
    t = parse(text, 3)
    assert render(t) == text
    assert t.inner == (1,)
    assert t.outer == (4, 3, 1)
    assert from_json(t.to_json()) == t


def test_parse_errors_carry_location():
    with pytest.raises(TableauError, match="row 1, col 2"):
        parse("1,x", 2)
    with pytest.raises(TableauError, match="letter 0"):
        parse("1/0", 2)
    with pytest.raises(TableauError):
        parse("3", 2)


def test_admissibility_small_columns():
    assert is_admissible((2, -2), 2)
    assert not is_admissible((1, -1), 2)
    assert is_admissible((1, 2), 2)
    assert not is_admissible((1, 2, -2), 3)
    assert is_admissible((1, 3, -3), 3)


def test_counting_and_set_definitions_agree():
    for n in (2, 3, 4):
        for h in range(1, n + 1):
            for col in admissible_columns(n, h):
                assert admissible_by_T_set(col, n)


def test_split_of_two_bar_two():
    assert split_column((2, -2), 2) == ((1, -2), (2, -1))


def test_non_kn_two_columns():
    t = parse("2,2/-2,-2", 2, check=False)
    assert not is_kn_tableau(t)
    assert kn_violation(t).startswith("split not semi-standard at row 1")


def test_non_admissible_column_message():
    t = parse("1/-1", 2, check=False)
    assert "not admissible" in kn_violation(t)


def test_phi_is_a_bijection():
    for n in (2, 3):
        for h in range(1, n + 1):
            cols = admissible_columns(n, h)
            images = {coadmissible_of(c, n) for c in cols}
            assert len(images) == len(cols)
            for c in cols:
                assert coadmissible_inverse(coadmissible_of(c, n), n) == c


@pytest.mark.parametrize(
    "shape,n,size",
    [((1,), 2, 4), ((1, 1), 2, 5), ((2,), 2, 10), ((2, 1), 2, 16), ((1,), 3, 6), ((1, 1), 3, 14), ((2,), 3, 21)],
)
def test_kn_counts_match_dimensions(shape, n, size):
    assert len(enumerate_kn(shape, n)) == size


def test_ssyt_count():
    assert len(enumerate_ssyt((2, 1), 3)) == 8


def test_weight_and_yamanouchi():
    t = Tableau.yamanouchi((3, 1), 2)
    assert render(t) == "1,1,1/2"
    assert weight(t) == (3, 1)
    assert weight(parse("1,-1/-2", 2)) == (0, -1)


def test_conjugate():
    assert conjugate((4, 3, 1)) == (3, 2, 2, 1)

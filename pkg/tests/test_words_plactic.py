import random

import pytest

from kncactus.core_tableaux import TableauError, enumerate_kn, parse, render
from kncactus.words_plactic import (
    column_insert_A,
    knuth_step,
    parse_word,
    plactic_equivalent,
    plactic_normal_form,
    r3_contract_full,
    reading_word,
    render_word,
    reverse_column_insert_A,
)


def test_reading_word_columns_right_to_left():
    t = parse("1,2/-2", 2)
    assert reading_word(t) == [2, 1, -2]


def test_parse_word_errors():
    assert parse_word("2, -1 -2") == [2, -1, -2]
    assert render_word([2, -1]) == "2 -1"
    with pytest.raises(TableauError, match="position 2"):
        parse_word("1 y")


def test_normal_form_of_a_tableau_word_is_the_tableau():
    for t in enumerate_kn((2, 1), 2) + enumerate_kn((2, 2), 3)[:50]:
        assert plactic_normal_form(reading_word(t), t.n) == t


def test_r3_contraction_removes_a_pair():
    col, removed = r3_contract_full((1, -1), 2)
    assert col == ()
    assert removed == [1]
    col, removed = r3_contract_full((2, -2), 2)
    assert col == (2, -2) and removed == []


def test_knuth_steps_preserve_the_class():
    rng = random.Random(5)
    for _ in range(200):
        w = [rng.choice([1, 2, -2, -1]) for _ in range(5)]
        for pos in range(len(w) - 2):
            for rule in ("K1", "K2"):
                try:
                    v = knuth_step(w, pos, rule, 2)
                except ValueError:
                    continue
                assert plactic_equivalent(w, v, 2)


def test_column_insertion_small():
    p, q = column_insert_A(None, [2, 1, 3], 3)
    assert render(p) == "1,2/3"
    assert render(q) == "1,2/3"
    assert reverse_column_insert_A(p, q) == [2, 1, 3]

import copy

import pytest

from kncactus import worked_examples as we


@pytest.mark.parametrize("name", we.FIXTURES)
def test_fixture_passes(name):
    rep = we.run_fixture(name)
    assert rep.passed, rep.text()


def test_misprints_are_confirmed_not_ignored():
    rep = we.run_fixture("virtualization-n6")
    notes = [x for c in rep.checks for x in c.notes]
    assert notes
    assert all(x.endswith(": confirmed") for x in notes)


def test_normalize_drops_padding_and_maps_labels():
    assert we.normalize("*,1,.") == ".,1"
    assert we.normalize("1,2/./") == "1,2"
    assert we.normalize(".,r,g/r'", {"r": "r1", "r'": "r1'", "g": "g1"}) == ".,r1,g1/r1'"


def test_tampered_expectation_fails(monkeypatch):
    fx = copy.deepcopy(we.load_fixture("full-reversal-c3"))
    for check in fx["checks"]:
        if check["id"] == "result":
            check["expected"] = ".,1,1,2/1,2,2/-1"
    monkeypatch.setattr(we, "load_fixture", lambda name: fx)
    rep = we.run_fixture("full-reversal-c3")
    assert not rep.passed
    bad = [c for c in rep.checks if not c.ok]
    assert [c.id for c in bad] == ["result"]
    assert "expected" in bad[0].detail


def test_tampered_misprint_note_fails(monkeypatch):
    fx = copy.deepcopy(we.load_fixture("virtualization-n6"))
    for check in fx["checks"]:
        if check["id"] == "E":
            check["expected"]["reason"] = "content"
    monkeypatch.setattr(we, "load_fixture", lambda name: fx)
    assert not we.run_fixture("virtualization-n6").passed


def test_unknown_fixture():
    with pytest.raises(we.FixtureError):
        we.load_fixture("nope")

from kncactus import cactus_verify as cv
from kncactus.core_tableaux import parse


def test_suite_names():
    assert {"jsp", "bkc", "vjsp", "probes", "coplactic"} <= set(cv.SUITES)


def test_cactus_relations_hold_on_c2():
    rep = cv.run_suite("jsp", 2, 4)
    assert rep.passed and rep.checked > 0
    assert rep.text().startswith("PASS J_sp")


def test_bk_relations_hold_on_c2():
    assert cv.run_suite("bkc", 2, 3).passed
    assert cv.run_suite("bka", 2, 3).passed


def test_probes_find_witnesses():
    rep = cv.verify(cv.non_relation_probes(3), cv.kn_universe(3, 3))
    assert not rep.expect_hold
    assert rep.failures
    assert all(w.lhs != w.rhs for w in rep.failures)


def test_a_false_relation_is_caught():
    bogus = cv.RelationSuite("bogus", 2, [cv.Relation("s_[1,2] = s_[1,1]", (cv.s_C(1, 2),), (cv.s_C(1, 1),))])
    rep = cv.verify(bogus, cv.kn_universe(2, 2))
    assert not rep.passed
    assert rep.to_json()["witnesses"][0]["relation"] == "s_[1,2] = s_[1,1]"


def test_act_applies_rightmost_first():
    t = parse("1,2/-2", 2)
    w = (cv.t_C(1), cv.t_C(2))
    assert cv.act(w, t) == cv.apply_generator(cv.t_C(1), cv.apply_generator(cv.t_C(2), t))


def test_property_suites_pass_on_small_cases():
    for name in ("crystal", "virtual", "switching", "character"):
        assert cv.run_suite(name, 2, 3).passed, name

import pytest

import tclique


def c3():
    return tclique.Tournament([[0, 1, 0], [0, 0, 1], [1, 0, 0]])


def test_small_values():
    assert tclique.omega(c3())["value"] == 2
    assert tclique.chi(c3())["value"] == 2
    assert tclique.omega(tclique.transitive(6))["value"] == 1


def test_families():
    d3, labels = tclique.build("D", 3)
    assert len(d3) == 7
    assert len(labels) == 7
    a3, _ = tclique.build("A", 3)
    assert tclique.contains(a3, d3) is None
    assert tclique.chi(a3)["value"] == 3
    assert tclique.canonical_code(tclique.build("D", 2)[0]) == tclique.canonical_code(c3())


def test_trn_round_trip():
    t = tclique.random_tournament(9, 4)
    assert tclique.Tournament.parse(t.trn()) == t
    assert tclique.isomorphic(t.reversed().reversed(), t)


def test_errors():
    with pytest.raises(tclique.InvalidInput):
        tclique.Tournament([[0, 1], [1, 0]])
    d4, _ = tclique.build("D", 4)
    with pytest.raises(tclique.SizeLimitExceeded):
        tclique.omega(d4)
    assert tclique.omega(d4, exact_limit=15, budget=0)["status"] == "exceeded"


def test_bounds():
    assert tclique.f_main(1)["value"] == "0"
    f2 = tclique.f_main(2)
    assert f2["kind"] == "lower_bound"
    assert f2["consistent"]
    assert tclique.ramsey_upper(3, 3)["value"] == "6"


def test_lemma_suite():
    report = tclique.lemma_suite(seed=3, max_n=8, scale=0.1)
    assert report["ok"]
    assert report["schema"] == 1

import math

import pytest

import qbrauer


def test_suites_listed():
    names = qbrauer.suites()
    assert "yang_baxter" in names
    assert len(names) == 13


def test_yang_baxter_passes():
    for n in (2, 3, 4):
        reports = qbrauer.verify("yang_baxter", n, 3)
        assert reports
        assert not qbrauer.failures(reports)


def test_tau_only_from_four_legs():
    by_id = {r["relation_id"]: r for r in qbrauer.verify("def_2_3", 2, 4)}
    assert by_id["tau_relation"]["verdict"] == "pass"
    by_id = {r["relation_id"]: r for r in qbrauer.verify("def_2_3", 2, 3)}
    assert by_id["tau_relation"]["verdict"] == "skipped"


@pytest.mark.parametrize("l", [1, 2, 3, 4])
def test_diagram_counts(l):
    assert len(qbrauer.diagrams(l)) == math.prod(range(1, 2 * l, 2))


def test_compose_counts_loops():
    e = "l=2; T1-T2, B1-B2"
    assert qbrauer.compose(e, e) == (1, e)


def test_duality_values():
    d = qbrauer.duality(2, 3)
    assert (d["algebra"], d["commutant"]) == (3, 3)
    d = qbrauer.duality(2, 2, ["7/2"])
    assert (d["algebra"], d["commutant"]) == (3, 6)


def test_errors():
    with pytest.raises(qbrauer.GenericityError):
        qbrauer.duality(2, 2, ["1"])
    with pytest.raises(qbrauer.GuardError):
        qbrauer.operator("R", 9)
    with pytest.raises(ValueError):
        qbrauer.verify("nosuch", 2, 2)


def test_cli_exit_codes():
    code, out, _ = qbrauer.run(["verify", "--suite", "def_2_3", "--n", "2", "--l", "3"])
    assert code == 0
    assert "summary" in out
    code, _, _ = qbrauer.run(["verify", "--suite", "def_2_3", "--n", "2", "--l", "3", "--negative-control", "z-shift"])
    assert code == 1
    code, _, err = qbrauer.run(["dims", "--n", "2", "--l", "9"])
    assert code == 2
    assert err


def test_operator_text():
    assert qbrauer.operator("P", 2).strip()

import random

import pytest

from qtcatalan import chainfw as cf
from qtcatalan import verify


def test_report_structure():
    rep = verify.Report("demo")
    rep.check("ok", True)
    rep.check("soft", False, fatal=False)
    assert rep.passed
    rep.run("boom", lambda: 1 / 0)
    data = rep.to_json()
    assert not data["passed"]
    assert data["checks"][-1]["detail"].startswith("ZeroDivisionError")


@pytest.mark.parametrize("suite", verify.SUITES)
def test_suites_pass_small(suite):
    rep = verify.run_suite(suite, 12 if suite == "gm" else 2).to_json()
    assert rep["passed"], [c for c in rep["checks"] if not c["passed"]]
    assert rep["checks"]


def test_unknown_suite():
    with pytest.raises(ValueError):
        verify.run_suite("everything")


def test_gh_conjectural_checks_are_non_fatal():
    rep = verify.suite_gh(m_max=1).to_json()
    soft = [c for c in rep["checks"] if not c["fatal"]]
    assert {c["name"] for c in soft} == {f"AC = C n={n} m={m} (conjectural)" for n in (5, 6) for m in (1, 2)}


def test_random_generator_is_seeded():
    a = verify.random_chain_system(random.Random(3))
    b = verify.random_chain_system(random.Random(3))
    assert a[0].elements == b[0].elements and a[1] == b[1]
    s, h = a
    cf._check_h(s, h)

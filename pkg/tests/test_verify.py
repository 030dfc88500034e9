import pytest

from qsc.verify import DEFAULT_MAX_N, SUITES, SuiteResult, run_suite


def test_registry_is_consistent():
    assert set(SUITES) == {
        "inverse", "descents", "triple-agreement", "symmetry",
        "positivity", "dominance",
    }
    assert set(DEFAULT_MAX_N) == set(SUITES)
    assert all(n >= 1 for n in DEFAULT_MAX_N.values())


def test_run_suite_rejects_unknown_names():
    with pytest.raises(ValueError):
        run_suite("telepathy", 3)


def test_suite_result_mechanics():
    result = SuiteResult("demo", 3)
    assert result.passed and result.cases == 0
    result.fail("broken at (2,1)")
    assert not result.passed
    assert result.failures == ["broken at (2,1)"]


@pytest.mark.parametrize("name", sorted(SUITES))
def test_every_suite_passes_at_small_degree(name):
    result = run_suite(name, 4)
    assert result.suite == name
    assert result.max_n == 4
    assert result.cases > 0
    assert result.passed, result.failures[:3]

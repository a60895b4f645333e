import pytest

from app.cli.selftest import _MISSING, load_fixtures, lookup, run_fixtures
from app.errors import ConfigError


def test_lookup_paths():
    payload = {"result": {"cofactors": ["-1", "1"], "delta": 2}}
    assert lookup(payload, "result.delta") == 2
    assert lookup(payload, "result.cofactors[0]") == "-1"
    assert lookup(payload, "result.missing") is _MISSING
    assert lookup(payload, "result.cofactors[5]") is _MISSING


def test_fixture_names_are_unique():
    names = [f.name for f in load_fixtures()]
    assert len(names) == len(set(names))


def test_all_fixtures_pass():
    report = run_fixtures()
    failures = {o.name: o.mismatches for o in report.outcomes if not o.ok}
    assert report.failed == 0, failures
    assert report.passed == len(load_fixtures())


def test_sampled_run_is_deterministic():
    first = run_fixtures(sample=4, seed=11)
    second = run_fixtures(sample=4, seed=11)
    assert [o.name for o in first.outcomes] == [o.name for o in second.outcomes]
    assert len(first.outcomes) == 4


def test_missing_fixture_directory(tmp_path):
    with pytest.raises(ConfigError):
        load_fixtures(str(tmp_path))

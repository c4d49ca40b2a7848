"""Every bundled fixture must replay cleanly, check by check."""

import pytest

from apolar_kit import corpus

ALL_IDS = corpus.list_fixture_ids()


def test_expected_fixtures_present():
    assert ALL_IDS == ["ex-3.1", "ex-3.2", "ex-3.3", "ex-4.2",
                       "ex-4.4", "ex-5.1", "ex-5.2", "ex-5.3"]


@pytest.mark.parametrize("fixture_id", ALL_IDS)
def test_fixture_passes(fixture_id):
    report = corpus.run_fixture(fixture_id)
    failures = [f"{c.name}: {c.detail}" for c in report.checks if not c.passed]
    assert report.passed, "\n".join(failures)


def test_unknown_fixture_raises():
    with pytest.raises(corpus.UnknownFixtureError):
        corpus.run_fixture("ex-0.0")


def test_report_shape():
    report = corpus.run_fixture("ex-3.1")
    payload = report.to_json()
    assert payload["id"] == "ex-3.1"
    assert payload["passed"] is True
    assert all({"name", "passed"} <= set(c) for c in payload["checks"])

import pytest

from shtab import golden


@pytest.mark.parametrize("fixture", golden.FIXTURES, ids=lambda f: f.name)
def test_fixture(fixture):
    assert fixture.compute() == fixture.expected


def test_fixture_names_are_unique():
    names = [f.name for f in golden.FIXTURES]
    assert len(names) == len(set(names))


def test_replay_reports_first_difference(monkeypatch):
    broken = golden.Fixture("broken", lambda: "1 2\n. 3", "1 2\n. 4")
    monkeypatch.setattr(golden, "FIXTURES", [broken])
    (report,) = golden.replay()
    assert not report["passed"]
    assert report["detail"] == "line 2, token 2: got '3', expected '4'"


def test_replay_reports_exceptions(monkeypatch):
    def boom():
        raise ValueError("bad")

    monkeypatch.setattr(golden, "FIXTURES", [golden.Fixture("boom", boom, "")])
    assert golden.replay()[0]["detail"] == "ValueError: bad"

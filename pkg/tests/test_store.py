import pytest
from sqlalchemy.orm import Session

from matroidkit.store import (
    VerificationRun,
    ViolationRecord,
    build_history_report,
    get_engine,
    init_db,
    record_report,
    recent_runs,
)
from matroidkit.verify import VerificationReport


@pytest.fixture
def engine(tmp_path):
    engine = get_engine(f"sqlite:///{tmp_path / 'runs.db'}")
    init_db(engine)
    return engine


def _report(name, violations=0, parts=()):
    report = VerificationReport(name, {"n": 3})
    report.instances_tested = 10
    for i in range(violations):
        report.add_violation(f"3:{i}", {"e": i}, limit=100)
    report.parts = list(parts)
    return report


def test_empty_history(engine):
    assert build_history_report(engine) == "No verification runs recorded."


def test_record_report_with_violations(engine):
    run_id = record_report(engine, _report("axiom", violations=2))
    with Session(engine) as session:
        run = session.get(VerificationRun, run_id)
        assert run.check_name == "axiom"
        assert run.violation_count == 2
        assert not run.passed
        assert [v.instance_key for v in run.violations] == ["3:0", "3:1"]
        assert session.query(ViolationRecord).count() == 2


def test_parts_are_stored_as_runs(engine):
    top = _report("lemmas", parts=[_report("lemmas.a"), _report("lemmas.b", violations=1)])
    record_report(engine, top)
    names = {run.check_name for run in recent_runs(engine)}
    assert names == {"lemmas", "lemmas.a", "lemmas.b"}


def test_history_report_lists_newest_first(engine):
    record_report(engine, _report("axiom"))
    record_report(engine, _report("theorem1", violations=1))
    text = build_history_report(engine)
    lines = text.splitlines()
    assert lines[0] == "Verification History"
    assert lines[2].endswith("theorem1: instances=10, violations=1, FAILED")
    assert lines[3].endswith("axiom: instances=10, violations=0, passed")


def test_history_limit(engine):
    for _ in range(3):
        record_report(engine, _report("axiom"))
    assert len(recent_runs(engine, limit=2)) == 2

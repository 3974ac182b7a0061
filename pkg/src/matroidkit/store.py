"""Archive of verification runs (SQLAlchemy).

Only used when DATABASE_URL is set or ``--record`` names a database.
"""
from __future__ import annotations

import json
import logging
from datetime import datetime

from sqlalchemy import Boolean, Column, DateTime, Float, ForeignKey, Integer, String, Text, create_engine
from sqlalchemy.engine import Engine
from sqlalchemy.orm import Session, declarative_base, relationship

from .verify import VerificationReport

logger = logging.getLogger(__name__)

Base = declarative_base()


# -------------------------------------------------
# Models
# -------------------------------------------------
class VerificationRun(Base):
    __tablename__ = "verification_run"

    id = Column(Integer, primary_key=True)
    check_name = Column(String(80), nullable=False)
    parameters = Column(Text)
    instances_tested = Column(Integer, default=0)
    violation_count = Column(Integer, default=0)
    elapsed = Column(Float)
    passed = Column(Boolean, default=False)
    created_at = Column(DateTime, default=datetime.utcnow)
    violations = relationship("ViolationRecord", backref="run", lazy=True, cascade="all, delete-orphan")


class ViolationRecord(Base):
    __tablename__ = "violation_record"

    id = Column(Integer, primary_key=True)
    run_id = Column(Integer, ForeignKey("verification_run.id"), nullable=False)
    instance_key = Column(Text, nullable=False)
    witness = Column(Text)


# -------------------------------------------------
# Engine + writes
# -------------------------------------------------
def get_engine(url: str) -> Engine:
    return create_engine(url, future=True)


def init_db(engine: Engine) -> None:
    """Create the tables directly; the alembic migration does the same."""
    Base.metadata.create_all(engine)


def record_report(engine: Engine, report: VerificationReport) -> int:
    """Store a report and its parts; returns the id of the top-level run."""
    with Session(engine) as session:
        top = _add_run(session, report)
        for part in report.parts:
            _add_run(session, part)
        session.commit()
        logger.info("recorded run %d (%s)", top.id, report.check_name)
        return top.id


def _add_run(session: Session, report: VerificationReport) -> VerificationRun:
    run = VerificationRun(
        check_name=report.check_name,
        parameters=json.dumps(report.parameters, sort_keys=True, default=str),
        instances_tested=report.instances_tested,
        violation_count=report.violation_count,
        elapsed=report.elapsed,
        passed=report.passed,
    )
    for v in report.violations:
        run.violations.append(
            ViolationRecord(instance_key=v["instance"], witness=json.dumps(v["witness"], sort_keys=True, default=str))
        )
    session.add(run)
    session.flush()
    return run


# -------------------------------------------------
# Reads
# -------------------------------------------------
def recent_runs(engine: Engine, limit: int = 20) -> list[VerificationRun]:
    with Session(engine, expire_on_commit=False) as session:
        runs = (
            session.query(VerificationRun)
            .order_by(VerificationRun.created_at.desc(), VerificationRun.id.desc())
            .limit(limit)
            .all()
        )
        session.expunge_all()
        return runs


def build_history_report(engine: Engine, limit: int = 20) -> str:
    lines = []
    for run in recent_runs(engine, limit):
        status = "passed" if run.passed else "FAILED"
        stamp = run.created_at.strftime("%Y-%m-%d %H:%M:%S") if run.created_at else "-"
        lines.append(
            f"{stamp} {run.check_name}: instances={run.instances_tested}, "
            f"violations={run.violation_count}, {status}"
        )
    if not lines:
        return "No verification runs recorded."
    return "Verification History\n\n" + "\n".join(lines)

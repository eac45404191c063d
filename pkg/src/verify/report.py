"""Versioned report schema shared by the registry, the CLI and report merging."""
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

SCHEMA_VERSION = 1
TIGHTNESS = "Tightness"

Status = Literal["pass", "fail", "skipped-budget", "info"]


class Counterexample(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    observed: int
    expected: int


class VerificationReport(BaseModel):
    """
    Outcome of one check.

    A failing report always carries a counterexample and a passing one never
    does, except for Tightness checks: those pass by exhibiting the witness.
    """

    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    id: str
    status: Status
    checked_count: int = 0
    bound: Optional[int] = None
    first_counterexample: Optional[Counterexample] = None
    elapsed_ms: Optional[float] = None
    kind: str = ""
    legs: List[str] = Field(default_factory=list)
    detail: str = ""

    @model_validator(mode="after")
    def _counterexample_matches_status(self) -> "VerificationReport":
        has_witness = self.first_counterexample is not None
        if self.kind == TIGHTNESS:
            if self.status == "pass" and not has_witness:
                raise ValueError(f"{self.id}: a passing tightness check needs its witness")
        elif (self.status == "fail") != has_witness:
            raise ValueError(f"{self.id}: status {self.status!r} inconsistent with counterexample {self.first_counterexample}")
        return self

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def relabel(self, check_id: str, kind: Optional[str] = None) -> "VerificationReport":
        update = {"id": check_id}
        if kind is not None:
            update["kind"] = kind
        return self.model_copy(update=update)

    def to_dict(self) -> dict:
        return self.model_dump(mode="json", by_alias=True)


class Summary(BaseModel):
    total: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    info: int = 0

    @classmethod
    def of(cls, reports: List[VerificationReport]) -> "Summary":
        statuses = [r.status for r in reports]
        return cls(
            total=len(statuses),
            passed=statuses.count("pass"),
            failed=statuses.count("fail"),
            skipped=statuses.count("skipped-budget"),
            info=statuses.count("info"),
        )


class ReportDocument(BaseModel):
    """Top-level JSON document: a verify run (with profile) or a merged report (with summary)."""

    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    profile: Optional[str] = None
    summary: Optional[Summary] = None
    reports: List[VerificationReport] = Field(default_factory=list)

    def to_dict(self) -> dict:
        doc = {"schema": self.schema_version}
        if self.profile is not None:
            doc["profile"] = self.profile
        if self.summary is not None:
            doc["summary"] = self.summary.model_dump()
        doc["reports"] = [r.to_dict() for r in self.reports]
        return doc

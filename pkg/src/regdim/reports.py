"""
Report models for analyze and sweep runs.

Reports are pydantic models. JSON output is rendered with sorted keys, faces
as 1-based index lists and degrees as plain integer lists, so two runs with
the same flags produce identical bytes.
"""
import json
from typing import Any, Optional

from pydantic import BaseModel, Field

from regdim.algebra.monomials import MonomialIdeal
from regdim.filtration.stanley import FiltrationReport

SCHEMA_VERSION = "1"


class HilbertEntry(BaseModel):
    degree: list[int]
    dim: int


class StanleyEntry(BaseModel):
    face: list[int] = Field(..., description="1-based variables of the Stanley space")
    degree: list[int]
    count: int


class OracleMismatch(BaseModel):
    index: int
    degree: list[int]
    cech: int
    taylor: int


class OracleStatus(BaseModel):
    """Outcome of the Taylor cross-check; ``checked`` is False when it was not run."""
    checked: bool = False
    skipped_reason: Optional[str] = None
    degrees_compared: int = 0
    mismatches: list[OracleMismatch] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches


class IdealEcho(BaseModel):
    n: int
    generators: list[list[int]]
    text: str

    @classmethod
    def from_ideal(cls, ideal: MonomialIdeal) -> "IdealEcho":
        return cls(n=ideal.n, generators=[list(g) for g in ideal.gens], text=str(ideal))


class ModuleRecord(BaseModel):
    """Everything computed for one Ext^i(R/I, ω_R)."""
    index: int
    n: int
    box_lower: list[int]
    box_upper: list[int]
    hilbert: list[HilbertEntry] = Field(default_factory=list)
    stanley: list[StanleyEntry] = Field(default_factory=list, description="Decomposition in filtration order")
    filtration: FiltrationReport
    counting_mismatches: list[list[int]] = Field(default_factory=list)
    betti: list[tuple[int, list[int], int]] = Field(default_factory=list)
    minimal_generators_consistent: bool = True
    euler_consistent: bool = True
    reg_exact: Optional[int] = None
    reg_witness: Optional[tuple[int, list[int]]] = None
    reg_filtration_bound: Optional[int] = None
    dim: Optional[int] = None
    finite_length: bool = False
    determinedness_checks: int = 0
    pass_theorem: bool = True
    pass_corollary: bool = True
    pass_chain: bool = True
    pass_finite_length: bool = True
    oracle: OracleStatus = Field(default_factory=OracleStatus)

    @property
    def is_zero(self) -> bool:
        return not self.hilbert

    @property
    def equality(self) -> bool:
        return self.reg_exact is not None and self.reg_exact == self.dim

    @property
    def passed(self) -> bool:
        return not self.failures()

    def failures(self) -> list[str]:
        """Human readable descriptions of every failed check."""
        found = []
        if not self.pass_theorem:
            found.append(f"reg {self.reg_exact} > dim {self.dim}")
        if not self.pass_corollary:
            found.append(f"dim {self.dim} > n - i = {self.n - self.index}")
        if not self.pass_chain:
            found.append(
                f"chain reg {self.reg_exact} <= bound {self.reg_filtration_bound} <= dim {self.dim} "
                f"<= {self.n - self.index} fails"
            )
        if not self.pass_finite_length:
            found.append(f"finite length module has reg {self.reg_exact} > 0")
        if not self.filtration.passed:
            found.append(f"filtration condition {self.filtration.condition}: {self.filtration.message}")
        if self.counting_mismatches:
            found.append(f"Stanley count differs from the Hilbert function at {self.counting_mismatches[0]}")
        if not self.minimal_generators_consistent:
            found.append("beta_0 from cokernels differs from the Koszul computation")
        if not self.euler_consistent:
            found.append("Koszul Euler characteristic differs from the Betti table")
        if not self.oracle.passed:
            first = self.oracle.mismatches[0]
            found.append(f"Taylor oracle gives {first.taylor}, Cech gives {first.cech} at {first.degree}")
        return found

    def witness(self) -> dict[str, Any]:
        return {
            "index": self.index,
            "reg_exact": self.reg_exact,
            "reg_witness": list(self.reg_witness) if self.reg_witness else None,
            "reg_filtration_bound": self.reg_filtration_bound,
            "dim": self.dim,
            "filtration": self.filtration.model_dump(),
        }


class AnalysisReport(BaseModel):
    schema_version: str = SCHEMA_VERSION
    ideal: IdealEcho
    characteristic: int
    indices: list[int]
    records: list[ModuleRecord]
    oracle: OracleStatus = Field(default_factory=OracleStatus)
    timing: Optional[dict[str, float]] = None

    @property
    def passed(self) -> bool:
        return all(record.passed for record in self.records) and self.oracle.passed


class FailureWitness(BaseModel):
    ideal: IdealEcho
    index: int
    messages: list[str]
    witness: dict[str, Any] = Field(default_factory=dict)


class SweepSummary(BaseModel):
    schema_version: str = SCHEMA_VERSION
    corpus: dict[str, Any]
    characteristic: int
    ideals: int = 0
    modules_checked: int = 0
    nonzero_modules: int = 0
    equality_cases: int = 0
    oracle_checked: int = 0
    oracle_skipped: int = 0
    failures: int = 0
    witnesses: list[FailureWitness] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0


def to_json(report: BaseModel) -> str:
    return json.dumps(report.model_dump(mode="json"), sort_keys=True, indent=2) + "\n"


def _optional(value: Optional[int]) -> str:
    return "-" if value is None else str(value)


def render_analysis(report: AnalysisReport) -> str:
    """Per-index summary table for humans."""
    lines = [
        f"I = {report.ideal.text}   n = {report.ideal.n}   char {report.characteristic}",
        f"{'i':>3} {'dim Ext':>8} {'reg':>5} {'bound':>6} {'dim':>5} {'n-i':>5}  status",
    ]
    for record in report.records:
        total = sum(entry.dim for entry in record.hilbert)
        status = "ok" if record.passed else "FAIL: " + "; ".join(record.failures())
        lines.append(
            f"{record.index:>3} {total:>8} {_optional(record.reg_exact):>5} "
            f"{_optional(record.reg_filtration_bound):>6} {_optional(record.dim):>5} "
            f"{record.n - record.index:>5}  {status}"
        )
    if report.oracle.checked:
        lines.append(f"Taylor oracle: {report.oracle.degrees_compared} degrees, "
                     f"{len(report.oracle.mismatches)} mismatches")
    elif report.oracle.skipped_reason:
        lines.append(f"Taylor oracle skipped: {report.oracle.skipped_reason}")
    return "\n".join(lines) + "\n"


def render_sweep(summary: SweepSummary) -> str:
    lines = [
        f"ideals            {summary.ideals}",
        f"modules checked   {summary.modules_checked}",
        f"nonzero modules   {summary.nonzero_modules}",
        f"reg = dim cases   {summary.equality_cases}",
        f"oracle checked    {summary.oracle_checked} (skipped {summary.oracle_skipped})",
        f"failures          {summary.failures}",
    ]
    for witness in summary.witnesses:
        lines.append(f"  {witness.ideal.text} i={witness.index}: {'; '.join(witness.messages)}")
    return "\n".join(lines) + "\n"

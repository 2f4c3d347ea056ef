"""Self-describing catalog records, one JSON object per line"""
from typing import Annotated, Iterable, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..config.config import CATALOG_CONFIG
from ..invariants.records import InvariantRecord, Rational
from ..invariants.selection import GridLabel
from ..oracle.verification import VerificationReport
from ..search.coincidences import CoincidenceGroup
from ..search.nki import NkiRecord

RecordKind = Literal["invariant", "group", "nki", "verify"]
Grid = Tuple[int, ...]


class InvariantPayload(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: Literal["invariant"] = "invariant"
    r: Rational
    q: int
    h2: Rational
    kappa: Rational


class GroupPayload(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: Literal["group"] = "group"
    r: Rational
    q: Optional[int] = None
    q_values: Tuple[int, ...]
    h2_values: Tuple[Rational, ...]
    fully_separated: bool


class NkiPayload(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: Literal["nki"] = "nki"
    k: int
    i: int
    l: int
    admissible: bool
    r: Optional[Rational] = None
    q: Optional[int] = None
    h2_pair: Optional[Tuple[Rational, Rational]] = None
    family: Optional[str] = None


class VerifyPayload(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["verify"] = "verify"
    target: str
    frames: Tuple[str, ...] = ()
    passed: bool
    tol: float
    h: float
    seed: int
    checks: int
    failures: int
    worst_check: Optional[str] = None
    worst_residual: Optional[float] = None


Payload = Annotated[
    Union[InvariantPayload, GroupPayload, NkiPayload, VerifyPayload],
    Field(discriminator="kind"),
]


class CatalogRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    schema_version: int = CATALOG_CONFIG["schema_version"]
    kind: RecordKind
    n: int
    m: int
    grids: Tuple[Grid, ...]
    payload: Payload

    @model_validator(mode='after')
    def validate_record(self):
        if self.payload.kind != self.kind:
            raise ValueError(f"Record kind '{self.kind}' carries a '{self.payload.kind}' payload")
        # frame verifications are named by their frames instead of a grid
        if not self.grids and not (self.kind == "verify" and self.payload.frames):
            raise ValueError(f"A '{self.kind}' record must name at least one grid")
        return self

    @classmethod
    def from_invariants(cls, record: InvariantRecord, grid: GridLabel) -> "CatalogRecord":
        return cls(kind="invariant", n=record.n, m=record.m, grids=(grid.indices,),
                   payload=InvariantPayload(r=record.r, q=record.q, h2=record.h2,
                                            kappa=record.kappa))

    @classmethod
    def from_group(cls, group: CoincidenceGroup) -> "CatalogRecord":
        return cls(kind="group", n=group.n, m=group.m,
                   grids=tuple(g.indices for g in group.members),
                   payload=GroupPayload(r=group.r, q=group.q, q_values=group.q_values,
                                        h2_values=group.h2_values,
                                        fully_separated=group.fully_separated))

    @classmethod
    def from_nki(cls, record: NkiRecord) -> "CatalogRecord":
        return cls(kind="nki", n=record.n, m=2,
                   grids=(record.adjacent_grid, record.gap_grid),
                   payload=NkiPayload(k=record.k, i=record.i, l=record.l,
                                      admissible=record.admissible, r=record.r, q=record.q,
                                      h2_pair=record.h2_pair, family=record.family))

    @classmethod
    def from_report(cls, report: VerificationReport) -> "CatalogRecord":
        grids = (report.grid,) if report.grid is not None else ()
        return cls(kind="verify", n=report.n, m=report.m, grids=grids,
                   payload=VerifyPayload(target=report.target, frames=report.frames,
                                         passed=report.passed, tol=report.tol, h=report.h,
                                         seed=report.seed,
                                         checks=len(report.checks),
                                         failures=len(report.failures()),
                                         worst_check=report.worst_check,
                                         worst_residual=report.worst_residual))


def emit(record: CatalogRecord) -> str:
    """One line of JSON, no trailing newline"""
    return record.model_dump_json()


def parse(line: str) -> CatalogRecord:
    return CatalogRecord.model_validate_json(line)


def emit_many(records: Iterable[CatalogRecord]) -> str:
    return "".join(emit(r) + "\n" for r in records)


def parse_many(text: str) -> List[CatalogRecord]:
    return [parse(line) for line in text.splitlines() if line.strip()]

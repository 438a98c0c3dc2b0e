"""Claim-evidence record model with line-delimited JSON parsing and validation."""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum
from typing import IO, Iterable, Iterator, Union


class Label(Enum):
    SUP = "SUP"
    REF = "REF"
    NEI = "NEI"


# Short forms are canonical on output; the long forms found in FEVER-style
# corpora are accepted on input.
_LABEL_ALIASES = {
    "SUP": Label.SUP,
    "SUPPORTS": Label.SUP,
    "REF": Label.REF,
    "REFUTES": Label.REF,
    "NEI": Label.NEI,
    "NOT ENOUGH INFO": Label.NEI,
}


class Provenance(Enum):
    ORIGINAL = "ORIGINAL"
    NEG_CLAIM = "NEG_CLAIM"
    POS_CLAIM_NEG_EVIDENCE = "POS_CLAIM_NEG_EVIDENCE"
    NEG_CLAIM_NEG_EVIDENCE = "NEG_CLAIM_NEG_EVIDENCE"


_NEWLINES = re.compile(r"[\r\n]+")


def normalize_text(text: str) -> str:
    """Replace newline runs with single spaces and trim the ends."""
    return _NEWLINES.sub(" ", text).strip()


@dataclass(frozen=True)
class Sample:
    """One claim-evidence-label record with provenance metadata."""

    id: str
    claim: str
    evidence: str
    label: Label
    provenance: Provenance = Provenance.ORIGINAL
    origin_id: str = ""

    def __post_init__(self) -> None:
        if not self.origin_id:
            object.__setattr__(self, "origin_id", self.id)


@dataclass(frozen=True)
class Dataset:
    """Ordered collection of samples. Ids are expected to be unique."""

    samples: tuple[Sample, ...]

    @classmethod
    def of(cls, samples: Iterable[Sample]) -> "Dataset":
        return cls(tuple(samples))

    def __len__(self) -> int:
        return len(self.samples)

    def __iter__(self) -> Iterator[Sample]:
        return iter(self.samples)

    def __getitem__(self, i: int) -> Sample:
        return self.samples[i]

    def ids(self) -> set[str]:
        return {s.id for s in self.samples}


class RecordError(ValueError):
    """A malformed input line, with its 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


@dataclass(frozen=True)
class ParseIssue:
    line: int
    message: str


_REQUIRED_KEYS = ("id", "claim", "evidence", "label")


def _sample_from_obj(obj: dict, line_no: int) -> Sample:
    if not isinstance(obj, dict):
        raise RecordError(line_no, "record is not an object")
    for key in _REQUIRED_KEYS:
        if key not in obj:
            raise RecordError(line_no, f"missing key {key!r}")
    if isinstance(obj["evidence"], list):
        raise RecordError(
            line_no,
            "multi-evidence record: evidence must be a single string, not a list",
        )
    for key in ("id", "claim", "evidence"):
        if not isinstance(obj[key], str):
            raise RecordError(line_no, f"key {key!r} must be a string")
    sample_id = obj["id"]
    if not sample_id:
        raise RecordError(line_no, "empty id")
    claim = normalize_text(obj["claim"])
    evidence = normalize_text(obj["evidence"])
    if not claim:
        raise RecordError(line_no, "empty claim")
    if not evidence:
        raise RecordError(line_no, "empty evidence")
    raw_label = obj["label"]
    if not isinstance(raw_label, str) or raw_label not in _LABEL_ALIASES:
        raise RecordError(line_no, f"bad label {raw_label!r}")
    label = _LABEL_ALIASES[raw_label]

    raw_prov = obj.get("provenance", Provenance.ORIGINAL.value)
    try:
        provenance = Provenance(raw_prov)
    except ValueError:
        raise RecordError(line_no, f"bad provenance {raw_prov!r}") from None
    origin_id = obj.get("origin_id", sample_id)
    if not isinstance(origin_id, str) or not origin_id:
        raise RecordError(line_no, "origin_id must be a non-empty string")
    if (provenance is Provenance.ORIGINAL) != (origin_id == sample_id):
        raise RecordError(
            line_no,
            "origin_id must equal id exactly for ORIGINAL records and differ otherwise",
        )
    return Sample(sample_id, claim, evidence, label, provenance, origin_id)


def parse_records(
    stream: Union[IO[str], IO[bytes], Iterable[Union[str, bytes]]],
    strict: bool = True,
) -> tuple[Dataset, list[ParseIssue]]:
    """Parse one JSON record per line into a Dataset.

    In strict mode (the default) the first malformed line raises RecordError.
    In lenient mode malformed lines are skipped and reported as ParseIssues.
    Every issue carries its 1-based line number; duplicate ids name both lines.
    """
    samples: list[Sample] = []
    issues: list[ParseIssue] = []
    first_line_of: dict[str, int] = {}

    def reject(err: RecordError) -> None:
        if strict:
            raise err
        issues.append(ParseIssue(err.line, err.message))

    for line_no, raw in enumerate(stream, start=1):
        if isinstance(raw, bytes):
            try:
                raw = raw.decode("utf-8")
            except UnicodeDecodeError:
                reject(RecordError(line_no, "invalid UTF-8"))
                continue
        line = raw.rstrip("\r\n")
        if not line.strip():
            reject(RecordError(line_no, "blank line"))
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            reject(RecordError(line_no, f"invalid JSON: {exc.msg}"))
            continue
        try:
            sample = _sample_from_obj(obj, line_no)
        except RecordError as exc:
            reject(exc)
            continue
        if sample.id in first_line_of:
            reject(
                RecordError(
                    line_no,
                    f"duplicate id {sample.id!r} (first seen on line "
                    f"{first_line_of[sample.id]})",
                )
            )
            continue
        first_line_of[sample.id] = line_no
        samples.append(sample)
    return Dataset.of(samples), issues


def sample_to_obj(sample: Sample) -> dict:
    return {
        "id": sample.id,
        "claim": sample.claim,
        "evidence": sample.evidence,
        "label": sample.label.value,
        "provenance": sample.provenance.value,
        "origin_id": sample.origin_id,
    }


def write_records(dataset: Dataset, sink: Union[IO[str], IO[bytes]]) -> None:
    """Write one JSON record per line, keys in fixed order, trailing newline."""
    for sample in dataset:
        line = json.dumps(sample_to_obj(sample), ensure_ascii=False) + "\n"
        try:
            sink.write(line)
        except TypeError:
            sink.write(line.encode("utf-8"))


def records_to_text(dataset: Dataset) -> str:
    return "".join(
        json.dumps(sample_to_obj(s), ensure_ascii=False) + "\n" for s in dataset
    )


@dataclass(frozen=True)
class Violation:
    sample_id: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def lines(self) -> list[str]:
        return [f"{v.sample_id}: {v.message}" for v in self.violations]


# Label a sample must carry, by provenance, under the cross-pairing rule.
_PROVENANCE_LABELS = {
    Provenance.NEG_CLAIM: Label.REF,
    Provenance.POS_CLAIM_NEG_EVIDENCE: Label.REF,
    Provenance.NEG_CLAIM_NEG_EVIDENCE: Label.SUP,
}

_PROVENANCE_WORDING = {
    Provenance.NEG_CLAIM: "augmented claim-only sample must be REF",
    Provenance.POS_CLAIM_NEG_EVIDENCE: "positive claim with modified evidence must be REF",
    Provenance.NEG_CLAIM_NEG_EVIDENCE: "negative claim with modified evidence must be SUP",
}


def validate(dataset: Dataset) -> ValidationReport:
    """Report structural violations: duplicate ids, dangling origins, label rules."""
    violations: list[Violation] = []
    seen: set[str] = set()
    for sample in dataset:
        if sample.id in seen:
            violations.append(Violation(sample.id, "duplicate id"))
        seen.add(sample.id)
    ids = {s.id for s in dataset}
    for sample in dataset:
        if sample.origin_id not in ids:
            violations.append(
                Violation(sample.id, f"dangling origin {sample.origin_id!r}")
            )
        if (sample.provenance is Provenance.ORIGINAL) != (
            sample.origin_id == sample.id
        ):
            violations.append(
                Violation(
                    sample.id,
                    "origin_id must equal id exactly for ORIGINAL samples and differ otherwise",
                )
            )
        expected = _PROVENANCE_LABELS.get(sample.provenance)
        if expected is not None and sample.label is not expected:
            violations.append(
                Violation(sample.id, _PROVENANCE_WORDING[sample.provenance])
            )
        for field_name in ("claim", "evidence"):
            value = getattr(sample, field_name)
            if not value:
                violations.append(Violation(sample.id, f"empty {field_name}"))
            elif "\n" in value or "\r" in value:
                violations.append(
                    Violation(sample.id, f"{field_name} contains newline characters")
                )
    return ValidationReport(tuple(violations))

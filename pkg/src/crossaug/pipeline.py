"""Two-stage contrastive augmentation over a claim-evidence dataset.

For every supported (SUP) sample: generate a negative claim, and when the
claim edit is a small enough span that also occurs verbatim in the evidence,
rewrite the evidence too. Generated claims and evidences are paired
cross-wise with the originals so each full augmentation yields three new
samples with flipped-where-appropriate labels.
"""
from __future__ import annotations

from concurrent.futures import FIRST_COMPLETED, Future, ThreadPoolExecutor, wait
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterator, TypeVar, Union

from .corpus import Dataset, Label, Provenance, Sample, normalize_text
from .evidence import modify_evidence
from .negator import (
    GenerationStatus,
    Generator,
    GeneratorSpec,
    build_generator,
    generate_negative,
)
from .spandiff import ThresholdStrategy, span_diff, within_threshold
from .tokenizer import tokenize

T = TypeVar("T")
R = TypeVar("R")


class OutcomeKind(Enum):
    SKIPPED_UNCHANGED = "skipped_unchanged"
    SKIPPED_FAILED = "skipped_failed"
    SKIPPED_NOT_SUP = "skipped_not_sup"
    CLAIM_ONLY = "claim_only"
    FULL = "full"


# Samples emitted per outcome kind.
EMISSION_COUNTS = {
    OutcomeKind.SKIPPED_UNCHANGED: 0,
    OutcomeKind.SKIPPED_FAILED: 0,
    OutcomeKind.SKIPPED_NOT_SUP: 0,
    OutcomeKind.CLAIM_ONLY: 1,
    OutcomeKind.FULL: 3,
}


@dataclass(frozen=True)
class AugmentationOutcome:
    kind: OutcomeKind
    emitted: tuple[Sample, ...]
    detail: str | None = None


@dataclass(frozen=True)
class PipelineConfig:
    tau: int = 3
    generator: Union[GeneratorSpec, Generator] = field(default_factory=GeneratorSpec)
    keep_originals: bool = True
    threshold_strategy: ThresholdStrategy = ThresholdStrategy.MAX
    concurrency: int = 1
    match_case: bool = False
    replace_all: bool = False
    abort_failure_rate: float = 0.1

    def __post_init__(self) -> None:
        if self.tau < 0:
            raise ValueError("tau must be non-negative")
        if self.concurrency < 1:
            raise ValueError("concurrency must be positive")


@dataclass
class PipelineStats:
    originals: int = 0
    sup_originals: int = 0
    skipped_unchanged: int = 0
    skipped_failed: int = 0
    skipped_not_sup: int = 0
    claim_only: int = 0
    full: int = 0

    def count(self, kind: OutcomeKind) -> None:
        name = kind.value
        setattr(self, name, getattr(self, name) + 1)

    @property
    def augmented_total(self) -> int:
        return self.claim_only + 3 * self.full

    @property
    def ratio(self) -> float:
        if self.originals == 0:
            return 0.0
        return self.augmented_total / self.originals

    def report_lines(self) -> list[str]:
        return [
            f"originals={self.originals}",
            f"sup_originals={self.sup_originals}",
            f"skipped_unchanged={self.skipped_unchanged}",
            f"skipped_failed={self.skipped_failed}",
            f"skipped_not_sup={self.skipped_not_sup}",
            f"claim_only={self.claim_only}",
            f"full={self.full}",
            f"augmented_total={self.augmented_total}",
            f"ratio={self.ratio:.2f}",
        ]

    def report_text(self) -> str:
        return "\n".join(self.report_lines()) + "\n"


class GeneratorAbortError(RuntimeError):
    """Remote generation failed too often; no output should be written."""

    def __init__(self, failed: int, requests: int, stats: "PipelineStats"):
        super().__init__(
            f"aborted: {failed} of {requests} generator requests failed"
        )
        self.failed = failed
        self.requests = requests
        self.stats = stats


def _augmented(sample: Sample, suffix: str, claim: str, evidence: str,
               label: Label, provenance: Provenance) -> Sample:
    return Sample(
        id=f"{sample.id}#{suffix}",
        claim=normalize_text(claim),
        evidence=normalize_text(evidence),
        label=label,
        provenance=provenance,
        origin_id=sample.id,
    )


def augment_sample(
    sample: Sample,
    config: PipelineConfig,
    generator: Generator | None = None,
) -> AugmentationOutcome:
    """Run both augmentation stages on one sample.

    Non-SUP samples are skipped. A generated claim identical to the input
    (or a failed generation) is skipped too. Otherwise the claim-only sample
    is always emitted, and the evidence-modified pair is added when the claim
    edit passes the span-size gate and its source span occurs in the evidence.
    """
    if sample.label is not Label.SUP:
        return AugmentationOutcome(OutcomeKind.SKIPPED_NOT_SUP, ())

    if generator is None:
        gen = config.generator
        result = generate_negative(sample.claim, gen)
    else:
        result = generator.generate(sample.claim)
    if result.status is GenerationStatus.UNCHANGED:
        return AugmentationOutcome(OutcomeKind.SKIPPED_UNCHANGED, ())
    if result.status is GenerationStatus.FAILED:
        return AugmentationOutcome(OutcomeKind.SKIPPED_FAILED, (), result.detail)

    neg_claim = result.negative_claim
    claim_only = _augmented(
        sample, "nc", neg_claim, sample.evidence, Label.REF, Provenance.NEG_CLAIM
    )

    pos_seq = tokenize(sample.claim)
    neg_seq = tokenize(neg_claim)
    diff = span_diff(pos_seq, neg_seq)
    modified = None
    if (
        diff is not None
        and diff.src_len > 0
        and within_threshold(diff, config.tau, config.threshold_strategy)
    ):
        modified = modify_evidence(
            sample.evidence, diff, pos_seq, neg_seq,
            match_case=config.match_case, replace_all=config.replace_all,
        )
    if modified is None or modified == sample.evidence:
        return AugmentationOutcome(OutcomeKind.CLAIM_ONLY, (claim_only,))

    pos_claim_neg_evidence = _augmented(
        sample, "ne-pos", sample.claim, modified, Label.REF,
        Provenance.POS_CLAIM_NEG_EVIDENCE,
    )
    neg_claim_neg_evidence = _augmented(
        sample, "ne-neg", neg_claim, modified, Label.SUP,
        Provenance.NEG_CLAIM_NEG_EVIDENCE,
    )
    return AugmentationOutcome(
        OutcomeKind.FULL,
        (claim_only, pos_claim_neg_evidence, neg_claim_neg_evidence),
    )


def _map_ordered(
    func: Callable[[T], R], items: list[T], workers: int
) -> Iterator[R]:
    """Map func over items on a thread pool, yielding results in input order."""
    if workers <= 1:
        for item in items:
            yield func(item)
        return
    window = workers * 4
    inflight: dict[Future[R], int] = {}
    ready: dict[int, R] = {}
    next_submit = 0
    next_yield = 0
    with ThreadPoolExecutor(max_workers=workers) as pool:
        try:
            while next_yield < len(items):
                while next_submit < len(items) and len(inflight) < window:
                    inflight[pool.submit(func, items[next_submit])] = next_submit
                    next_submit += 1
                done, _ = wait(inflight, return_when=FIRST_COMPLETED)
                for fut in done:
                    ready[inflight.pop(fut)] = fut.result()
                while next_yield in ready:
                    yield ready.pop(next_yield)
                    next_yield += 1
        finally:
            for fut in inflight:
                fut.cancel()


# Abort-rate checks only kick in after this many generator requests, so one
# early transient failure does not kill a long run.
_MIN_REQUESTS_FOR_ABORT = 10


def augment_dataset(
    dataset: Dataset, config: PipelineConfig
) -> tuple[Dataset, PipelineStats]:
    """Augment every sample, preserving input order.

    Each original (kept by default) is immediately followed by its emitted
    samples. Work is distributed over config.concurrency threads but results
    are re-sequenced, so output is independent of the worker count. Raises
    GeneratorAbortError when the generator failure rate exceeds
    config.abort_failure_rate.
    """
    gen = config.generator
    owns_generator = isinstance(gen, GeneratorSpec)
    if owns_generator:
        gen = build_generator(gen)

    stats = PipelineStats(originals=len(dataset))
    out: list[Sample] = []
    requests = 0
    failures = 0

    def work(sample: Sample) -> AugmentationOutcome:
        return augment_sample(sample, config, generator=gen)

    try:
        outcomes = _map_ordered(work, list(dataset.samples), config.concurrency)
        for sample, outcome in zip(dataset.samples, outcomes):
            if outcome.kind is not OutcomeKind.SKIPPED_NOT_SUP:
                stats.sup_originals += 1
                requests += 1
            if outcome.kind is OutcomeKind.SKIPPED_FAILED:
                failures += 1
            stats.count(outcome.kind)
            if config.keep_originals:
                out.append(sample)
            out.extend(outcome.emitted)
            if (
                requests >= _MIN_REQUESTS_FOR_ABORT
                and failures / requests > config.abort_failure_rate
            ):
                raise GeneratorAbortError(failures, requests, stats)
        if requests and failures / requests > config.abort_failure_rate:
            raise GeneratorAbortError(failures, requests, stats)
    finally:
        if owns_generator and hasattr(gen, "close"):
            gen.close()
    return Dataset.of(out), stats

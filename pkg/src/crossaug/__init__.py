"""Contrastive data augmentation for claim-evidence fact verification corpora."""

from .corpus import (
    Dataset,
    Label,
    ParseIssue,
    Provenance,
    RecordError,
    Sample,
    ValidationReport,
    parse_records,
    records_to_text,
    validate,
    write_records,
)
from .evidence import find_span, modify_evidence
from .negator import (
    GenerationResult,
    GenerationStatus,
    GeneratorKind,
    GeneratorSpec,
    RemoteGenerator,
    RuleGenerator,
    generate_negative,
    load_lexicon,
)
from .pipeline import (
    AugmentationOutcome,
    GeneratorAbortError,
    OutcomeKind,
    PipelineConfig,
    PipelineStats,
    augment_dataset,
    augment_sample,
)
from .spandiff import SpanDiff, ThresholdStrategy, span_diff, within_threshold
from .subsample import SubsampleConfig, class_balanced_subsample
from .tokenizer import Token, TokenSeq, splice, tokenize

__version__ = "0.1.0"

__all__ = [
    "AugmentationOutcome",
    "Dataset",
    "GenerationResult",
    "GenerationStatus",
    "GeneratorAbortError",
    "GeneratorKind",
    "GeneratorSpec",
    "Label",
    "OutcomeKind",
    "ParseIssue",
    "PipelineConfig",
    "PipelineStats",
    "Provenance",
    "RecordError",
    "RemoteGenerator",
    "RuleGenerator",
    "Sample",
    "SpanDiff",
    "SubsampleConfig",
    "ThresholdStrategy",
    "Token",
    "TokenSeq",
    "ValidationReport",
    "augment_dataset",
    "augment_sample",
    "class_balanced_subsample",
    "find_span",
    "generate_negative",
    "load_lexicon",
    "modify_evidence",
    "parse_records",
    "records_to_text",
    "span_diff",
    "splice",
    "tokenize",
    "validate",
    "within_threshold",
    "write_records",
]

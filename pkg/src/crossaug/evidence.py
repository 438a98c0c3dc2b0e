"""Locate a claim's replaced span inside the evidence and substitute it."""
from __future__ import annotations

from typing import Sequence

from .spandiff import SpanDiff
from .tokenizer import TokenSeq, splice, tokenize


def _fold(texts: Sequence[str], match_case: bool) -> list[str]:
    return list(texts) if match_case else [t.lower() for t in texts]


def find_span(
    evidence: TokenSeq,
    src_tokens: Sequence[str],
    match_case: bool = False,
) -> tuple[int, int] | None:
    """Leftmost token range of evidence whose texts equal src_tokens.

    Comparison is case-insensitive unless match_case is set. src_tokens
    must be non-empty: an empty needle has no position to report.
    """
    if not src_tokens:
        raise ValueError("src_tokens must be non-empty")
    spans = find_all_spans(evidence, src_tokens, match_case)
    return spans[0] if spans else None


def find_all_spans(
    evidence: TokenSeq,
    src_tokens: Sequence[str],
    match_case: bool = False,
) -> list[tuple[int, int]]:
    """All non-overlapping matches, scanned left to right."""
    needle = _fold(src_tokens, match_case)
    haystack = _fold(evidence.texts(), match_case)
    spans: list[tuple[int, int]] = []
    i = 0
    width = len(needle)
    while i + width <= len(haystack):
        if haystack[i : i + width] == needle:
            spans.append((i, i + width))
            i += width
        else:
            i += 1
    return spans


def modify_evidence(
    evidence_text: str,
    diff: SpanDiff,
    pos: TokenSeq,
    neg: TokenSeq,
    match_case: bool = False,
    replace_all: bool = False,
) -> str | None:
    """Rewrite the evidence by substituting the claim's replaced span.

    The source-span token texts (taken from the positive claim) are searched
    in the evidence; on a match the raw target-span text from the negative
    claim is spliced over the matched bytes. Returns None when the span does
    not occur in the evidence. Only the leftmost occurrence is replaced
    unless replace_all is set.
    """
    if diff.src_len == 0:
        raise ValueError("diff has an empty source span; nothing to search for")
    src_tokens = pos.texts()[diff.src_start : diff.src_stop]
    replacement = neg.span_text(diff.tgt_start, diff.tgt_stop)
    seq = tokenize(evidence_text)
    spans = find_all_spans(seq, src_tokens, match_case)
    if not spans:
        return None
    if not replace_all:
        spans = spans[:1]
    text = evidence_text
    for start, stop in reversed(spans):
        text = splice(seq, start, stop, replacement)
        seq = tokenize(text)
    return text

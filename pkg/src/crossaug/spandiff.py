"""Minimal contiguous replaced-span computation between two token sequences."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Union

from .tokenizer import TokenSeq


class ThresholdStrategy(str, Enum):
    """Which span length the size threshold is applied to."""

    MAX = "max"
    SRC_ONLY = "src"
    TGT_ONLY = "tgt"


@dataclass(frozen=True)
class SpanDiff:
    """The single contiguous replacement turning one sequence into the other.

    Token range [src_start, src_stop) of the source sequence is replaced by
    range [tgt_start, tgt_stop) of the target sequence; everything outside
    the ranges matches token-for-token. At most one range may be empty.
    """

    src_start: int
    src_stop: int
    tgt_start: int
    tgt_stop: int

    @property
    def src_len(self) -> int:
        return self.src_stop - self.src_start

    @property
    def tgt_len(self) -> int:
        return self.tgt_stop - self.tgt_start


def _texts(seq: Union[TokenSeq, Sequence[str]]) -> Sequence[str]:
    if isinstance(seq, TokenSeq):
        return seq.texts()
    return seq


def span_diff(
    pos: Union[TokenSeq, Sequence[str]], neg: Union[TokenSeq, Sequence[str]]
) -> SpanDiff | None:
    """Locate the replaced span between two token sequences.

    Returns None when the token texts are equal (case-sensitive). Otherwise
    takes the longest common prefix, then the longest common suffix capped so
    prefix + suffix never exceeds the shorter sequence (ties resolved in
    favour of the prefix), and reports what is left over on each side.
    """
    a = list(_texts(pos))
    b = list(_texts(neg))
    if a == b:
        return None
    m, n = len(a), len(b)
    limit = min(m, n)
    p = 0
    while p < limit and a[p] == b[p]:
        p += 1
    s = 0
    while s < limit - p and a[m - 1 - s] == b[n - 1 - s]:
        s += 1
    return SpanDiff(p, m - s, p, n - s)


def within_threshold(
    diff: SpanDiff, tau: int, strategy: ThresholdStrategy = ThresholdStrategy.MAX
) -> bool:
    """True when the replaced-span size measured per strategy is at most tau."""
    if tau < 0:
        raise ValueError("tau must be non-negative")
    if strategy is ThresholdStrategy.SRC_ONLY:
        size = diff.src_len
    elif strategy is ThresholdStrategy.TGT_ONLY:
        size = diff.tgt_len
    else:
        size = max(diff.src_len, diff.tgt_len)
    return size <= tau

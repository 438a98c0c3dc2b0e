import pytest

from crossaug.evidence import find_all_spans, find_span, modify_evidence
from crossaug.spandiff import span_diff
from crossaug.tokenizer import tokenize


def test_find_span_reference_phrase():
    evidence = tokenize("to be taken for over 30 days to work")
    assert find_span(evidence, ["over", "30"]) == (4, 6)


def test_find_span_absent():
    evidence = tokenize("an unrelated sentence")
    assert find_span(evidence, ["over", "30"]) is None


def test_find_span_leftmost_of_two():
    evidence = tokenize("over 30 then over 30 again")
    assert find_span(evidence, ["over", "30"]) == (0, 2)


def test_find_span_case_insensitive_by_default():
    evidence = tokenize("The Northern wall stands.")
    assert find_span(evidence, ["northern"]) == (1, 2)
    assert find_span(evidence, ["northern"], match_case=True) is None


def test_find_span_rejects_empty_needle():
    with pytest.raises(ValueError):
        find_span(tokenize("a b"), [])


def test_find_all_spans_non_overlapping():
    evidence = tokenize("a a a a")
    assert find_all_spans(evidence, ["a", "a"]) == [(0, 2), (2, 4)]


def _diff(pos_text: str, neg_text: str):
    pos = tokenize(pos_text)
    neg = tokenize(neg_text)
    return span_diff(pos, neg), pos, neg


def test_modify_evidence_reference_example():
    diff, pos, neg = _diff(
        "The drug must be taken for over 30 days.",
        "The drug must be taken for less than 10 days.",
    )
    evidence = "Standard treatment requires the drug to be taken for over 30 days to work."
    assert modify_evidence(evidence, diff, pos, neg) == (
        "Standard treatment requires the drug to be taken for less than 10 days to work."
    )


def test_modify_evidence_absent_span_returns_none():
    diff, pos, neg = _diff("The budget rose.", "The budget fell.")
    assert modify_evidence("Officials said nothing changed.", diff, pos, neg) is None


def test_modify_evidence_deletion_collapses_space():
    diff, pos, neg = _diff(
        "The award was won twice in 2001.",
        "The award was won in 2001.",
    )
    assert pos.texts()[diff.src_start : diff.src_stop] == ["twice"]
    assert diff.tgt_len == 0
    evidence = "The award was won twice in 2001."
    assert modify_evidence(evidence, diff, pos, neg) == "The award was won in 2001."


def test_modify_evidence_requires_nonempty_source_span():
    diff, pos, neg = _diff("The film was released.", "The film was not released.")
    assert diff.src_len == 0
    with pytest.raises(ValueError):
        modify_evidence("anything", diff, pos, neg)


def test_modify_evidence_uses_raw_target_text():
    # replacement keeps the negative claim's casing, not the evidence's
    diff, pos, neg = _diff("The northern gate fell.", "The Southern gate fell.")
    evidence = "Its NORTHERN gate fell first."
    assert modify_evidence(evidence, diff, pos, neg) == "Its Southern gate fell first."


def test_modify_evidence_leftmost_only_by_default():
    diff, pos, neg = _diff("Trains run north daily.", "Trains run south daily.")
    evidence = "They go north, then north again."
    assert modify_evidence(evidence, diff, pos, neg) == "They go south, then north again."


def test_modify_evidence_replace_all():
    diff, pos, neg = _diff("Trains run north daily.", "Trains run south daily.")
    evidence = "They go north, then north again."
    assert (
        modify_evidence(evidence, diff, pos, neg, replace_all=True)
        == "They go south, then south again."
    )


def test_modify_evidence_match_case_flag():
    diff, pos, neg = _diff("The northern gate fell.", "The southern gate fell.")
    evidence = "The Northern gate fell."
    assert modify_evidence(evidence, diff, pos, neg, match_case=True) is None
    assert modify_evidence(evidence, diff, pos, neg) == "The southern gate fell."


def test_modify_evidence_multiword_span_with_punctuation():
    diff, pos, neg = _diff(
        "The line opened before 1900, historians say.",
        "The line opened after 1910, historians say.",
    )
    evidence = "Records show the line opened before 1900, a century ago."
    assert modify_evidence(evidence, diff, pos, neg) == (
        "Records show the line opened after 1910, a century ago."
    )


def test_modify_evidence_recomputed_diff_matches_claim_spans():
    diff, pos, neg = _diff(
        "The reservoir lies above the dam.",
        "The reservoir lies below the dam.",
    )
    evidence = "The reservoir lies above the old dam wall."
    modified = modify_evidence(evidence, diff, pos, neg)
    ev_diff = span_diff(tokenize(evidence), tokenize(modified))
    src_tokens = [t.lower() for t in tokenize(evidence).texts()[ev_diff.src_start : ev_diff.src_stop]]
    claim_src = [t.lower() for t in pos.texts()[diff.src_start : diff.src_stop]]
    assert src_tokens == claim_src
    assert (
        tokenize(modified).span_text(ev_diff.tgt_start, ev_diff.tgt_stop)
        == neg.span_text(diff.tgt_start, diff.tgt_stop)
    )


def test_modify_evidence_unchanged_bytes_outside_match():
    diff, pos, neg = _diff("Prices rose sharply.", "Prices fell sharply.")
    evidence = "Analysts wrote: prices rose, unexpectedly, in müggy June."
    modified = modify_evidence(evidence, diff, pos, neg)
    assert modified == "Analysts wrote: prices fell, unexpectedly, in müggy June."

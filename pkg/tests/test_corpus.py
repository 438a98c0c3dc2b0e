import io
import json

import pytest

from crossaug.corpus import (
    Dataset,
    Label,
    Provenance,
    RecordError,
    Sample,
    normalize_text,
    parse_records,
    records_to_text,
    sample_to_obj,
    validate,
    write_records,
)


def parse_text(text: str, strict: bool = True):
    return parse_records(io.StringIO(text), strict=strict)


def line(**kwargs) -> str:
    return json.dumps(kwargs) + "\n"


VALID = line(id="s1", claim="A.", evidence="B.", label="SUPPORTS")


def test_single_well_formed_record_with_label_alias():
    dataset, issues = parse_text(VALID)
    assert not issues
    assert len(dataset) == 1
    sample = dataset[0]
    assert sample.id == "s1"
    assert sample.claim == "A."
    assert sample.evidence == "B."
    assert sample.label is Label.SUP
    assert sample.provenance is Provenance.ORIGINAL
    assert sample.origin_id == "s1"


@pytest.mark.parametrize(
    "raw,expected",
    [
        ("SUP", Label.SUP),
        ("SUPPORTS", Label.SUP),
        ("REF", Label.REF),
        ("REFUTES", Label.REF),
        ("NEI", Label.NEI),
        ("NOT ENOUGH INFO", Label.NEI),
    ],
)
def test_label_aliases(raw, expected):
    dataset, _ = parse_text(line(id="x", claim="c", evidence="e", label=raw))
    assert dataset[0].label is expected


def test_empty_stream():
    dataset, issues = parse_text("")
    assert len(dataset) == 0 and not issues


def test_bad_label_strict_raises_with_line_number():
    text = (
        line(id="a", claim="c", evidence="e", label="SUP")
        + line(id="b", claim="c", evidence="e", label="MAYBE")
    )
    with pytest.raises(RecordError) as exc:
        parse_text(text)
    assert exc.value.line == 2
    assert "MAYBE" in exc.value.message


def test_bad_label_lenient_keeps_valid_lines():
    text = (
        line(id="a", claim="c", evidence="e", label="SUP")
        + line(id="b", claim="c", evidence="e", label="SUP")
        + line(id="c", claim="c", evidence="e", label="MAYBE")
        + line(id="d", claim="c", evidence="e", label="SUP")
    )
    dataset, issues = parse_text(text, strict=False)
    assert len(dataset) == 3
    assert [i.line for i in issues] == [3]


@pytest.mark.parametrize(
    "bad_line,fragment",
    [
        ("not json\n", "invalid JSON"),
        ('["a","b"]\n', "not an object"),
        (line(id="x", claim="c", evidence="e"), "label"),
        (line(id="x", claim="", evidence="e", label="SUP"), "empty claim"),
        (line(id="x", claim="c", evidence="  ", label="SUP"), "empty evidence"),
        (line(id="", claim="c", evidence="e", label="SUP"), "empty id"),
        (line(id="x", claim="c", evidence=["e1", "e2"], label="SUP"), "multi-evidence"),
        (line(id="x", claim=3, evidence="e", label="SUP"), "string"),
        (line(id="x", claim="c", evidence="e", label="SUP", provenance="WAT"), "provenance"),
        ("\n", "blank"),
    ],
)
def test_malformed_lines_report_reason(bad_line, fragment):
    with pytest.raises(RecordError) as exc:
        parse_text(VALID + bad_line)
    assert exc.value.line == 2
    assert fragment in exc.value.message


def test_duplicate_id_error_names_both_lines():
    text = VALID + line(id="s2", claim="c", evidence="e", label="SUP") + VALID
    with pytest.raises(RecordError) as exc:
        parse_text(text)
    assert exc.value.line == 3
    assert "line 1" in exc.value.message


def test_newlines_normalized_to_spaces_on_ingest():
    dataset, _ = parse_text(line(id="x", claim="a\nb", evidence="c\r\n\nd", label="SUP"))
    assert dataset[0].claim == "a b"
    assert dataset[0].evidence == "c d"


def test_original_provenance_requires_matching_origin():
    with pytest.raises(RecordError):
        parse_text(line(id="x", claim="c", evidence="e", label="SUP", origin_id="y"))
    with pytest.raises(RecordError):
        parse_text(
            line(id="x", claim="c", evidence="e", label="REF",
                 provenance="NEG_CLAIM", origin_id="x")
        )


def test_augmented_provenance_roundtrip():
    text = line(
        id="x#nc", claim="c", evidence="e", label="REF",
        provenance="NEG_CLAIM", origin_id="x",
    )
    dataset, _ = parse_text(text)
    assert dataset[0].provenance is Provenance.NEG_CLAIM
    assert dataset[0].origin_id == "x"


def test_unknown_keys_are_ignored():
    dataset, _ = parse_text(
        line(id="x", claim="c", evidence="e", label="SUP", verifiable="VERIFIABLE")
    )
    assert len(dataset) == 1


def test_bytes_input_accepted():
    dataset, _ = parse_records(io.BytesIO(VALID.encode("utf-8")))
    assert len(dataset) == 1


def _dataset(*samples: Sample) -> Dataset:
    return Dataset.of(samples)


EXAMPLE = _dataset(
    Sample("a", "Claim one.", "Evidence one.", Label.SUP),
    Sample("b", "Der Käse blüht.", "Ähnliche Beweise.", Label.REF),
    Sample("a#nc", "Claim two.", "Evidence one.", Label.REF, Provenance.NEG_CLAIM, "a"),
)


def test_write_records_key_order_and_trailing_newline():
    out = io.StringIO()
    write_records(EXAMPLE, out)
    lines = out.getvalue().splitlines()
    assert len(lines) == 3
    assert out.getvalue().endswith("\n")
    first = json.loads(lines[0])
    assert list(first) == ["id", "claim", "evidence", "label", "provenance", "origin_id"]
    # non-ASCII is written raw, not escaped
    assert "Käse" in lines[1]


def test_write_empty_dataset():
    out = io.StringIO()
    write_records(Dataset.of([]), out)
    assert out.getvalue() == ""


def test_parse_write_roundtrip_is_field_identity():
    text = records_to_text(EXAMPLE)
    reparsed, issues = parse_text(text)
    assert not issues
    assert reparsed == EXAMPLE


def test_write_parse_write_is_byte_identity():
    normalized = records_to_text(EXAMPLE)
    reparsed, _ = parse_text(normalized)
    assert records_to_text(reparsed) == normalized


def test_write_records_to_binary_sink():
    out = io.BytesIO()
    write_records(EXAMPLE, out)
    assert out.getvalue().decode("utf-8") == records_to_text(EXAMPLE)


def test_normalize_text():
    assert normalize_text("a\nb") == "a b"
    assert normalize_text("  a\r\nb \n") == "a b"
    assert normalize_text("plain") == "plain"


def test_sample_to_obj_uses_short_label_forms():
    obj = sample_to_obj(Sample("x", "c", "e", Label.NEI))
    assert obj["label"] == "NEI"
    assert obj["provenance"] == "ORIGINAL"


def test_validate_clean_dataset():
    report = validate(
        _dataset(
            Sample("a", "c", "e", Label.SUP),
            Sample("b", "c", "e", Label.NEI),
        )
    )
    assert report.ok


def test_validate_neg_claim_must_be_ref():
    report = validate(
        _dataset(Sample("a#nc", "c", "e", Label.SUP, Provenance.NEG_CLAIM, "a#nc0"))
    )
    # one violation for the label rule, one for the dangling origin
    messages = " | ".join(report.lines())
    assert "must be REF" in messages


@pytest.mark.parametrize(
    "provenance,bad_label",
    [
        (Provenance.NEG_CLAIM, Label.SUP),
        (Provenance.POS_CLAIM_NEG_EVIDENCE, Label.NEI),
        (Provenance.NEG_CLAIM_NEG_EVIDENCE, Label.REF),
    ],
)
def test_validate_label_rules_per_provenance(provenance, bad_label):
    base = Sample("a", "c", "e", Label.SUP)
    bad = Sample("a#x", "c", "e", bad_label, provenance, "a")
    report = validate(_dataset(base, bad))
    assert not report.ok
    assert all(v.sample_id == "a#x" for v in report.violations)


def test_validate_dangling_origin():
    report = validate(
        _dataset(Sample("a#nc", "c", "e", Label.REF, Provenance.NEG_CLAIM, "gone"))
    )
    assert any("dangling origin" in v.message for v in report.violations)


def test_validate_duplicate_ids():
    report = validate(
        _dataset(Sample("a", "c", "e", Label.SUP), Sample("a", "c2", "e2", Label.SUP))
    )
    assert any("duplicate id" in v.message for v in report.violations)

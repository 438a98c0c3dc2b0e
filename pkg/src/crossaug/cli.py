"""Command-line interface: augment, subsample, validate, stats."""
from __future__ import annotations

import argparse
import os
import sys
from typing import Iterable

from .corpus import (
    Label,
    Provenance,
    RecordError,
    parse_records,
    records_to_text,
    validate,
)
from .negator import GeneratorKind, GeneratorSpec
from .pipeline import GeneratorAbortError, PipelineConfig, augment_dataset
from .spandiff import ThresholdStrategy
from .subsample import SubsampleConfig, class_balanced_subsample

GENERATOR_URL_ENV = "CROSSAUG_GENERATOR_URL"

EXIT_OK = 0
EXIT_DATA_ERROR = 1
EXIT_USAGE = 2
EXIT_GENERATOR_ABORT = 3

_STRATEGIES = {
    "max": ThresholdStrategy.MAX,
    "src": ThresholdStrategy.SRC_ONLY,
    "tgt": ThresholdStrategy.TGT_ONLY,
}


def _read_dataset(path: str, strict: bool = True):
    if path == "-":
        return parse_records(sys.stdin, strict=strict)
    with open(path, encoding="utf-8") as fp:
        return parse_records(fp, strict=strict)


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(path, "w", encoding="utf-8", newline="") as fp:
            fp.write(text)


def _positive_int(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def _nonnegative_int(value: str) -> int:
    n = int(value)
    if n < 0:
        raise argparse.ArgumentTypeError("must be a non-negative integer")
    return n


def _fraction_arg(value: str) -> str:
    from fractions import Fraction

    try:
        frac = Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a fraction: {value!r}") from None
    if not 0 < frac <= 1:
        raise argparse.ArgumentTypeError("fraction must be in (0, 1]")
    return value


def _seed_arg(value: str) -> int:
    n = int(value)
    if not 0 <= n < 2**64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return n


def _generator_spec(args: argparse.Namespace) -> GeneratorSpec:
    target = args.generator or os.environ.get(GENERATOR_URL_ENV) or "rule"
    if target == "rule":
        return GeneratorSpec(
            kind=GeneratorKind.RULE,
            lexicon_path=args.lexicon,
        )
    if args.lexicon:
        raise ValueError("--lexicon only applies to the rule generator")
    return GeneratorSpec(
        kind=GeneratorKind.REMOTE,
        endpoint=target,
        timeout=args.timeout,
        max_in_flight=args.concurrency,
    )


def _cmd_augment(args: argparse.Namespace) -> int:
    try:
        spec = _generator_spec(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    config = PipelineConfig(
        tau=args.tau,
        generator=spec,
        keep_originals=not args.no_keep_originals,
        threshold_strategy=_STRATEGIES[args.threshold_strategy],
        concurrency=args.concurrency,
        match_case=args.match_case,
        replace_all=args.replace_all,
        abort_failure_rate=args.abort_failure_rate,
    )
    dataset, _ = _read_dataset(args.infile)
    try:
        augmented, stats = augment_dataset(dataset, config)
    except GeneratorAbortError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print("partial-run report:", file=sys.stderr)
        for line in exc.stats.report_lines():
            print(f"  {line}", file=sys.stderr)
        return EXIT_GENERATOR_ABORT
    _write_text(args.out, records_to_text(augmented))
    report = stats.report_text()
    if args.report:
        _write_text(args.report, report)
    else:
        sys.stderr.write(report)
    return EXIT_OK


def _cmd_subsample(args: argparse.Namespace) -> int:
    dataset, _ = _read_dataset(args.infile)
    config = SubsampleConfig(fraction=args.fraction, seed=args.seed)
    subset, report = class_balanced_subsample(dataset, config)
    for warning in report.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    _write_text(args.out, records_to_text(subset))
    return EXIT_OK


def _cmd_validate(args: argparse.Namespace) -> int:
    dataset, issues = _read_dataset(args.infile, strict=False)
    report = validate(dataset)
    for issue in issues:
        print(f"line {issue.line}: {issue.message}")
    for line in report.lines():
        print(line)
    if issues or not report.ok:
        return EXIT_DATA_ERROR
    print("OK")
    return EXIT_OK


def _cmd_stats(args: argparse.Namespace) -> int:
    dataset, _ = _read_dataset(args.infile)
    label_counts = {label: 0 for label in Label}
    provenance_counts = {prov: 0 for prov in Provenance}
    for sample in dataset:
        label_counts[sample.label] += 1
        provenance_counts[sample.provenance] += 1
    originals = provenance_counts[Provenance.ORIGINAL]
    augmented = len(dataset) - originals
    ratio = augmented / originals if originals else 0.0
    print(f"samples={len(dataset)}")
    for label in Label:
        print(f"label_{label.value.lower()}={label_counts[label]}")
    for prov in Provenance:
        print(f"provenance_{prov.value.lower()}={provenance_counts[prov]}")
    print(f"originals={originals}")
    print(f"augmented_total={augmented}")
    print(f"ratio={ratio:.2f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crossaug",
        description=(
            "Contrastive augmentation for claim-evidence corpora: generate "
            "negative claims, derive modified evidences, and emit cross-wise "
            "labelled samples."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    augment = sub.add_parser("augment", help="run the augmentation pipeline")
    augment.add_argument("--in", dest="infile", required=True,
                         help="input record file, or - for stdin")
    augment.add_argument("--out", required=True,
                         help="output record file, or - for stdout")
    augment.add_argument("--tau", type=_nonnegative_int, default=3,
                         help="maximum replaced-span size for evidence "
                              "modification (default 3)")
    augment.add_argument("--generator", default=None,
                         help="'rule' or a generator service URL (default: "
                              f"${GENERATOR_URL_ENV} if set, else rule)")
    augment.add_argument("--lexicon", default=None,
                         help="antonym lexicon file for the rule generator")
    augment.add_argument("--threshold-strategy", choices=sorted(_STRATEGIES),
                         default="max",
                         help="span length the tau gate applies to (default max)")
    augment.add_argument("--match-case", action="store_true",
                         help="require exact case when matching spans in evidence")
    augment.add_argument("--replace-all", action="store_true",
                         help="replace every evidence occurrence, not just the first")
    augment.add_argument("--no-keep-originals", action="store_true",
                         help="emit only augmented samples")
    augment.add_argument("--concurrency", type=_positive_int, default=1,
                         help="worker threads (default 1); output is identical "
                              "for any value")
    augment.add_argument("--timeout", type=float, default=30.0,
                         help="remote generator request timeout in seconds")
    augment.add_argument("--abort-failure-rate", type=float, default=0.1,
                         help="abort when this share of generator requests fails")
    augment.add_argument("--report", default=None,
                         help="write the stats report here instead of stderr")
    augment.set_defaults(func=_cmd_augment)

    subsample = sub.add_parser("subsample", help="class-balanced random subset")
    subsample.add_argument("--in", dest="infile", required=True)
    subsample.add_argument("--out", required=True)
    subsample.add_argument("--fraction", type=_fraction_arg, required=True,
                           help="share of each class to keep, in (0, 1]")
    subsample.add_argument("--seed", type=_seed_arg, required=True)
    subsample.set_defaults(func=_cmd_subsample)

    val = sub.add_parser("validate", help="check structural invariants")
    val.add_argument("--in", dest="infile", required=True)
    val.set_defaults(func=_cmd_validate)

    stats = sub.add_parser("stats", help="label/provenance counts and ratio")
    stats.add_argument("--in", dest="infile", required=True)
    stats.set_defaults(func=_cmd_stats)
    return parser


def main(argv: Iterable[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(list(argv) if argv is not None else None)
    try:
        return args.func(args)
    except RecordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA_ERROR
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

"""Class-balanced random subsampling for low-resource experiments."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .corpus import Dataset, Label

FractionLike = Union[Fraction, float, int, str]


def _as_fraction(value: FractionLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        # via str() so 0.01 means 1/100, not the nearest binary float
        return Fraction(str(value))
    return Fraction(value)


@dataclass(frozen=True)
class SubsampleConfig:
    fraction: FractionLike
    seed: int

    def __post_init__(self) -> None:
        frac = _as_fraction(self.fraction)
        if not 0 < frac <= 1:
            raise ValueError("fraction must be in (0, 1]")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


@dataclass
class SubsampleReport:
    selected_per_label: dict[str, int] = field(default_factory=dict)
    total_per_label: dict[str, int] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)


def rounded_count(fraction: FractionLike, class_count: int) -> int:
    """Number of samples drawn from a class: floor(fraction * count + 1/2)."""
    frac = _as_fraction(fraction)
    return int(frac * class_count + Fraction(1, 2))


def class_balanced_subsample(
    dataset: Dataset, config: SubsampleConfig
) -> tuple[Dataset, SubsampleReport]:
    """Draw the same fraction of every label class, without replacement.

    Each class is sampled with its own generator seeded from (seed, label),
    so changing one class's membership never perturbs another's selection.
    The output keeps the input's relative order. Classes whose share rounds
    to zero produce a warning and are dropped from the output.
    """
    if len(dataset) == 0:
        raise ValueError("dataset must be non-empty")
    frac = _as_fraction(config.fraction)

    by_label: dict[Label, list[int]] = {}
    for index, sample in enumerate(dataset):
        by_label.setdefault(sample.label, []).append(index)

    report = SubsampleReport()
    keep: set[int] = set()
    for label in Label:
        indices = by_label.get(label)
        if not indices:
            continue
        count = rounded_count(frac, len(indices))
        report.total_per_label[label.value] = len(indices)
        report.selected_per_label[label.value] = count
        if count == 0:
            report.warnings.append(
                f"class {label.value}: fraction {frac} of {len(indices)} samples "
                "rounds to 0; class dropped"
            )
            continue
        rng = random.Random(f"{config.seed}:{label.value}")
        keep.update(indices[i] for i in rng.sample(range(len(indices)), count))

    selected = Dataset.of(dataset[i] for i in sorted(keep))
    return selected, report

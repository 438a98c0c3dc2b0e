from fractions import Fraction

import pytest

from crossaug.corpus import Dataset, Label, Sample
from crossaug.subsample import (
    SubsampleConfig,
    class_balanced_subsample,
    rounded_count,
)


def make_dataset(counts: dict[Label, int], prefix="s") -> Dataset:
    samples = []
    i = 0
    # interleave labels so order preservation is meaningful
    remaining = dict(counts)
    while any(remaining.values()):
        for label in Label:
            if remaining.get(label, 0) > 0:
                samples.append(Sample(f"{prefix}{i}", f"claim {i}", f"evidence {i}", label))
                remaining[label] -= 1
                i += 1
    return Dataset.of(samples)


def test_rounding_rule_is_half_up():
    assert rounded_count("0.1", 100) == 10
    assert rounded_count("0.1", 105) == 11   # 10.5 rounds up
    assert rounded_count("0.1", 104) == 10   # 10.4 rounds down
    assert rounded_count("0.001", 499) == 0
    assert rounded_count("0.001", 500) == 1
    assert rounded_count(1, 7) == 7


def test_fraction_one_returns_identical_dataset():
    dataset = make_dataset({Label.SUP: 10, Label.REF: 7, Label.NEI: 3})
    subset, report = class_balanced_subsample(dataset, SubsampleConfig(1, seed=5))
    assert subset == dataset
    assert not report.warnings


def test_balanced_dataset_exact_counts():
    dataset = make_dataset({Label.SUP: 100, Label.REF: 100, Label.NEI: 100})
    subset, report = class_balanced_subsample(dataset, SubsampleConfig("0.1", seed=1))
    assert len(subset) == 30
    per_label = {label: 0 for label in Label}
    for sample in subset:
        per_label[sample.label] += 1
    assert all(count == 10 for count in per_label.values())
    assert report.selected_per_label == {"SUP": 10, "REF": 10, "NEI": 10}


def test_determinism_same_seed_same_subset():
    dataset = make_dataset({Label.SUP: 50, Label.REF: 50, Label.NEI: 50})
    a, _ = class_balanced_subsample(dataset, SubsampleConfig("0.2", seed=99))
    b, _ = class_balanced_subsample(dataset, SubsampleConfig("0.2", seed=99))
    assert a == b


def test_different_seeds_differ():
    dataset = make_dataset({Label.SUP: 200, Label.REF: 200, Label.NEI: 200})
    picks = {
        tuple(s.id for s in class_balanced_subsample(
            dataset, SubsampleConfig("0.1", seed=seed))[0])
        for seed in range(5)
    }
    assert len(picks) > 1


def test_subset_preserves_relative_order():
    dataset = make_dataset({Label.SUP: 40, Label.REF: 40, Label.NEI: 40})
    subset, _ = class_balanced_subsample(dataset, SubsampleConfig("0.25", seed=3))
    positions = {s.id: i for i, s in enumerate(dataset)}
    order = [positions[s.id] for s in subset]
    assert order == sorted(order)
    assert set(s.id for s in subset) <= dataset.ids()


def test_per_class_seeding_isolated():
    # growing one class must not change another class's picks
    small = make_dataset({Label.SUP: 50, Label.REF: 50})
    grown = Dataset.of(
        list(small.samples)
        + [Sample(f"x{i}", f"c{i}", f"e{i}", Label.REF) for i in range(50)]
    )
    pick_small, _ = class_balanced_subsample(small, SubsampleConfig("0.2", seed=11))
    pick_grown, _ = class_balanced_subsample(grown, SubsampleConfig("0.2", seed=11))
    sup_small = [s.id for s in pick_small if s.label is Label.SUP]
    sup_grown = [s.id for s in pick_grown if s.label is Label.SUP]
    assert sup_small == sup_grown


def test_class_rounding_to_zero_warns_and_proceeds():
    dataset = make_dataset({Label.SUP: 1000, Label.NEI: 3})
    subset, report = class_balanced_subsample(dataset, SubsampleConfig("0.01", seed=0))
    assert len(subset) == 10
    assert any("NEI" in w for w in report.warnings)
    assert all(s.label is Label.SUP for s in subset)


def test_config_validation():
    with pytest.raises(ValueError):
        SubsampleConfig(0, seed=1)
    with pytest.raises(ValueError):
        SubsampleConfig("1.5", seed=1)
    with pytest.raises(ValueError):
        SubsampleConfig("0.5", seed=-1)
    with pytest.raises(ValueError):
        SubsampleConfig("0.5", seed=2**64)


def test_empty_dataset_rejected():
    with pytest.raises(ValueError):
        class_balanced_subsample(Dataset.of([]), SubsampleConfig("0.5", seed=1))


def test_float_fraction_means_decimal_value():
    # 0.01 of 80,900 must behave as exactly 1/100, not the nearest float
    assert rounded_count(0.01, 80900) == 809
    assert rounded_count(Fraction(1, 100), 80900) == 809

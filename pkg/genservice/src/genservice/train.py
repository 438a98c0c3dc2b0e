"""Fine-tune a seq2seq model on claim / negative-claim pairs.

Pairs come from a TSV (claim<TAB>negative_claim) or JSONL file with
"claim" and "negative_claim" keys. By default every pair is also used in
the reversed direction (negative claim as source, claim as target), since
each side of a pair refutes the other; disable with --no-reversed.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

import torch
from torch.utils.data import DataLoader
from transformers import AutoModelForSeq2SeqLM, AutoTokenizer


def load_pairs(path: str | Path) -> list[tuple[str, str]]:
    pairs: list[tuple[str, str]] = []
    with open(path, encoding="utf-8") as fp:
        for line_no, raw in enumerate(fp, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("{"):
                obj = json.loads(line)
                claim, negative = obj["claim"], obj["negative_claim"]
            else:
                parts = line.split("\t")
                if len(parts) != 2:
                    raise ValueError(f"line {line_no}: expected claim<TAB>negative_claim")
                claim, negative = parts
            if not claim or not negative:
                raise ValueError(f"line {line_no}: empty text")
            pairs.append((claim, negative))
    if not pairs:
        raise ValueError(f"no training pairs found in {path}")
    return pairs


def build_examples(
    pairs: list[tuple[str, str]], add_reversed: bool
) -> list[tuple[str, str]]:
    examples = list(pairs)
    if add_reversed:
        examples.extend((negative, claim) for claim, negative in pairs)
    return examples


def train(
    model,
    tokenizer,
    examples: list[tuple[str, str]],
    epochs: int,
    batch_size: int,
    lr: float,
    max_length: int,
    seed: int,
    device: str,
) -> list[float]:
    torch.manual_seed(seed)
    random.Random(seed).shuffle(examples)
    model.to(device)
    model.train()
    optimizer = torch.optim.AdamW(model.parameters(), lr=lr)

    def collate(batch: list[tuple[str, str]]):
        sources = [src for src, _ in batch]
        targets = [tgt for _, tgt in batch]
        encoded = tokenizer(
            sources, text_target=targets, return_tensors="pt",
            padding=True, truncation=True, max_length=max_length,
        )
        encoded["labels"][encoded["labels"] == tokenizer.pad_token_id] = -100
        return encoded

    loader = DataLoader(examples, batch_size=batch_size, collate_fn=collate)
    epoch_losses: list[float] = []
    for epoch in range(epochs):
        total = 0.0
        steps = 0
        for batch in loader:
            batch = {k: v.to(device) for k, v in batch.items()}
            loss = model(**batch).loss
            loss.backward()
            optimizer.step()
            optimizer.zero_grad()
            total += loss.item()
            steps += 1
        epoch_losses.append(total / max(steps, 1))
        print(f"epoch {epoch + 1}/{epochs}: mean loss {epoch_losses[-1]:.4f}")
    return epoch_losses


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genservice-train",
        description="fine-tune a seq2seq negation model on claim pairs",
    )
    parser.add_argument("--pairs", required=True,
                        help="TSV or JSONL file of claim / negative-claim pairs")
    parser.add_argument("--model", required=True,
                        help="base model identifier or checkpoint path")
    parser.add_argument("--output-dir", required=True)
    parser.add_argument("--epochs", type=int, default=3)
    parser.add_argument("--batch-size", type=int, default=8)
    parser.add_argument("--lr", type=float, default=3e-5)
    parser.add_argument("--max-length", type=int, default=128)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--device", default="cpu")
    parser.add_argument("--no-reversed", action="store_true",
                        help="train on the claim->negative direction only")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    pairs = load_pairs(args.pairs)
    examples = build_examples(pairs, add_reversed=not args.no_reversed)
    print(f"{len(pairs)} pairs, {len(examples)} training examples "
          f"({'with' if not args.no_reversed else 'without'} reversed direction)")

    tokenizer = AutoTokenizer.from_pretrained(args.model)
    model = AutoModelForSeq2SeqLM.from_pretrained(args.model)
    losses = train(
        model, tokenizer, examples,
        epochs=args.epochs, batch_size=args.batch_size, lr=args.lr,
        max_length=args.max_length, seed=args.seed, device=args.device,
    )
    if not all(loss == loss for loss in losses):  # NaN guard
        print("error: training diverged (NaN loss)", file=sys.stderr)
        return 1

    output = Path(args.output_dir)
    output.mkdir(parents=True, exist_ok=True)
    model.save_pretrained(output)
    tokenizer.save_pretrained(output)
    print(f"saved fine-tuned checkpoint to {output}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

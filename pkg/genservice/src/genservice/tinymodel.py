"""Build a minuscule randomly-initialized seq2seq checkpoint, offline.

Useful for tests and demos: the checkpoint loads through the exact same
code path as a real model but needs no network and generates in
milliseconds. Output quality is, by construction, noise.
"""
from __future__ import annotations

import json
from pathlib import Path

import torch
from transformers import BartConfig, BartForConditionalGeneration, BartTokenizer

_SPECIALS = ["<s>", "<pad>", "</s>", "<unk>", "<mask>"]


def build_tiny_checkpoint(path: str | Path, seed: int = 0) -> Path:
    """Write a tiny character-level BART-style checkpoint under path."""
    path = Path(path)
    path.mkdir(parents=True, exist_ok=True)

    chars = [chr(c) for c in range(33, 127)]
    gchars = ["Ġ" + c for c in chars]  # byte-level BPE space marker
    vocab = {tok: i for i, tok in enumerate(_SPECIALS + chars + gchars + ["Ġ"])}
    (path / "vocab.json").write_text(json.dumps(vocab), encoding="utf-8")
    (path / "merges.txt").write_text("#version: 0.2\n", encoding="utf-8")
    tokenizer = BartTokenizer(str(path / "vocab.json"), str(path / "merges.txt"))

    config = BartConfig(
        vocab_size=len(vocab),
        d_model=32,
        encoder_layers=1,
        decoder_layers=1,
        encoder_attention_heads=2,
        decoder_attention_heads=2,
        encoder_ffn_dim=64,
        decoder_ffn_dim=64,
        max_position_embeddings=256,
        pad_token_id=tokenizer.pad_token_id,
        bos_token_id=tokenizer.bos_token_id,
        eos_token_id=tokenizer.eos_token_id,
        decoder_start_token_id=tokenizer.eos_token_id,
        forced_eos_token_id=None,
    )
    torch.manual_seed(seed)
    model = BartForConditionalGeneration(config)
    model.save_pretrained(path)
    tokenizer.save_pretrained(path)
    return path


def main(argv: list[str] | None = None) -> int:
    import argparse

    parser = argparse.ArgumentParser(
        description="write a tiny random seq2seq checkpoint for tests/demos"
    )
    parser.add_argument("path")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)
    out = build_tiny_checkpoint(args.path, seed=args.seed)
    print(f"wrote tiny checkpoint to {out}")
    return 0


if __name__ == "__main__":
    import sys

    sys.exit(main())

"""Sequence-to-sequence negation model wrapper."""
from __future__ import annotations

import torch
from transformers import AutoModelForSeq2SeqLM, AutoTokenizer

from .config import ServiceConfig


class Seq2SeqNegator:
    """Batched claim-to-negative-claim generation on a loaded checkpoint.

    Decoding is greedy by default so a fixed model version answers
    deterministically; sampling is opt-in via config. A claim whose decoded
    output is empty is returned unchanged rather than answered with an empty
    string.
    """

    def __init__(self, config: ServiceConfig):
        if not config.model:
            raise ValueError("no model identifier or checkpoint path configured")
        self.config = config
        self.tokenizer = AutoTokenizer.from_pretrained(config.model)
        self.model = AutoModelForSeq2SeqLM.from_pretrained(config.model)
        self.model.eval()

    def generate_batch(self, claims: list[str]) -> list[str]:
        if not claims:
            return []
        encoded = self.tokenizer(
            claims,
            return_tensors="pt",
            padding=True,
            truncation=True,
            max_length=self.config.max_input_length,
        )
        generate_kwargs = dict(
            max_new_tokens=self.config.max_new_tokens,
            num_beams=1,
            do_sample=self.config.do_sample,
        )
        with torch.no_grad():
            if self.config.do_sample:
                torch.manual_seed(self.config.seed)
            output_ids = self.model.generate(**encoded, **generate_kwargs)
        decoded = self.tokenizer.batch_decode(output_ids, skip_special_tokens=True)
        return [
            text.strip() if text.strip() else claim
            for claim, text in zip(claims, decoded)
        ]

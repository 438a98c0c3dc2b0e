"""Access to data files shipped with the package."""
from __future__ import annotations

from importlib import resources


def _read(name: str) -> str:
    return resources.files("crossaug").joinpath(f"data/{name}").read_text("utf-8")


def desk_corpus_text() -> str:
    """The bundled 100-record demo corpus, in normalized record form."""
    return _read("desk_corpus.jsonl")


def desk_corpus_golden_text() -> str:
    """Expected `augment` output for the demo corpus under default settings."""
    return _read("desk_corpus.golden.jsonl")


def desk_corpus_golden_stats() -> str:
    """Expected stats report for the demo corpus under default settings."""
    return _read("desk_corpus.golden.stats")

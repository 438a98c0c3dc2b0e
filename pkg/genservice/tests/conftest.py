from __future__ import annotations

import pytest

from genservice.config import ServiceConfig
from genservice.model import Seq2SeqNegator
from genservice.tinymodel import build_tiny_checkpoint


@pytest.fixture(scope="session")
def tiny_checkpoint(tmp_path_factory) -> str:
    path = tmp_path_factory.mktemp("tiny-model")
    build_tiny_checkpoint(path, seed=0)
    return str(path)


@pytest.fixture(scope="session")
def tiny_config(tiny_checkpoint) -> ServiceConfig:
    return ServiceConfig(
        model=tiny_checkpoint, max_batch_size=4, request_timeout=30.0,
        max_new_tokens=8,
    )


@pytest.fixture(scope="session")
def tiny_negator(tiny_config) -> Seq2SeqNegator:
    return Seq2SeqNegator(tiny_config)

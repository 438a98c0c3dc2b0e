"""Service configuration from flags and environment variables."""
from __future__ import annotations

import os
from dataclasses import dataclass

ENV_PREFIX = "GENSERVICE_"


@dataclass(frozen=True)
class ServiceConfig:
    host: str = "127.0.0.1"
    port: int = 8000
    model: str = ""
    max_batch_size: int = 8
    request_timeout: float = 30.0
    max_input_length: int = 128
    max_new_tokens: int = 64
    do_sample: bool = False
    seed: int = 0

    def __post_init__(self) -> None:
        if self.max_batch_size < 1:
            raise ValueError("max_batch_size must be at least 1")
        if self.request_timeout <= 0:
            raise ValueError("request_timeout must be positive")

    @classmethod
    def from_env(cls, **overrides) -> "ServiceConfig":
        def env(name: str, default):
            raw = os.environ.get(ENV_PREFIX + name)
            if raw is None:
                return default
            if isinstance(default, bool):
                return raw.lower() in ("1", "true", "yes")
            return type(default)(raw)

        base = cls()
        values = {
            "host": env("HOST", base.host),
            "port": env("PORT", base.port),
            "model": env("MODEL", base.model),
            "max_batch_size": env("MAX_BATCH_SIZE", base.max_batch_size),
            "request_timeout": env("TIMEOUT", base.request_timeout),
            "max_input_length": env("MAX_INPUT_LENGTH", base.max_input_length),
            "max_new_tokens": env("MAX_NEW_TOKENS", base.max_new_tokens),
            "do_sample": env("DO_SAMPLE", base.do_sample),
            "seed": env("SEED", base.seed),
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

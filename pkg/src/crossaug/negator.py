"""Negative-claim generation: a deterministic rule generator and an HTTP client.

The rule generator is a stand-in for a learned model: it either inserts
"not" after the first auxiliary verb or swaps the first word found in an
antonym lexicon. The remote client speaks the generator plugin protocol
(POST /negate) so any external model can be dropped in.
"""
from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import IO, Iterable, Mapping, Protocol, Union
from urllib.parse import urlparse

import httpx

from .tokenizer import splice, tokenize

AUXILIARIES = frozenset(
    """is are was were has have had can could will would must may might
    does do did""".split()
)


class GeneratorKind(Enum):
    RULE = "rule"
    REMOTE = "remote"


@dataclass(frozen=True)
class GeneratorSpec:
    """How negative claims are produced: built-in rules or a remote service."""

    kind: GeneratorKind = GeneratorKind.RULE
    endpoint: str = ""
    timeout: float = 30.0
    max_in_flight: int = 4
    lexicon_path: Union[str, Path, None] = None

    def __post_init__(self) -> None:
        if self.kind is GeneratorKind.REMOTE:
            parsed = urlparse(self.endpoint)
            if parsed.scheme not in ("http", "https") or not parsed.netloc:
                raise ValueError(f"invalid generator endpoint {self.endpoint!r}")
            if self.timeout <= 0:
                raise ValueError("timeout must be positive")
            if self.max_in_flight < 1:
                raise ValueError("max_in_flight must be at least 1")


class GenerationStatus(Enum):
    OK = "OK"
    UNCHANGED = "UNCHANGED"
    FAILED = "FAILED"


@dataclass(frozen=True)
class GenerationResult:
    negative_claim: str
    status: GenerationStatus
    detail: str | None = None


def _result_from_output(claim: str, output: str) -> GenerationResult:
    if output == claim:
        return GenerationResult(claim, GenerationStatus.UNCHANGED)
    return GenerationResult(output, GenerationStatus.OK)


def _failure(detail: str) -> GenerationResult:
    # failed results carry no text: UNCHANGED alone means "equals the input"
    return GenerationResult("", GenerationStatus.FAILED, detail)


class Generator(Protocol):
    def generate(self, claim: str) -> GenerationResult: ...


def load_lexicon(source: Union[str, Path, IO[str], Iterable[str]]) -> dict[str, str]:
    """Read word<TAB>antonym pairs; lines starting with # are comments."""
    if isinstance(source, (str, Path)):
        with open(source, encoding="utf-8") as fp:
            return load_lexicon(fp)
    lexicon: dict[str, str] = {}
    for raw in source:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise ValueError(f"bad lexicon line: {raw.rstrip()!r}")
        lexicon[parts[0].lower()] = parts[1]
    return lexicon


def default_lexicon() -> dict[str, str]:
    text = (
        resources.files("crossaug").joinpath("data/antonyms.txt").read_text("utf-8")
    )
    return load_lexicon(text.splitlines())


def _match_capitalization(original: str, replacement: str) -> str:
    if original[:1].isupper() and replacement:
        return replacement[0].upper() + replacement[1:]
    return replacement


class RuleGenerator:
    """Deterministic fallback generator.

    Rules in priority order, first match wins:
      1. insert "not" after the first auxiliary verb not already negated;
      2. replace the first word found in the antonym lexicon
         (case-insensitive lookup, initial capitalization preserved).
    When neither applies the claim is returned unchanged.
    """

    def __init__(self, lexicon: Mapping[str, str] | None = None):
        self.lexicon = dict(default_lexicon() if lexicon is None else lexicon)

    def generate(self, claim: str) -> GenerationResult:
        seq = tokenize(claim)
        texts = seq.texts()
        for i, text in enumerate(texts):
            if text in AUXILIARIES and (
                i + 1 >= len(texts) or texts[i + 1].lower() != "not"
            ):
                return _result_from_output(claim, splice(seq, i, i + 1, f"{text} not"))
        for i, text in enumerate(texts):
            antonym = self.lexicon.get(text.lower())
            if antonym is not None:
                replacement = _match_capitalization(text, antonym)
                return _result_from_output(claim, splice(seq, i, i + 1, replacement))
        return GenerationResult(claim, GenerationStatus.UNCHANGED)


class RemoteGenerator:
    """Client for the generator plugin protocol.

    POSTs {"id", "claim"} to <endpoint>/negate and expects a 200 response
    echoing the id alongside a negative_claim string; anything else is a
    FAILED result. At most max_in_flight requests run concurrently.
    """

    def __init__(self, spec: GeneratorSpec, client: httpx.Client | None = None):
        if spec.kind is not GeneratorKind.REMOTE:
            raise ValueError("RemoteGenerator requires a REMOTE spec")
        self.spec = spec
        base = spec.endpoint.rstrip("/")
        self.url = base if base.endswith("/negate") else base + "/negate"
        self._client = client or httpx.Client(timeout=spec.timeout)
        self._owns_client = client is None
        self._slots = threading.BoundedSemaphore(spec.max_in_flight)

    def generate(self, claim: str) -> GenerationResult:
        request_id = uuid.uuid4().hex
        payload = {"id": request_id, "claim": claim}
        with self._slots:
            try:
                response = self._client.post(self.url, json=payload)
            except httpx.HTTPError as exc:
                return _failure(f"request failed: {exc}")
        if response.status_code != 200:
            return _failure(f"unexpected status {response.status_code}")
        try:
            body = response.json()
        except ValueError:
            return _failure("response is not valid JSON")
        if not isinstance(body, dict) or not isinstance(body.get("negative_claim"), str):
            return _failure("response missing negative_claim string")
        if body.get("id") != request_id:
            return _failure("response id does not match request id")
        output = body["negative_claim"].strip()
        if not output:
            return _failure("empty negative_claim")
        return _result_from_output(claim, output)

    def close(self) -> None:
        if self._owns_client:
            self._client.close()

    def __enter__(self) -> "RemoteGenerator":
        return self

    def __exit__(self, *exc_info: object) -> None:
        self.close()


def build_generator(spec: GeneratorSpec) -> Generator:
    if spec.kind is GeneratorKind.RULE:
        lexicon = None if spec.lexicon_path is None else load_lexicon(spec.lexicon_path)
        return RuleGenerator(lexicon)
    return RemoteGenerator(spec)


def generate_negative(
    claim: str, generator: Union[GeneratorSpec, Generator]
) -> GenerationResult:
    """Produce one candidate negative claim for the given claim."""
    if not claim:
        raise ValueError("claim must be non-empty")
    if isinstance(generator, GeneratorSpec):
        generator = build_generator(generator)
    return generator.generate(claim)

from __future__ import annotations

from crossaug.negator import GenerationResult, GenerationStatus


class StaticGenerator:
    """Scripted generator for tests: claim -> fixed output, optional failures."""

    def __init__(self, mapping: dict[str, str] | None = None, fail: set[str] | None = None):
        self.mapping = mapping or {}
        self.fail = fail or set()
        self.calls = 0

    def generate(self, claim: str) -> GenerationResult:
        self.calls += 1
        if claim in self.fail:
            return GenerationResult("", GenerationStatus.FAILED, "scripted failure")
        output = self.mapping.get(claim, claim)
        if output == claim:
            return GenerationResult(claim, GenerationStatus.UNCHANGED)
        return GenerationResult(output, GenerationStatus.OK)

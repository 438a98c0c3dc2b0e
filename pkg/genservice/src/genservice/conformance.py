"""Black-box conformance checks for the /negate protocol.

Runnable against any endpoint:

    python -m genservice.conformance http://127.0.0.1:8000

Each check returns normally or raises ConformanceFailure.
"""
from __future__ import annotations

import sys
import uuid

import httpx


class ConformanceFailure(AssertionError):
    pass


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise ConformanceFailure(message)


def check_health(client: httpx.Client) -> None:
    response = client.get("/health")
    _expect(response.status_code == 200, f"/health returned {response.status_code}")


def check_valid_request(client: httpx.Client) -> None:
    request_id = uuid.uuid4().hex
    response = client.post(
        "/negate", json={"id": request_id, "claim": "The drug works."}
    )
    _expect(response.status_code == 200, f"expected 200, got {response.status_code}")
    body = response.json()
    _expect(isinstance(body, dict), "response body is not an object")
    _expect(body.get("id") == request_id, "response id does not echo request id")
    _expect(
        isinstance(body.get("negative_claim"), str),
        "negative_claim missing or not a string",
    )
    _expect(len(body["negative_claim"]) > 0, "negative_claim is empty")


def check_utf8_round_trip(client: httpx.Client) -> None:
    claim = "Zürich's première tram line opened in 1882 — naïvely speaking."
    response = client.post("/negate", json={"id": "utf8", "claim": claim})
    _expect(response.status_code == 200, f"expected 200, got {response.status_code}")
    # httpx decodes strictly; invalid UTF-8 would raise before this point
    body = response.json()
    _expect(isinstance(body.get("negative_claim"), str), "bad negative_claim")
    body["negative_claim"].encode("utf-8")


def check_malformed_requests(client: httpx.Client) -> None:
    cases = [
        ("not an object", "[1, 2]"),
        ("missing claim", '{"id": "x"}'),
        ("missing id", '{"claim": "y"}'),
        ("claim wrong type", '{"id": "x", "claim": 3}'),
        ("empty claim", '{"id": "x", "claim": ""}'),
        ("not json", "{{{"),
    ]
    for name, payload in cases:
        response = client.post(
            "/negate", content=payload, headers={"Content-Type": "application/json"}
        )
        _expect(
            response.status_code == 400,
            f"malformed case {name!r}: expected 400, got {response.status_code}",
        )


ALL_CHECKS = [
    check_health,
    check_valid_request,
    check_utf8_round_trip,
    check_malformed_requests,
]


def run_conformance(client: httpx.Client) -> list[tuple[str, str]]:
    """Run every check; returns (name, 'ok'|failure message) per check."""
    results = []
    for check in ALL_CHECKS:
        try:
            check(client)
            results.append((check.__name__, "ok"))
        except (ConformanceFailure, httpx.HTTPError) as exc:
            results.append((check.__name__, str(exc)))
    return results


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if len(argv) != 1:
        print("usage: python -m genservice.conformance <base-url>", file=sys.stderr)
        return 2
    with httpx.Client(base_url=argv[0].rstrip("/"), timeout=30.0) as client:
        results = run_conformance(client)
    failed = 0
    for name, status in results:
        print(f"{name}: {status}")
        if status != "ok":
            failed += 1
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())

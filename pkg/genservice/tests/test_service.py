import threading
import time

import pytest
from fastapi.testclient import TestClient

from genservice.app import create_app
from genservice.config import ServiceConfig
from genservice.model import Seq2SeqNegator


@pytest.fixture()
def client(tiny_config, tiny_negator):
    app = create_app(tiny_config, negator=tiny_negator)
    with TestClient(app) as test_client:
        yield test_client


def test_health_ready(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json()["status"] == "ok"


def test_negate_success_and_id_echo(client):
    response = client.post("/negate", json={"id": "r-1", "claim": "The drug works."})
    assert response.status_code == 200
    body = response.json()
    assert body["id"] == "r-1"
    assert isinstance(body["negative_claim"], str)
    assert body["negative_claim"]


def test_negate_deterministic_for_greedy_decoding(client):
    results = {
        client.post("/negate", json={"id": str(i), "claim": "Water boils."}).json()[
            "negative_claim"
        ]
        for i in range(3)
    }
    assert len(results) == 1


def test_malformed_body_returns_400(client):
    for payload in ('{"id": "x"}', '{"claim": "y"}', "[1]", "{{{", '{"id":"x","claim":""}'):
        response = client.post(
            "/negate", content=payload, headers={"Content-Type": "application/json"}
        )
        assert response.status_code == 400, payload


def test_unknown_path_is_404(client):
    assert client.post("/something", json={}).status_code == 404


def test_health_before_model_load_completes(tiny_config, monkeypatch):
    gate = threading.Event()
    original_init = Seq2SeqNegator.__init__

    def slow_init(self, config):
        gate.wait(timeout=10)
        original_init(self, config)

    monkeypatch.setattr(Seq2SeqNegator, "__init__", slow_init)
    app = create_app(tiny_config)
    with TestClient(app) as test_client:
        response = test_client.get("/health")
        assert response.status_code == 503
        assert response.json()["status"] == "loading"
        negate = test_client.post("/negate", json={"id": "x", "claim": "y"})
        assert negate.status_code == 503
        gate.set()
        deadline = time.time() + 20
        while time.time() < deadline:
            if test_client.get("/health").status_code == 200:
                break
            time.sleep(0.05)
        assert test_client.get("/health").status_code == 200


def test_health_reports_load_failure(tmp_path):
    config = ServiceConfig(model=str(tmp_path / "missing"))
    app = create_app(config)
    with TestClient(app) as test_client:
        deadline = time.time() + 20
        status = None
        while time.time() < deadline:
            response = test_client.get("/health")
            status = response.json().get("status")
            if status == "error":
                break
            time.sleep(0.05)
        assert status == "error"
        assert response.status_code == 503


def test_timeout_returns_500(tiny_config, tiny_negator, monkeypatch):
    config = ServiceConfig(
        model=tiny_config.model, max_batch_size=1, request_timeout=0.05
    )

    def slow_generate(claims):
        time.sleep(0.5)
        return list(claims)

    app = create_app(config, negator=tiny_negator)
    with TestClient(app) as test_client:
        test_client.app.state.service.worker.fn = slow_generate
        response = test_client.post("/negate", json={"id": "t", "claim": "slow one"})
        assert response.status_code == 500
        assert "timed out" in response.json()["error"]


def test_generation_error_returns_500(tiny_config, tiny_negator):
    app = create_app(tiny_config, negator=tiny_negator)
    with TestClient(app) as test_client:
        def boom(claims):
            raise RuntimeError("kaboom")

        test_client.app.state.service.worker.fn = boom
        response = test_client.post("/negate", json={"id": "e", "claim": "boom"})
        assert response.status_code == 500
        assert "kaboom" in response.json()["error"]


def test_concurrent_requests_echo_their_own_ids(client):
    import concurrent.futures

    def call(i: int):
        response = client.post(
            "/negate", json={"id": f"req-{i}", "claim": f"Claim number {i} holds."}
        )
        assert response.status_code == 200
        return i, response.json()["id"]

    with concurrent.futures.ThreadPoolExecutor(max_workers=8) as pool:
        for i, echoed in pool.map(call, range(32)):
            assert echoed == f"req-{i}"


def test_empty_decode_falls_back_to_input_claim(tiny_negator, monkeypatch):
    monkeypatch.setattr(
        tiny_negator.tokenizer, "batch_decode", lambda ids, **kwargs: ["   "]
    )
    assert tiny_negator.generate_batch(["Stays."]) == ["Stays."]

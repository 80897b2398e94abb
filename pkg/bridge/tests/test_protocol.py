from __future__ import annotations

import io
import json
import random

from nmtbridge.mock import EchoTrainer
from nmtbridge.protocol import BridgeSession, serve


def run_protocol(requests, factory=EchoTrainer, workspace=None):
    stdin = io.StringIO("\n".join(json.dumps(r) for r in requests) + "\n")
    stdout = io.StringIO()
    serve(factory, stdin, stdout, workspace=workspace)
    return [json.loads(line) for line in stdout.getvalue().splitlines()]


class TestProtocolConformance:
    def test_exactly_one_response_per_request(self):
        requests = [
            {"cmd": "train", "pairs": [["a b", "a c"]], "steps": 5, "seed": 1},
            {"cmd": "generate", "inputs": ["a b"]},
            {"cmd": "bogus"},
            {"cmd": "train", "pairs": "notalist", "steps": 1},
            {"cmd": "reset"},
            {"cmd": "generate", "inputs": ["a b"]},
        ]
        responses = run_protocol(requests)
        assert len(responses) == len(requests)
        assert [r["ok"] for r in responses] == [True, True, False, False, True, False]

    def test_train_echoes_cumulative_steps(self):
        responses = run_protocol(
            [
                {"cmd": "train", "pairs": [["a b", "a c"]], "steps": 7, "seed": 1},
                {"cmd": "train", "pairs": [["a b", "a c"]], "steps": 3, "seed": 1},
            ]
        )
        assert responses[0] == {"ok": True, "steps_trained": 7}
        assert responses[1] == {"ok": True, "steps_trained": 10}

    def test_reset_then_generate_is_error(self):
        responses = run_protocol(
            [
                {"cmd": "train", "pairs": [["a b", "a c"]], "steps": 1, "seed": 1},
                {"cmd": "reset"},
                {"cmd": "generate", "inputs": ["a b"]},
            ]
        )
        assert responses[2]["ok"] is False
        assert "untrained" in responses[2]["error"]

    def test_generate_length_preservation_100_batches(self):
        rng = random.Random(404)
        vocab = ["sun", "moon", "star", "red", "blue"]
        session = BridgeSession(EchoTrainer)
        pairs = [["sun moon", "sun taco"], ["red blue star", "red beet star"]]
        session.handle({"cmd": "train", "pairs": pairs, "steps": 1, "seed": 0})
        for _ in range(100):
            batch = [
                " ".join(rng.choices(vocab, k=rng.randint(1, 5)))
                for _ in range(rng.randint(1, 8))
            ]
            response = session.handle({"cmd": "generate", "inputs": batch})
            assert response["ok"] is True
            assert len(response["outputs"]) == len(batch)

    def test_malformed_json_line_gets_error_response(self):
        stdin = io.StringIO('{"cmd": "reset"}\nnot json at all\n')
        stdout = io.StringIO()
        serve(EchoTrainer, stdin, stdout)
        responses = [json.loads(line) for line in stdout.getvalue().splitlines()]
        assert len(responses) == 2
        assert responses[0]["ok"] is True
        assert responses[1]["ok"] is False

    def test_workspace_persists_within_session(self, tmp_path):
        workspace = tmp_path / "ws"
        session = BridgeSession(EchoTrainer, workspace=str(workspace))
        session.handle({"cmd": "train", "pairs": [["a b", "a c"]], "steps": 2, "seed": 0})
        first_trainer = session.trainer
        session.handle({"cmd": "train", "pairs": [["a b", "a c"]], "steps": 2, "seed": 0})
        assert session.trainer is first_trainer  # resumed, not rebuilt
        assert session.trainer.steps_trained == 4
        assert workspace.exists()

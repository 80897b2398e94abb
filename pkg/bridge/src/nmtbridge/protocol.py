"""Line-delimited JSON protocol server around a trainable apprentice.

Requests (one JSON object per line on stdin, one response line on stdout):

    {"cmd": "train", "pairs": [["orig", "pun"], ...], "steps": N, "seed": S}
        -> {"ok": true, "steps_trained": T}     # T = cumulative steps
    {"cmd": "generate", "inputs": ["title", ...]}
        -> {"ok": true, "outputs": ["title", ...]}
    {"cmd": "reset"} -> {"ok": true}

Malformed or failing requests produce a single {"ok": false, "error": ...}
line; the session keeps serving.
"""

from __future__ import annotations

import json
import sys
import tempfile
from pathlib import Path
from typing import IO, Callable

PROTOCOL_VERSION = 1


class BridgeSession:
    """One protocol session: a model workspace plus the cumulative counter.

    The factory builds a fresh trainer on the first train after start/reset,
    seeded from that request. A checkpoint is saved into the workspace after
    every train call so the session state is inspectable and restartable.
    """

    def __init__(self, trainer_factory: Callable[[int], object], workspace: str | None = None):
        self._factory = trainer_factory
        self.workspace = Path(workspace) if workspace else Path(tempfile.mkdtemp(prefix="nmt-bridge-"))
        self.workspace.mkdir(parents=True, exist_ok=True)
        self.trainer = None

    def handle(self, request: dict) -> dict:
        cmd = request.get("cmd")
        if cmd == "reset":
            self.trainer = None
            return {"ok": True}
        if cmd == "train":
            pairs = []
            for item in request.get("pairs", []):
                if not isinstance(item, (list, tuple)) or len(item) != 2:
                    raise ValueError(f"pair must have two sides, got {item!r}")
                source, target = str(item[0]).split(), str(item[1]).split()
                if not source or not target:
                    raise ValueError("pair sides must be nonempty")
                pairs.append((source, target))
            steps = int(request.get("steps", 0))
            if self.trainer is None:
                self.trainer = self._factory(int(request.get("seed", 0)))
            total = self.trainer.train_steps(pairs, steps)
            self._checkpoint()
            return {"ok": True, "steps_trained": total}
        if cmd == "generate":
            if self.trainer is None or self.trainer.steps_trained == 0:
                raise ValueError("untrained model")
            inputs = [str(t).split() for t in request.get("inputs", [])]
            outputs = self.trainer.generate(inputs)
            return {"ok": True, "outputs": [" ".join(words) for words in outputs]}
        raise ValueError(f"unknown command {request.get('cmd')!r}")

    def _checkpoint(self) -> None:
        save = getattr(self.trainer, "state_dict", None)
        if save is None:
            return
        try:
            import torch

            torch.save(save(), self.workspace / "checkpoint.pt")
        except ImportError:
            pass


def serve(
    trainer_factory: Callable[[int], object],
    stdin: IO[str] | None = None,
    stdout: IO[str] | None = None,
    workspace: str | None = None,
) -> None:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    session = BridgeSession(trainer_factory, workspace=workspace)
    for line in stdin:
        line = line.strip()
        if not line:
            continue
        try:
            response = session.handle(json.loads(line))
        except Exception as exc:
            response = {"ok": False, "error": str(exc)}
        stdout.write(json.dumps(response) + "\n")
        stdout.flush()

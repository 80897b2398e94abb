"""The apprentice: a deterministic, incrementally trainable substitution learner.

The model memorizes full (original -> pun) pairs and per-word substitution
counts learned from edit alignments, and generates by argmax lookup. It stands
behind the same line-delimited JSON protocol an external neural apprentice
would implement, so the two are interchangeable from the harness's viewpoint.
"""

from __future__ import annotations

import json
import random
import sys
from typing import IO, Iterable, Sequence

from .textdata import ParallelPair, Words


def align_pair(original: Sequence[str], punned: Sequence[str]) -> list[tuple[str, str]]:
    """Substitution links from a minimal word-level edit alignment.

    Ties in the dynamic program prefer substitution/match over insert+delete.
    Only links with unequal words are returned.
    """
    a, b = tuple(original), tuple(punned)
    if not a or not b:
        raise ValueError("both sequences must be nonempty")
    rows = len(a) + 1
    cols = len(b) + 1
    cost = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        cost[i][0] = i
    for j in range(cols):
        cost[0][j] = j
    for i in range(1, rows):
        for j in range(1, cols):
            sub = cost[i - 1][j - 1] + (a[i - 1] != b[j - 1])
            cost[i][j] = min(sub, cost[i - 1][j] + 1, cost[i][j - 1] + 1)
    links = []
    i, j = len(a), len(b)
    while i > 0 and j > 0:
        sub = cost[i - 1][j - 1] + (a[i - 1] != b[j - 1])
        if cost[i][j] == sub:
            if a[i - 1] != b[j - 1]:
                links.append((a[i - 1], b[j - 1]))
            i -= 1
            j -= 1
        elif cost[i][j] == cost[i - 1][j] + 1:
            i -= 1
        else:
            j -= 1
    links.reverse()
    return links


class ApprenticeModel:
    """Count-based substitution model with cumulative sampled training."""

    def __init__(self, seed: int = 0):
        self.seed = seed
        self.substitution_counts: dict[str, dict[str, int]] = {}
        self.pair_memory: dict[Words, dict[Words, int]] = {}
        self.steps_trained = 0
        self._rng = random.Random(seed)

    def train(self, corpus: Sequence[ParallelPair], steps: int) -> "ApprenticeModel":
        """Apply `steps` sampled updates, each reinforcing one corpus pair."""
        if steps < 0:
            raise ValueError("steps must be nonnegative")
        if steps > 0 and not corpus:
            raise ValueError("cannot train on an empty corpus")
        for _ in range(steps):
            pair = corpus[self._rng.randrange(len(corpus))]
            puns = self.pair_memory.setdefault(pair.original, {})
            puns[pair.punned] = puns.get(pair.punned, 0) + 1
            for orig_word, new_word in align_pair(pair.original, pair.punned):
                counts = self.substitution_counts.setdefault(orig_word, {})
                counts[new_word] = counts.get(new_word, 0) + 1
        self.steps_trained += steps
        return self

    def generate_one(self, title: Sequence[str]) -> Words:
        title = tuple(title)
        memorized = self.pair_memory.get(title)
        if memorized:
            # Highest count wins; lexicographically smallest pun breaks ties.
            return min(memorized, key=lambda pun: (-memorized[pun], pun))
        best_index = -1
        best_mass = 0
        for index, word in enumerate(title):
            mass = sum(self.substitution_counts.get(word, {}).values())
            if mass > best_mass:
                best_mass = mass
                best_index = index
        if best_index < 0:
            return title  # nothing learned about any word: copy through
        counts = self.substitution_counts[title[best_index]]
        replacement = min(counts, key=lambda w: (-counts[w], w))
        return title[:best_index] + (replacement,) + title[best_index + 1 :]

    def generate(self, titles: Sequence[Sequence[str]]) -> list[Words]:
        if self.steps_trained == 0:
            raise ValueError("model has not been trained")
        return [self.generate_one(t) for t in titles]


# ---------------------------------------------------------------------------
# Wire protocol: one JSON object per line over stdin/stdout.
#
#   {"cmd": "train", "pairs": [["orig", "pun"], ...], "steps": N, "seed": S}
#       -> {"ok": true, "steps_trained": T}
#   {"cmd": "generate", "inputs": ["title", ...]}
#       -> {"ok": true, "outputs": ["title", ...]}
#   {"cmd": "reset"} -> {"ok": true}
# ---------------------------------------------------------------------------


def _pairs_from_wire(raw_pairs: Iterable[Sequence[str]]) -> list[ParallelPair]:
    pairs = []
    for item in raw_pairs:
        if len(item) != 2:
            raise ValueError(f"pair must have two sides, got {item!r}")
        original, punned = tuple(str(item[0]).split()), tuple(str(item[1]).split())
        pairs.append(ParallelPair(original=original, punned=punned, source="master"))
    return pairs


def _handle_request(request: dict, state: dict) -> dict:
    cmd = request.get("cmd")
    if cmd == "reset":
        state["model"] = None
        return {"ok": True}
    if cmd == "train":
        pairs = _pairs_from_wire(request.get("pairs", []))
        steps = int(request.get("steps", 0))
        if state["model"] is None:
            state["model"] = ApprenticeModel(seed=int(request.get("seed", 0)))
        model = state["model"]
        model.train(pairs, steps)
        return {"ok": True, "steps_trained": model.steps_trained}
    if cmd == "generate":
        model = state["model"]
        if model is None or model.steps_trained == 0:
            raise ValueError("untrained model")
        inputs = [tuple(str(t).split()) for t in request.get("inputs", [])]
        outputs = model.generate(inputs)
        return {"ok": True, "outputs": [" ".join(words) for words in outputs]}
    raise ValueError(f"unknown command {cmd!r}")


def serve(stdin: IO[str] | None = None, stdout: IO[str] | None = None) -> None:
    """Run the reference model behind the wire protocol until end-of-input."""
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    state: dict = {"model": None}
    for line in stdin:
        line = line.strip()
        if not line:
            continue
        try:
            response = _handle_request(json.loads(line), state)
        except Exception as exc:  # one diagnostic line per bad request
            response = {"ok": False, "error": str(exc)}
        stdout.write(json.dumps(response) + "\n")
        stdout.flush()


class ReferenceApprentice:
    """In-process apprentice with the same train/generate/reset surface."""

    def __init__(self):
        self._model: ApprenticeModel | None = None

    def train(self, pairs: Sequence[ParallelPair], steps: int, seed: int) -> int:
        if self._model is None:
            self._model = ApprenticeModel(seed=seed)
        self._model.train(pairs, steps)
        return self._model.steps_trained

    def generate(self, titles: Sequence[Words]) -> list[Words]:
        if self._model is None:
            raise ValueError("untrained model")
        return self._model.generate(titles)

    def reset(self) -> None:
        self._model = None

    def close(self) -> None:
        pass


class BridgeError(RuntimeError):
    """The external apprentice rejected a request or died."""


class BridgeApprentice:
    """Client for an external apprentice speaking the wire protocol."""

    def __init__(self, command: Sequence[str]):
        import subprocess

        self._command = list(command)
        self._process = subprocess.Popen(
            self._command,
            stdin=subprocess.PIPE,
            stdout=subprocess.PIPE,
            text=True,
            bufsize=1,
        )

    def _request(self, payload: dict) -> dict:
        if self._process.poll() is not None:
            raise BridgeError(f"apprentice process {self._command} exited early")
        self._process.stdin.write(json.dumps(payload) + "\n")
        self._process.stdin.flush()
        line = self._process.stdout.readline()
        if not line:
            raise BridgeError(f"apprentice process {self._command} closed its output")
        try:
            response = json.loads(line)
        except json.JSONDecodeError as exc:
            raise BridgeError(f"bad response line from apprentice: {line!r}") from exc
        if not response.get("ok"):
            raise BridgeError(str(response.get("error", "apprentice reported failure")))
        return response

    def train(self, pairs: Sequence[ParallelPair], steps: int, seed: int) -> int:
        wire_pairs = [[" ".join(p.original), " ".join(p.punned)] for p in pairs]
        response = self._request({"cmd": "train", "pairs": wire_pairs, "steps": steps, "seed": seed})
        return int(response.get("steps_trained", 0))

    def generate(self, titles: Sequence[Words]) -> list[Words]:
        inputs = [" ".join(t) for t in titles]
        response = self._request({"cmd": "generate", "inputs": inputs})
        outputs = response.get("outputs")
        if not isinstance(outputs, list) or len(outputs) != len(inputs):
            raise BridgeError("generate response is not aligned with its inputs")
        return [tuple(str(o).split()) for o in outputs]

    def reset(self) -> None:
        self._request({"cmd": "reset"})

    def close(self) -> None:
        if self._process.poll() is None:
            self._process.stdin.close()
            try:
                self._process.wait(timeout=10)
            except Exception:
                self._process.kill()


if __name__ == "__main__":
    serve()

"""Deterministic mock trainer: memorizes pairs, copies unknown inputs.

Serves the same wire protocol as the neural model without any torch cost;
used for protocol-conformance testing and as a harness smoke target.

    python -m nmtbridge.mock
"""

from __future__ import annotations

from .protocol import serve


class EchoTrainer:
    def __init__(self, seed: int = 0):
        self.seed = seed
        self.steps_trained = 0
        self.memory: dict[tuple[str, ...], list[str]] = {}

    def train_steps(self, pairs, steps: int) -> int:
        if steps < 0:
            raise ValueError("steps must be nonnegative")
        if steps > 0 and not pairs:
            raise ValueError("cannot train on an empty corpus")
        for source, target in pairs:
            self.memory[tuple(source)] = list(target)
        self.steps_trained += steps
        return self.steps_trained

    def generate(self, titles) -> list[list[str]]:
        if self.steps_trained == 0:
            raise ValueError("untrained model")
        return [self.memory.get(tuple(t), list(t)) for t in titles]


def main() -> None:
    serve(EchoTrainer)


if __name__ == "__main__":
    main()

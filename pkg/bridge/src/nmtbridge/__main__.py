"""Serve the neural apprentice over stdin/stdout.

    python -m nmtbridge [--config bridge.json] [--workspace DIR]

The JSON config file carries model hyperparameters (embedding_dim,
hidden_dim, layers, dropout, learning_rate, batch_size, copy_attention);
unknown keys are kept as pass-through.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="nmtbridge")
    parser.add_argument("--config", help="JSON file with model hyperparameters")
    parser.add_argument("--workspace", help="checkpoint directory (default: temp dir)")
    args = parser.parse_args(argv)

    from .model import ModelConfig, NeuralApprentice
    from .protocol import serve

    raw = {}
    if args.config:
        raw = json.loads(Path(args.config).read_text(encoding="utf-8"))
    config = ModelConfig.from_dict(raw)

    def factory(seed: int) -> NeuralApprentice:
        return NeuralApprentice(config, seed=seed)

    try:
        serve(factory, workspace=args.workspace)
    except Exception as exc:
        print(f"fatal: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

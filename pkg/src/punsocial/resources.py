"""Default resource resolution: PUNSOCIAL_DATA_DIR or the bundled sample data."""

from __future__ import annotations

import os
from importlib import resources as importlib_resources
from pathlib import Path

DATA_DIR_ENV = "PUNSOCIAL_DATA_DIR"

DEFAULT_FILES = {
    "food": "food_words.txt",
    "pos": "pos_lexicon.tsv",
    "pron": "pronunciations.tsv",
    "inventory": "phoneme_inventory.tsv",
    "embeddings": "embeddings_50d.txt",
    "titles": "titles.tsv",
    "comments": "comments.txt",
}

EMBEDDING_DIM = 50


def bundled_data_dir() -> Path:
    return Path(importlib_resources.files("punsocial") / "data")


def data_root() -> Path:
    env = os.environ.get(DATA_DIR_ENV)
    return Path(env) if env else bundled_data_dir()


def resource_path(kind: str, explicit: str | None = None) -> Path:
    """Resolve a resource file: explicit path, else data root + default name."""
    if explicit:
        return Path(explicit)
    if kind not in DEFAULT_FILES:
        raise KeyError(f"unknown resource kind {kind!r}")
    return data_root() / DEFAULT_FILES[kind]

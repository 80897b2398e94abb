from __future__ import annotations

import pytest

from punsocial import resources
from punsocial.evolution import EvolutionConfig
from punsocial.phonetics import Transcriber
from punsocial.semantics import load_embeddings
from punsocial.textdata import filter_titles, load_lexicon, read_titles


@pytest.fixture(autouse=True)
def _no_data_dir_env(monkeypatch):
    # Tests always run against the bundled sample data.
    monkeypatch.delenv(resources.DATA_DIR_ENV, raising=False)


@pytest.fixture(scope="session")
def data_dir():
    return resources.bundled_data_dir()


@pytest.fixture(scope="session")
def lexicon(data_dir):
    return load_lexicon(data_dir / "food_words.txt", data_dir / "pos_lexicon.tsv")


@pytest.fixture(scope="session")
def store(data_dir):
    return load_embeddings(data_dir / "embeddings_50d.txt", 50)


@pytest.fixture(scope="session")
def transcriber(data_dir):
    return Transcriber.from_file(data_dir / "pronunciations.tsv")


@pytest.fixture(scope="session")
def sample_titles(data_dir):
    records = read_titles(data_dir / "titles.tsv")
    return filter_titles(records, 100_000, require_multiword=True)


@pytest.fixture(scope="session")
def desk_config():
    # Desk-scale evolutionary settings used across the suite.
    return EvolutionConfig(mu=16, lambda_=16, generations=5, seed=42)

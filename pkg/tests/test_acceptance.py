"""Acceptance suite: every criterion runs at its stated tolerance and prints
one PASS line (failures surface as ordinary pytest failures)."""

from __future__ import annotations

import math
import random
import time

import pytest

from punsocial import metrics, semantics
from punsocial.apprentice import ReferenceApprentice
from punsocial.cli import derive_seed, main
from punsocial.evolution import (
    EvolutionConfig,
    FitnessVector,
    crowding_distance,
    nondominated_sort,
)
from punsocial.metrics import MetricTrajectory, aggregate, pinc, sentence_bleu
from punsocial.phonetics import ProsodyWeights, Transcriber, prosody
from punsocial.socialization import ExperimentConfig, MasterJudge, curate, run_experiment
from punsocial.textdata import (
    dedupe_pairs,
    match_comment,
    read_corpus,
    word_edit_distance,
)

DESK_MASTER_SEED = 42
DESK_SOCIAL_SEED = 7
STYLES = ("authoritarian", "authoritative", "permissive", "neglecting")


def ok(name: str) -> None:
    print(f"ACCEPTANCE {name}: PASS")


# ---------------------------------------------------------------------------
# Pinned desk-scale run: 50 titles, 500-word lexicon, 50-dim embeddings,
# mu = lambda = 16, 5 generations, then 5 socialization iterations per style.
# ---------------------------------------------------------------------------


@pytest.fixture(scope="module")
def desk_run(tmp_path_factory):
    root = tmp_path_factory.mktemp("desk")
    assert main(["prepare", "--out", str(root / "prep")]) == 0
    assert main(
        [
            "master", "--mu", "16", "--lambda", "16", "--generations", "5",
            "--seed", str(DESK_MASTER_SEED), "--out", str(root / "master"),
        ]
    ) == 0
    assert main(
        [
            "socialize", "--style", "all", "--iterations", "5", "--steps", "1000",
            "--seed", str(DESK_SOCIAL_SEED),
            "--master-corpus", str(root / "master" / "master_corpus.tsv"),
            "--peer-corpus", str(root / "prep" / "peer_corpus.tsv"),
            "--out", str(root / "soc"),
        ]
    ) == 0
    return root


@pytest.fixture(scope="module")
def desk_corpora(desk_run):
    master = read_corpus(desk_run / "master" / "master_corpus.tsv")
    peer = read_corpus(desk_run / "prep" / "peer_corpus.tsv")
    return master, peer


@pytest.fixture(scope="module")
def desk_judge(lexicon, store, transcriber):
    return MasterJudge(lexicon, store, transcriber, EvolutionConfig(seed=0))


@pytest.fixture(scope="module")
def desk_experiments(desk_corpora, desk_judge, sample_titles):
    """API-level replay of the four experiments, with per-iteration state."""
    master, peer = desk_corpora
    results = {}
    elapsed = {}
    for style in STYLES:
        config = ExperimentConfig(
            style=style, iterations=5, steps_per_iteration=1000,
            seed=derive_seed(DESK_SOCIAL_SEED, style),
        )
        start = time.monotonic()
        results[style] = run_experiment(
            config, sample_titles, master, peer, desk_judge, ReferenceApprentice()
        )
        elapsed[style] = time.monotonic() - start
    return results, elapsed


def brute_force_fronts(vectors):
    remaining = set(range(len(vectors)))
    fronts = []
    while remaining:
        front = sorted(
            p for p in remaining
            if not any(vectors[q].dominates(vectors[p]) for q in remaining if q != p)
        )
        fronts.append(front)
        remaining -= set(front)
    return fronts


def test_nsga2_oracle_equivalence():
    rng = random.Random(90210)
    start = time.monotonic()
    for _ in range(200):
        size = rng.randint(1, 32)
        vectors = [
            FitnessVector(
                prosody=rng.choice([0.0, 0.25, 0.5, 0.75, 1.0]),
                food_sim=round(rng.uniform(-1, 1), 2),
                orig_sim=round(rng.uniform(-1, 1), 2),
                altered=rng.randint(0, 4),
            )
            for _ in range(size)
        ]
        assert nondominated_sort(vectors) == brute_force_fronts(vectors)
    assert time.monotonic() - start < 5.0
    ok("nsga2 oracle equivalence (200 populations, < 5 s)")


def test_crowding_truncation_fixture():
    vectors = [
        FitnessVector(0.0, 0.0, 0.0, 0),
        FitnessVector(0.25, 1.0, 0.5, 1),
        FitnessVector(0.75, 2.0, 1.5, 3),
        FitnessVector(1.0, 4.0, 2.0, 4),
    ]
    distances = crowding_distance([0, 1, 2, 3], vectors)
    assert distances == {0: math.inf, 1: 2.75, 2: 3.0, 3: math.inf}
    truncation_order = sorted([0, 1, 2, 3], key=lambda i: (-distances[i], i))
    assert truncation_order == [0, 3, 2, 1]
    ok("crowding truncation matches hand computation (exact)")


def test_metric_hand_values():
    assert abs(pinc(("the", "butterfly", "effect"), ("the", "butterfly", "chicken")) - 1 / 3) < 1e-12
    assert sentence_bleu(("the", "beast"), ("the", "beast")) == 1.0

    rng = random.Random(314)
    vocab = ["a", "b", "c", "d", "e", "f"]
    for _ in range(50):
        outputs = [tuple(rng.choices(vocab, k=rng.randint(1, 5))) for _ in range(rng.randint(1, 6))]
        references = [tuple(rng.choices(vocab, k=rng.randint(1, 5))) for _ in range(rng.randint(1, 5))]
        got_bleu, got_pinc = aggregate(outputs, references)
        want_bleu = sum(max(sentence_bleu(o, r) for r in references) for o in outputs) / len(outputs)
        want_pinc = sum(min(pinc(r, o) for r in references) for o in outputs) / len(outputs)
        assert abs(got_bleu - want_bleu) < 1e-12
        assert abs(got_pinc - want_pinc) < 1e-12
    ok("metric hand values and aggregate oracle (50 sets, 1e-12)")


def test_prosody_properties(transcriber, lexicon):
    weights = ProsodyWeights()
    rng = random.Random(1001)
    for _ in range(1000):
        a = rng.choice(lexicon.food_words)
        b = rng.choice(lexicon.food_words)
        ab = prosody(a, b, weights, transcriber)
        assert ab == prosody(b, a, weights, transcriber)
        assert 0.0 <= ab <= 1.0
        assert prosody(a, a, weights, transcriber) == 1.0
    disjoint = Transcriber({"aa": ("P", "AA", "T"), "bb": ("SH", "IY", "M")})
    assert prosody("aa", "bb", weights, disjoint) == 0.0
    ok("prosody symmetry/range/identity/disjoint (1000 pairs, exact)")


def test_curation_invariants(desk_experiments, desk_corpora, desk_judge):
    results, elapsed = desk_experiments
    master, peer = desk_corpora
    master_keys = {p.key() for p in dedupe_pairs(master)}
    peer_keys = {p.key() for p in dedupe_pairs(peer)}

    for style in STYLES:
        assert elapsed[style] < 300.0, f"{style} run exceeded 5 minutes"

    for style, result in results.items():
        accumulated: dict = {}
        for iteration_index in range(len(result.outputs_history)):
            # State the iteration's curation saw: outputs of prior iterations.
            state = list(accumulated)
            if style == "authoritarian":
                corpus = curate(style, master, peer, state, desk_judge)
                assert {p.key() for p in corpus} == master_keys
            if style == "neglecting":
                corpus = curate(style, master, peer, state, desk_judge)
                assert {p.key() for p in corpus} == peer_keys
            strict = curate("authoritative", master, peer, state, desk_judge)
            lenient = curate("permissive", master, peer, state, desk_judge)
            assert {p.key() for p in strict} <= {p.key() for p in lenient}
            for sample in result.outputs_history[iteration_index]:
                accumulated.setdefault(sample)

    authoritarian_sizes = {r.corpus_size for r in results["authoritarian"].trajectory.rows}
    assert authoritarian_sizes == {len(master_keys)}
    neglecting_sizes = {r.corpus_size for r in results["neglecting"].trajectory.rows}
    assert neglecting_sizes == {len(peer_keys)}
    permissive_sizes = [r.corpus_size for r in results["permissive"].trajectory.rows]
    assert permissive_sizes == sorted(permissive_sizes)
    for strict_row, lenient_row in zip(
        results["authoritative"].trajectory.rows, results["permissive"].trajectory.rows
    ):
        assert strict_row.corpus_size <= lenient_row.corpus_size
    ok("curation invariants over the seeded 5-iteration desk run (< 5 min/style)")


def test_trajectory_trends(desk_run):
    final = {
        style: MetricTrajectory.read_csv(desk_run / "soc" / style / "trajectory.csv").rows[-1]
        for style in STYLES
    }
    assert final["authoritarian"].bleu_master > final["neglecting"].bleu_master
    assert final["neglecting"].bleu_peer > final["authoritarian"].bleu_peer
    ok("BLEU trend analogs at the final iteration (direction only)")


def test_liking_rates(desk_run, desk_corpora, desk_judge):
    final = {
        style: MetricTrajectory.read_csv(desk_run / "soc" / style / "trajectory.csv").rows[-1]
        for style in STYLES
    }
    assert final["authoritarian"].liking_rate >= final["neglecting"].liking_rate

    master, _ = desk_corpora
    samples = [(p.original, p.punned) for p in master]
    assert metrics.liking_rate(samples, desk_judge.likes) == 1.0
    ok("liking-rate analog and master-corpus liking = 1 (exact)")


def test_trajectory_regression_fixture(desk_run):
    from pathlib import Path

    fixtures = Path(__file__).parent / "fixtures"
    for style in ("authoritarian", "neglecting"):
        frozen = (fixtures / f"desk_{style}_trajectory.csv").read_bytes()
        current = (desk_run / "soc" / style / "trajectory.csv").read_bytes()
        assert current == frozen, f"{style} trajectory drifted from the frozen desk fixture"
    ok("pinned desk trajectories match the frozen regression fixtures")


def test_determinism_byte_identical(desk_run, tmp_path):
    assert main(
        [
            "master", "--mu", "16", "--lambda", "16", "--generations", "5",
            "--seed", str(DESK_MASTER_SEED), "--out", str(tmp_path / "master"),
        ]
    ) == 0
    first = (desk_run / "master" / "master_corpus.tsv").read_bytes()
    second = (tmp_path / "master" / "master_corpus.tsv").read_bytes()
    assert first == second

    assert main(
        [
            "socialize", "--style", "all", "--iterations", "5", "--steps", "1000",
            "--seed", str(DESK_SOCIAL_SEED),
            "--master-corpus", str(desk_run / "master" / "master_corpus.tsv"),
            "--peer-corpus", str(desk_run / "prep" / "peer_corpus.tsv"),
            "--out", str(tmp_path / "soc"),
        ]
    ) == 0
    for style in STYLES:
        for name in ("trajectory.csv", "outputs.tsv"):
            a = (desk_run / "soc" / style / name).read_bytes()
            b = (tmp_path / "soc" / style / name).read_bytes()
            assert a == b, f"{style}/{name} differs between runs"
    ok("byte-identical master and socialize reruns at equal seeds")


def dp_edit_distance(a, b):
    n, m = len(a), len(b)
    table = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        table[i][0] = i
    for j in range(m + 1):
        table[0][j] = j
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            cost = 0 if a[i - 1] == b[j - 1] else 1
            table[i][j] = min(table[i - 1][j] + 1, table[i][j - 1] + 1, table[i - 1][j - 1] + cost)
    return table[n][m]


def test_ingestion_oracle():
    rng = random.Random(5150)
    vocab = ["sun", "moon", "star", "red", "blue", "tree", "stone", "wolf", "king", "night"]
    titles = [tuple(rng.choices(vocab, k=rng.randint(2, 5))) for _ in range(15)]
    accepted = 0
    for _ in range(200):
        base = list(rng.choice(titles))
        for _ in range(rng.randint(0, 5)):
            op = rng.randrange(3)
            if op == 0 and base:
                base[rng.randrange(len(base))] = rng.choice(vocab + ["zzz", "qqq"])
            elif op == 1:
                base.insert(rng.randint(0, len(base)), rng.choice(vocab))
            elif base:
                base.pop(rng.randrange(len(base)))
        comment = tuple(base) or ("void",)

        keys = [
            (dp_edit_distance(comment, t), dp_edit_distance(" ".join(comment), " ".join(t)))
            for t in titles
        ]
        best = min(range(len(titles)), key=lambda i: (keys[i], i))
        expect = keys[best][0] <= 3 and bool(set(comment) & set(titles[best]))

        got = match_comment(comment, titles)
        assert (got is not None) == expect
        if got is not None:
            accepted += 1
            assert got.original == titles[best]
            assert word_edit_distance(got.original, got.punned) <= 3
            assert set(got.original) & set(got.punned)
    assert accepted > 0
    ok("ingestion matches DP oracles; accept rule has zero violations (200 cases)")

from __future__ import annotations

import pytest

from punsocial.apprentice import ReferenceApprentice
from punsocial.evolution import generate_master_corpus
from punsocial.socialization import (
    ExperimentConfig,
    ExperimentError,
    MasterJudge,
    PARENTING_STYLES,
    curate,
    run_experiment,
    write_outputs,
)
from punsocial.textdata import (
    ParallelPair,
    dedupe_pairs,
    match_comment,
    preprocess_comment,
    read_comments,
)


@pytest.fixture(scope="module")
def judge(lexicon, store, transcriber, desk_config):
    return MasterJudge(lexicon, store, transcriber, desk_config)


@pytest.fixture(scope="module")
def master_corpus(lexicon, store, transcriber, desk_config, sample_titles):
    return generate_master_corpus(sample_titles, lexicon, store, transcriber, desk_config)


@pytest.fixture(scope="module")
def peer_corpus(data_dir, sample_titles):
    pairs = []
    for comment in read_comments(data_dir / "comments.txt"):
        words = preprocess_comment(comment)
        if not words:
            continue
        pair = match_comment(words, sample_titles)
        if pair is not None:
            pairs.append(pair)
    return dedupe_pairs(pairs)


def outputs_for(pairs):
    return [(p.original, p.punned) for p in pairs]


class TestMasterJudge:
    def test_identity_output_not_liked(self, judge):
        title = ("the", "butterfly", "effect")
        assert judge.likes(title, title) is False

    def test_master_pairs_liked(self, judge, master_corpus):
        for pair in master_corpus[:25]:
            assert judge.likes(pair.original, pair.punned) is True

    def test_reconstruct_marks_substitutions(self, judge):
        ind = judge.reconstruct(("the", "beast"), ("the", "beets"))
        assert ind.current_words() == ("the", "beets")
        assert ind.slots[1].modified and not ind.slots[0].modified

    def test_reconstruct_ignores_pure_insertions(self, judge):
        ind = judge.reconstruct(("the", "beast"), ("the", "beast", "again"))
        assert ind.current_words() == ("the", "beast")


class TestCurate:
    def test_authoritarian_is_master_only(self, judge, master_corpus, peer_corpus):
        outputs = [(("the", "beast"), ("the", "beets"))]
        corpus = curate("authoritarian", master_corpus, peer_corpus, outputs, judge)
        assert corpus == dedupe_pairs(master_corpus)

    def test_neglecting_is_peer_only(self, judge, master_corpus, peer_corpus):
        outputs = [(("the", "beast"), ("the", "beets"))]
        corpus = curate("neglecting", master_corpus, peer_corpus, outputs, judge)
        assert corpus == dedupe_pairs(peer_corpus)

    def test_authoritative_subset_of_permissive(self, judge, master_corpus, peer_corpus, sample_titles):
        outputs = [(t, t[:-1] + ("beets",)) for t in sample_titles[:10]]
        strict = curate("authoritative", master_corpus, peer_corpus, outputs, judge)
        lenient = curate("permissive", master_corpus, peer_corpus, outputs, judge)
        assert {p.key() for p in strict} <= {p.key() for p in lenient}

    def test_identity_outputs_discarded(self, judge, master_corpus, peer_corpus):
        identical = [(("the", "beast"), ("the", "beast"))]
        corpus = curate("permissive", master_corpus, peer_corpus, identical, judge)
        keys = {p.key() for p in corpus}
        assert (("the", "beast"), ("the", "beast")) not in keys

    def test_authoritative_filters_by_verdict(self, judge, master_corpus, peer_corpus):
        corpus = curate("authoritative", master_corpus, peer_corpus, [], judge)
        master_keys = {p.key() for p in master_corpus}
        for pair in corpus:
            if pair.key() in master_keys:
                continue
            assert judge.likes(pair.original, pair.punned)

    def test_permissive_can_exclude_master(self, judge, master_corpus, peer_corpus):
        corpus = curate(
            "permissive", master_corpus, peer_corpus, [], judge,
            permissive_includes_master=False,
        )
        assert {p.key() for p in corpus} == {p.key() for p in dedupe_pairs(peer_corpus)}

    def test_unknown_style(self, judge, master_corpus, peer_corpus):
        with pytest.raises(ValueError):
            curate("strict", master_corpus, peer_corpus, [], judge)

    def test_verdict_passing_peer_subset_is_stable(self, judge, peer_corpus):
        first = [p.key() for p in peer_corpus if judge.likes(p.original, p.punned)]
        second = [p.key() for p in peer_corpus if judge.likes(p.original, p.punned)]
        assert first == second
        assert 0 < len(first) < len(peer_corpus)


class TestRunExperiment:
    def _config(self, style, iterations=2):
        return ExperimentConfig(style=style, iterations=iterations, steps_per_iteration=200, seed=7)

    def test_single_iteration_single_row(self, judge, master_corpus, peer_corpus, sample_titles):
        result = run_experiment(
            self._config("authoritarian", 1), sample_titles[:10], master_corpus,
            peer_corpus, judge, ReferenceApprentice(),
        )
        assert len(result.trajectory.rows) == 1
        assert len(result.final_outputs) == 10

    def test_authoritarian_corpus_constant(self, judge, master_corpus, peer_corpus, sample_titles):
        result = run_experiment(
            self._config("authoritarian", 3), sample_titles[:10], master_corpus,
            peer_corpus, judge, ReferenceApprentice(),
        )
        sizes = {row.corpus_size for row in result.trajectory.rows}
        assert sizes == {len(dedupe_pairs(master_corpus))}

    def test_permissive_corpus_nondecreasing(self, judge, master_corpus, peer_corpus, sample_titles):
        result = run_experiment(
            self._config("permissive", 3), sample_titles[:10], master_corpus,
            peer_corpus, judge, ReferenceApprentice(),
        )
        sizes = [row.corpus_size for row in result.trajectory.rows]
        assert sizes == sorted(sizes)

    def test_replay_determinism(self, judge, master_corpus, peer_corpus, sample_titles):
        runs = [
            run_experiment(
                self._config("authoritative", 2), sample_titles[:10], master_corpus,
                peer_corpus, judge, ReferenceApprentice(),
            )
            for _ in range(2)
        ]
        assert runs[0].trajectory.rows == runs[1].trajectory.rows
        assert runs[0].final_outputs == runs[1].final_outputs

    def test_missing_peer_corpus_fails_for_neglecting(self, judge, master_corpus, sample_titles):
        with pytest.raises(ExperimentError):
            run_experiment(
                self._config("neglecting"), sample_titles[:10], master_corpus, [],
                judge, ReferenceApprentice(),
            )

    def test_missing_master_corpus_fails_for_authoritarian(self, judge, peer_corpus, sample_titles):
        with pytest.raises(ExperimentError):
            run_experiment(
                self._config("authoritarian"), sample_titles[:10], [], peer_corpus,
                judge, ReferenceApprentice(),
            )

    def test_mistagged_corpus_rejected(self, judge, master_corpus, peer_corpus, sample_titles):
        with pytest.raises(ExperimentError):
            run_experiment(
                self._config("permissive"), sample_titles[:10], peer_corpus, peer_corpus,
                judge, ReferenceApprentice(),
            )
        with pytest.raises(ExperimentError):
            run_experiment(
                self._config("permissive"), sample_titles[:10], master_corpus, master_corpus,
                judge, ReferenceApprentice(),
            )

    def test_same_title_only_mode(self, judge, master_corpus, peer_corpus, sample_titles):
        config = ExperimentConfig(
            style="authoritarian", iterations=1, steps_per_iteration=200, seed=7,
            same_title_only=True,
        )
        result = run_experiment(
            config, sample_titles[:10], master_corpus, peer_corpus, judge, ReferenceApprentice()
        )
        row = result.trajectory.rows[0]
        assert 0.0 <= row.bleu_master <= 1.0
        assert 0.0 <= row.pinc_master <= 1.0

    def test_all_styles_complete(self, judge, master_corpus, peer_corpus, sample_titles):
        for style in PARENTING_STYLES:
            result = run_experiment(
                self._config(style, 1), sample_titles[:10], master_corpus,
                peer_corpus, judge, ReferenceApprentice(),
            )
            assert result.style == style


class TestOutputsFile:
    def test_write_outputs(self, tmp_path):
        path = tmp_path / "outputs.tsv"
        write_outputs(path, [(("the", "beast"), ("the", "beets"))])
        assert path.read_text() == "the beast\tthe beets\n"

    def test_write_empty(self, tmp_path):
        path = tmp_path / "outputs.tsv"
        write_outputs(path, [])
        assert path.read_text() == ""


class TestPairInvariant:
    def test_sources_tagged(self, master_corpus, peer_corpus):
        assert all(p.source == "master" for p in master_corpus)
        assert all(p.source == "peer" for p in peer_corpus)

    def test_bad_pair_rejected(self):
        with pytest.raises(ValueError):
            ParallelPair((), ("a",), "master")
        with pytest.raises(ValueError):
            ParallelPair(("a",), ("b",), "nobody")

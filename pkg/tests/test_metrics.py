from __future__ import annotations

import math
import random

import pytest

from punsocial.metrics import (
    MetricTrajectory,
    TrajectoryRow,
    aggregate,
    liking_rate,
    pinc,
    sentence_bleu,
)


class TestSentenceBleu:
    def test_identity(self):
        assert sentence_bleu(("the", "beast"), ("the", "beast")) == 1.0
        assert sentence_bleu(("a",), ("a",)) == 1.0

    def test_zero_unigram_overlap(self):
        assert sentence_bleu(("x", "y"), ("a", "b")) == 0.0

    def test_empty_candidate(self):
        assert sentence_bleu((), ("a",)) == 0.0

    def test_hand_computed_value(self):
        # "the beets" vs "the beast": p1 = 1/2; p2 = (0+1)/(1+1) = 1/2;
        # p3 = p4 = 1 (no such n-grams, smoothed); BP = 1 since lengths match.
        # BLEU = exp((ln .5 + ln .5) / 4) = 2^(-1/2).
        expected = 2 ** -0.5
        assert sentence_bleu(("the", "beets"), ("the", "beast")) == pytest.approx(expected, abs=1e-12)

    def test_brevity_penalty(self):
        # candidate 1 word, reference 3 words: identical unigram, BP = exp(1 - 3).
        value = sentence_bleu(("a",), ("a", "b", "c"), max_n=1)
        assert value == pytest.approx(math.exp(-2) * (1 / 1), abs=1e-12)

    def test_range_property(self):
        rng = random.Random(41)
        vocab = ["a", "b", "c", "d"]
        for _ in range(300):
            cand = tuple(rng.choices(vocab, k=rng.randint(1, 6)))
            ref = tuple(rng.choices(vocab, k=rng.randint(1, 6)))
            assert 0.0 <= sentence_bleu(cand, ref) <= 1.0 + 1e-12


class TestPinc:
    def test_identity_is_zero(self):
        s = ("the", "butterfly", "effect")
        assert pinc(s, s) == 0.0

    def test_disjoint_is_one(self):
        assert pinc(("a", "b"), ("x", "y")) == 1.0

    def test_one_of_three_unigrams_novel_exact(self):
        value = pinc(("the", "butterfly", "effect"), ("the", "butterfly", "chicken"))
        assert abs(value - 1 / 3) < 1e-12

    def test_empty_candidate_rejected(self):
        with pytest.raises(ValueError):
            pinc(("a",), ())

    def test_novelty_plus_overlap_is_one(self):
        rng = random.Random(43)
        vocab = ["a", "b", "c", "d", "e"]
        for _ in range(200):
            source = tuple(rng.choices(vocab, k=rng.randint(1, 5)))
            cand = tuple(rng.choices(vocab, k=rng.randint(1, 5)))
            novel = pinc(source, cand)
            matched = len(set(cand) & set(source)) / len(set(cand))
            assert novel + matched == pytest.approx(1.0, abs=1e-12)


class TestAggregate:
    def test_outputs_equal_references(self):
        title = ("the", "beast")
        assert aggregate([title], [title]) == (1.0, 0.0)

    def test_disjoint_output(self):
        bleu, novelty = aggregate([("x", "y")], [("a", "b")])
        assert bleu == 0.0
        assert novelty == 1.0

    def test_three_vs_two_nested_loop_oracle(self):
        outputs = [("a", "b"), ("a", "c", "d"), ("e",)]
        references = [("a", "b"), ("c", "d")]
        expected_bleu = sum(
            max(sentence_bleu(o, r) for r in references) for o in outputs
        ) / len(outputs)
        expected_pinc = sum(
            min(pinc(r, o) for r in references) for o in outputs
        ) / len(outputs)
        assert aggregate(outputs, references) == (
            pytest.approx(expected_bleu, abs=1e-12),
            pytest.approx(expected_pinc, abs=1e-12),
        )

    def test_empty_outputs_warns(self, caplog):
        with caplog.at_level("WARNING"):
            assert aggregate([], [("a",)]) == (0.0, 1.0)
        assert caplog.records

    def test_empty_references_rejected(self):
        with pytest.raises(ValueError):
            aggregate([("a",)], [])

    def test_permutation_invariance(self):
        rng = random.Random(47)
        vocab = ["a", "b", "c", "d"]
        outputs = [tuple(rng.choices(vocab, k=rng.randint(1, 4))) for _ in range(6)]
        refs = [tuple(rng.choices(vocab, k=rng.randint(1, 4))) for _ in range(4)]
        base = aggregate(outputs, refs)
        shuffled_out = outputs[::-1]
        shuffled_ref = refs[::-1]
        assert aggregate(shuffled_out, shuffled_ref) == (
            pytest.approx(base[0]),
            pytest.approx(base[1]),
        )

    def test_monotone_in_references(self):
        rng = random.Random(53)
        vocab = ["a", "b", "c", "d", "e"]
        cand = ("a", "b", "c")
        refs = [tuple(rng.choices(vocab, k=rng.randint(1, 4))) for _ in range(8)]
        best_bleu, best_pinc = 0.0, 1.0
        for upto in range(1, len(refs) + 1):
            bleu = max(sentence_bleu(cand, r) for r in refs[:upto])
            novelty = min(pinc(r, cand) for r in refs[:upto])
            assert bleu >= best_bleu - 1e-12
            assert novelty <= best_pinc + 1e-12
            best_bleu, best_pinc = bleu, novelty


class TestLikingRate:
    def test_empty_is_zero(self):
        assert liking_rate([], lambda o, p: True) == 0.0

    def test_fraction(self):
        samples = [(("a",), ("a",)), (("a",), ("b",)), (("c",), ("d",))]
        assert liking_rate(samples, lambda o, p: o != p) == pytest.approx(2 / 3)


class TestTrajectory:
    def _row(self, i, **overrides):
        values = dict(
            iteration=i, bleu_master=0.5, pinc_master=0.5, bleu_peer=0.5,
            pinc_peer=0.5, liking_rate=0.5, corpus_size=10,
        )
        values.update(overrides)
        return TrajectoryRow(**values)

    def test_roundtrip(self, tmp_path):
        trajectory = MetricTrajectory([self._row(1), self._row(2, bleu_master=0.75)])
        path = tmp_path / "t.csv"
        trajectory.write_csv(path)
        loaded = MetricTrajectory.read_csv(path)
        assert [r.iteration for r in loaded.rows] == [1, 2]
        assert loaded.rows[1].bleu_master == pytest.approx(0.75)

    def test_iteration_gap_rejected(self):
        with pytest.raises(ValueError):
            MetricTrajectory([self._row(1), self._row(3)])

    def test_rate_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            MetricTrajectory([self._row(1, liking_rate=1.5)])

    def test_bad_header_rejected(self, tmp_path):
        path = tmp_path / "t.csv"
        path.write_text("iteration,wrong\n1,2\n")
        with pytest.raises(ValueError):
            MetricTrajectory.read_csv(path)

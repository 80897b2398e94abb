"""Parenting-style corpus curation and the iterative train/generate/evaluate loop."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Protocol, Sequence

from . import metrics
from .apprentice import align_pair
from .evolution import (
    AnyTranscriber,
    EvolutionConfig,
    FitnessVector,
    Individual,
    evaluate,
    final_verdict,
)
from .semantics import EmbeddingStore
from .textdata import Lexicon, ParallelPair, Words, dedupe_pairs

PARENTING_STYLES = ("authoritarian", "authoritative", "permissive", "neglecting")


class ExperimentError(RuntimeError):
    """An experiment cannot run with the corpora it was given."""


class ApprenticeProtocol(Protocol):
    def train(self, pairs: Sequence[ParallelPair], steps: int, seed: int) -> int: ...
    def generate(self, titles: Sequence[Words]) -> list[Words]: ...
    def reset(self) -> None: ...


class MasterJudge:
    """Applies the master's appreciation to arbitrary (original, pun) pairs.

    A pair is rebuilt into a candidate individual by edit alignment against
    the original title, scored with the evolutionary fitness, and accepted or
    rejected by the final verdict.
    """

    def __init__(
        self,
        lexicon: Lexicon,
        store: EmbeddingStore,
        transcriber: AnyTranscriber,
        config: EvolutionConfig,
    ):
        self.lexicon = lexicon
        self.store = store
        self.transcriber = transcriber
        self.config = config
        self._cache: dict[tuple[Words, Words], bool] = {}

    def reconstruct(self, original: Words, punned: Words) -> Individual:
        ind = Individual.from_title(original, self.lexicon)
        for orig_word, new_word in align_pair(original, punned):
            for index, slot in enumerate(ind.slots):
                if slot.original == orig_word and not slot.modified:
                    ind.substitute(index, new_word)
                    break
        return ind

    def evaluate_pair(self, original: Words, punned: Words) -> FitnessVector:
        ind = self.reconstruct(original, punned)
        return evaluate(ind, self.store, self.transcriber, self.config)

    def likes(self, original: Words, punned: Words) -> bool:
        key = (tuple(original), tuple(punned))
        cached = self._cache.get(key)
        if cached is None:
            ind = self.reconstruct(*key)
            evaluate(ind, self.store, self.transcriber, self.config)
            cached = final_verdict(ind)
            self._cache[key] = cached
        return cached


def curate(
    style: str,
    master_corpus: Sequence[ParallelPair],
    peer_corpus: Sequence[ParallelPair],
    apprentice_outputs: Sequence[tuple[Words, Words]],
    judge: MasterJudge,
    permissive_includes_master: bool = True,
) -> list[ParallelPair]:
    """Assemble one training corpus according to the parenting style.

    authoritarian: the master's own pairs only.
    authoritative: master pairs plus peer and apprentice pairs the master likes.
    permissive: master pairs (switchable) plus all peer and apprentice pairs.
    neglecting: peer pairs only.

    Apprentice outputs identical to their input are never used for training.
    """
    if style not in PARENTING_STYLES:
        raise ValueError(f"unknown parenting style {style!r}")
    own_pairs = [
        ParallelPair(original=orig, punned=out, source="apprentice")
        for orig, out in apprentice_outputs
        if tuple(out) != tuple(orig)
    ]
    if style == "authoritarian":
        selected = list(master_corpus)
    elif style == "neglecting":
        selected = list(peer_corpus)
    elif style == "authoritative":
        selected = list(master_corpus)
        selected += [p for p in peer_corpus if judge.likes(p.original, p.punned)]
        selected += [p for p in own_pairs if judge.likes(p.original, p.punned)]
    else:  # permissive
        selected = list(master_corpus) if permissive_includes_master else []
        selected += list(peer_corpus)
        selected += own_pairs
    return dedupe_pairs(selected)


@dataclass(frozen=True)
class ExperimentConfig:
    style: str
    iterations: int = 20
    steps_per_iteration: int = 1000
    seed: int = 0
    permissive_includes_master: bool = True
    same_title_only: bool = False
    bleu_max_n: int = 4
    pinc_max_n: int = 1

    def __post_init__(self):
        if self.style not in PARENTING_STYLES:
            raise ValueError(f"unknown parenting style {self.style!r}")
        if self.iterations < 1 or self.steps_per_iteration < 1:
            raise ValueError("iterations and steps_per_iteration must be positive")


@dataclass
class ExperimentResult:
    style: str
    trajectory: metrics.MetricTrajectory
    outputs_history: list[list[tuple[Words, Words]]] = field(default_factory=list)

    @property
    def final_outputs(self) -> list[tuple[Words, Words]]:
        return self.outputs_history[-1] if self.outputs_history else []


def _compare(
    outputs: Sequence[tuple[Words, Words]],
    references: Sequence[ParallelPair],
    config: ExperimentConfig,
) -> tuple[float, float]:
    """(avg max BLEU, avg min PINC) of outputs against reference puns."""
    if not config.same_title_only:
        return metrics.aggregate(
            [out for _, out in outputs],
            [p.punned for p in references],
            config.bleu_max_n,
            config.pinc_max_n,
        )
    by_title: dict[Words, list[Words]] = {}
    for pair in references:
        by_title.setdefault(pair.original, []).append(pair.punned)
    bleu_total, pinc_total = 0.0, 0.0
    for original, out in outputs:
        refs = by_title.get(original)
        if not refs:
            pinc_total += 1.0  # no reference pun for this title: fully novel
            continue
        bleu_total += max(metrics.sentence_bleu(out, r, config.bleu_max_n) for r in refs)
        pinc_total += min(metrics.pinc(r, out, config.pinc_max_n) for r in refs)
    return (bleu_total / len(outputs), pinc_total / len(outputs))


def run_experiment(
    config: ExperimentConfig,
    titles: Sequence[Words],
    master_corpus: Sequence[ParallelPair],
    peer_corpus: Sequence[ParallelPair],
    judge: MasterJudge,
    apprentice: ApprenticeProtocol,
) -> ExperimentResult:
    """Run the iterative socialization loop for one parenting style.

    Each iteration curates a corpus, trains the apprentice on it, generates
    puns for every input title, and scores the batch. Apprentice outputs
    accumulate across iterations as curation candidates; training is
    cumulative (the model is never reset mid-experiment).
    """
    if config.style != "neglecting" and not master_corpus:
        raise ExperimentError(f"style {config.style!r} requires a nonempty master corpus")
    if config.style != "authoritarian" and not peer_corpus:
        raise ExperimentError(f"style {config.style!r} requires a nonempty peer corpus")
    if not master_corpus or not peer_corpus:
        raise ExperimentError("trajectory metrics require both master and peer corpora")
    if not titles:
        raise ExperimentError("no input titles")
    if any(p.source != "master" for p in master_corpus):
        raise ExperimentError("master corpus contains non-master pairs")
    if any(p.source != "peer" for p in peer_corpus):
        raise ExperimentError("peer corpus contains non-peer pairs")

    seen_outputs: dict[tuple[Words, Words], None] = {}
    rows: list[metrics.TrajectoryRow] = []
    history: list[list[tuple[Words, Words]]] = []
    for iteration in range(1, config.iterations + 1):
        corpus = curate(
            config.style,
            master_corpus,
            peer_corpus,
            list(seen_outputs),
            judge,
            config.permissive_includes_master,
        )
        if not corpus:
            raise ExperimentError(f"curated corpus for {config.style!r} is empty")
        apprentice.train(corpus, config.steps_per_iteration, config.seed)
        generated = apprentice.generate(titles)
        outputs = list(zip([tuple(t) for t in titles], generated))
        history.append(outputs)
        for sample in outputs:
            seen_outputs.setdefault(sample)
        bleu_master, pinc_master = _compare(outputs, master_corpus, config)
        bleu_peer, pinc_peer = _compare(outputs, peer_corpus, config)
        rows.append(
            metrics.TrajectoryRow(
                iteration=iteration,
                bleu_master=bleu_master,
                pinc_master=pinc_master,
                bleu_peer=bleu_peer,
                pinc_peer=pinc_peer,
                liking_rate=metrics.liking_rate(outputs, judge.likes),
                corpus_size=len(corpus),
            )
        )
    return ExperimentResult(
        style=config.style,
        trajectory=metrics.MetricTrajectory(rows=rows),
        outputs_history=history,
    )


def write_outputs(path: str | Path, outputs: Sequence[tuple[Words, Words]]) -> None:
    """Write final apprentice outputs as `input<TAB>output` lines."""
    lines = [f"{' '.join(original)}\t{' '.join(out)}" for original, out in outputs]
    Path(path).write_text("\n".join(lines) + ("\n" if lines else ""), encoding="utf-8")

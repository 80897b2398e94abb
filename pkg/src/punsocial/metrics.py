"""Sentence BLEU, unigram PINC, per-iteration aggregation, and liking rate."""

from __future__ import annotations

import csv
import logging
import math
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from .textdata import Words

logger = logging.getLogger(__name__)

TRAJECTORY_HEADER = (
    "iteration",
    "bleu_master",
    "pinc_master",
    "bleu_peer",
    "pinc_peer",
    "liking_rate",
    "corpus_size",
)


def _ngrams(sequence: Sequence[str], n: int) -> list[tuple[str, ...]]:
    return [tuple(sequence[i : i + n]) for i in range(len(sequence) - n + 1)]


def sentence_bleu(candidate: Sequence[str], reference: Sequence[str], max_n: int = 4) -> float:
    """Sentence-level BLEU with add-one smoothing on n-gram orders above 1.

    Geometric mean of modified n-gram precisions for n in 1..max_n times the
    standard brevity penalty. Returns 0 for an empty candidate or when there
    is no unigram overlap at all.
    """
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    candidate = tuple(candidate)
    reference = tuple(reference)
    if not candidate:
        return 0.0
    log_sum = 0.0
    for n in range(1, max_n + 1):
        cand_counts = Counter(_ngrams(candidate, n))
        ref_counts = Counter(_ngrams(reference, n))
        total = sum(cand_counts.values())
        matched = sum(min(count, ref_counts[gram]) for gram, count in cand_counts.items())
        if n == 1:
            if matched == 0:
                return 0.0
            precision = matched / total
        else:
            precision = (matched + 1) / (total + 1)
        log_sum += math.log(precision)
    brevity = 1.0 if len(candidate) >= len(reference) else math.exp(1 - len(reference) / len(candidate))
    return brevity * math.exp(log_sum / max_n)


def pinc(source: Sequence[str], candidate: Sequence[str], max_n: int = 1) -> float:
    """Fraction of candidate n-grams absent from the source (set semantics).

    Averaged over n-gram orders the candidate actually has; with the default
    max_n = 1 this is the unigram novelty of the candidate.
    """
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    candidate = tuple(candidate)
    source = tuple(source)
    if not candidate:
        raise ValueError("candidate must be nonempty")
    terms = []
    for n in range(1, max_n + 1):
        cand_grams = set(_ngrams(candidate, n))
        if not cand_grams:
            break
        source_grams = set(_ngrams(source, n))
        terms.append(1.0 - len(cand_grams & source_grams) / len(cand_grams))
    return sum(terms) / len(terms)


def aggregate(
    outputs: Sequence[Words], references: Sequence[Words], bleu_max_n: int = 4, pinc_max_n: int = 1
) -> tuple[float, float]:
    """Average over outputs of (max BLEU, min PINC) against the references."""
    if not references:
        raise ValueError("references must be nonempty")
    if not outputs:
        logger.warning("aggregate called with no outputs; returning (0, 1)")
        return (0.0, 1.0)
    bleu_total = 0.0
    pinc_total = 0.0
    for output in outputs:
        bleu_total += max(sentence_bleu(output, ref, bleu_max_n) for ref in references)
        pinc_total += min(pinc(ref, output, pinc_max_n) for ref in references)
    return (bleu_total / len(outputs), pinc_total / len(outputs))


def liking_rate(
    samples: Sequence[tuple[Words, Words]], likes: Callable[[Words, Words], bool]
) -> float:
    """Fraction of (original, output) samples the master's verdict approves."""
    if not samples:
        return 0.0
    liked = sum(1 for original, output in samples if likes(original, output))
    return liked / len(samples)


@dataclass(frozen=True)
class TrajectoryRow:
    iteration: int
    bleu_master: float
    pinc_master: float
    bleu_peer: float
    pinc_peer: float
    liking_rate: float
    corpus_size: int


@dataclass
class MetricTrajectory:
    """Ordered per-iteration metric records for one experiment."""

    rows: list[TrajectoryRow]

    def __post_init__(self):
        for i, row in enumerate(self.rows, start=1):
            if row.iteration != i:
                raise ValueError(f"iterations must increase from 1; row {i} says {row.iteration}")
            for name in ("bleu_master", "pinc_master", "bleu_peer", "pinc_peer", "liking_rate"):
                value = getattr(row, name)
                if not 0.0 <= value <= 1.0:
                    raise ValueError(f"{name}={value} out of [0, 1] at iteration {row.iteration}")

    def write_csv(self, path: str | Path) -> None:
        with open(path, "w", newline="", encoding="utf-8") as handle:
            writer = csv.writer(handle)
            writer.writerow(TRAJECTORY_HEADER)
            for row in self.rows:
                writer.writerow(
                    [
                        row.iteration,
                        f"{row.bleu_master:.6f}",
                        f"{row.pinc_master:.6f}",
                        f"{row.bleu_peer:.6f}",
                        f"{row.pinc_peer:.6f}",
                        f"{row.liking_rate:.6f}",
                        row.corpus_size,
                    ]
                )

    @classmethod
    def read_csv(cls, path: str | Path) -> "MetricTrajectory":
        with open(path, newline="", encoding="utf-8") as handle:
            reader = csv.reader(handle)
            header = tuple(next(reader, ()))
            if header != TRAJECTORY_HEADER:
                raise ValueError(f"{path}: unexpected trajectory header {header!r}")
            rows = []
            for record in reader:
                if not record:
                    continue
                values = dict(zip(TRAJECTORY_HEADER, record))
                rows.append(
                    TrajectoryRow(
                        iteration=int(values["iteration"]),
                        bleu_master=float(values["bleu_master"]),
                        pinc_master=float(values["pinc_master"]),
                        bleu_peer=float(values["bleu_peer"]),
                        pinc_peer=float(values["pinc_peer"]),
                        liking_rate=float(values["liking_rate"]),
                        corpus_size=int(values["corpus_size"]),
                    )
                )
        return cls(rows=rows)

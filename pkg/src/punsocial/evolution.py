"""The master: a (mu + lambda) evolutionary pun generator with NSGA-II selection.

Candidate titles substitute food nouns into content-word slots and are scored
on four dimensions: sound similarity of each substitution (maximize), semantic
closeness of the title to the food anchor (maximize), semantic closeness of
replacements to the words they displaced (minimize, for surprise), and the
number of altered slots (minimize, for recognizability).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field, replace
from typing import Callable, Optional, Sequence

from . import semantics
from .phonetics import CommandTranscriber, ProsodyWeights, Transcriber, prosody
from .semantics import EmbeddingStore
from .textdata import (
    CONTENT_TAGS,
    SUBSTITUTABLE_TAGS,
    Lexicon,
    ParallelPair,
    Words,
    dedupe_pairs,
    inflect,
)

AnyTranscriber = Transcriber | CommandTranscriber

# Optimization sense per objective: +1 maximize, -1 minimize.
OBJECTIVE_SENSES = (1, 1, -1, -1)


class NoEligibleSlotError(ValueError):
    """The title has no noun/adjective/verb slot to substitute into."""


@dataclass(frozen=True)
class FitnessVector:
    """The four objective values for one candidate title."""

    prosody: float
    food_sim: float
    orig_sim: float
    altered: int

    def as_tuple(self) -> tuple[float, float, float, int]:
        return (self.prosody, self.food_sim, self.orig_sim, self.altered)

    def dominates(self, other: "FitnessVector") -> bool:
        """Pareto dominance under the per-objective senses."""
        at_least_as_good = True
        strictly_better = False
        for sense, mine, theirs in zip(OBJECTIVE_SENSES, self.as_tuple(), other.as_tuple()):
            diff = sense * (mine - theirs)
            if diff < 0:
                at_least_as_good = False
                break
            if diff > 0:
                strictly_better = True
        return at_least_as_good and strictly_better


@dataclass
class Slot:
    original: str
    current: str
    pos: str
    modified: bool = False


@dataclass
class Individual:
    """One candidate pun built over the slots of a source title."""

    slots: list[Slot]
    fitness: Optional[FitnessVector] = None

    @classmethod
    def from_title(cls, title: Sequence[str], lexicon: Lexicon) -> "Individual":
        words = tuple(title)
        if not words:
            raise ValueError("title must have at least one word")
        slots = [Slot(original=w, current=w, pos=lexicon.pos_of(w)) for w in words]
        return cls(slots=slots)

    def clone(self) -> "Individual":
        return Individual(slots=[replace(s) for s in self.slots], fitness=self.fitness)

    def substitute(self, index: int, word: str) -> None:
        slot = self.slots[index]
        slot.current = word
        slot.modified = word != slot.original
        self.fitness = None

    def current_words(self) -> Words:
        return tuple(s.current for s in self.slots)

    def original_words(self) -> Words:
        return tuple(s.original for s in self.slots)

    def modified_pairs(self) -> list[tuple[str, str]]:
        return [(s.original, s.current) for s in self.slots if s.modified]

    def eligible_slots(self) -> list[int]:
        return [i for i, s in enumerate(self.slots) if s.pos in SUBSTITUTABLE_TAGS]

    def content_slot_count(self) -> int:
        return sum(1 for s in self.slots if s.pos in CONTENT_TAGS)


@dataclass(frozen=True)
class EvolutionConfig:
    mu: int = 100
    lambda_: int = 100
    generations: int = 10
    crossover_prob: float = 0.5
    weights: ProsodyWeights = field(default_factory=ProsodyWeights)
    food_anchor: str = "food"
    # "all": anchor similarity over every title word; "modified": over
    # replacement words only.
    food_sim_scope: str = "all"
    seed: int = 0

    def __post_init__(self):
        if self.mu < 2 or self.lambda_ < 2:
            raise ValueError("mu and lambda must be >= 2")
        if self.generations < 0:
            raise ValueError("generations must be nonnegative")
        if not 0.0 <= self.crossover_prob <= 1.0:
            raise ValueError("crossover_prob must lie in [0, 1]")
        if self.food_sim_scope not in ("all", "modified"):
            raise ValueError("food_sim_scope must be 'all' or 'modified'")


def _substitute_random_slot(ind: Individual, lexicon: Lexicon, rng: random.Random) -> Individual:
    eligible = ind.eligible_slots()
    if not eligible:
        return ind
    index = eligible[rng.randrange(len(eligible))]
    word = lexicon.food_words[rng.randrange(len(lexicon.food_words))]
    slot = ind.slots[index]
    ind.substitute(index, inflect(word, slot.original, slot.pos))
    return ind


def init_population(
    title: Sequence[str], lexicon: Lexicon, config: EvolutionConfig, rng: random.Random | None = None
) -> list[Individual]:
    """mu copies of the title, each with one random eligible slot substituted."""
    rng = rng or random.Random(config.seed)
    base = Individual.from_title(title, lexicon)
    if not base.eligible_slots():
        raise NoEligibleSlotError(f"no substitutable slot in {' '.join(title)!r}")
    return [_substitute_random_slot(base.clone(), lexicon, rng) for _ in range(config.mu)]


def mutate(ind: Individual, lexicon: Lexicon, rng: random.Random) -> Individual:
    """Re-substitute one random eligible slot; no-op for ineligible individuals."""
    return _substitute_random_slot(ind.clone(), lexicon, rng)


def crossover(a: Individual, b: Individual, rng: random.Random) -> tuple[Individual, Individual]:
    """Single-point crossover: current words right of the cut are exchanged."""
    if len(a.slots) != len(b.slots):
        raise ValueError("crossover requires individuals over the same title")
    child_a, child_b = a.clone(), b.clone()
    if len(a.slots) < 2:
        return child_a, child_b
    cut = rng.randint(1, len(a.slots) - 1)
    for i in range(cut, len(a.slots)):
        child_a.substitute(i, b.slots[i].current)
        child_b.substitute(i, a.slots[i].current)
    child_a.fitness = None
    child_b.fitness = None
    return child_a, child_b


def evaluate(
    ind: Individual,
    store: EmbeddingStore,
    transcriber: AnyTranscriber,
    config: EvolutionConfig,
) -> FitnessVector:
    """Score the four dimensions and attach the vector to the individual."""
    pairs = ind.modified_pairs()
    if pairs:
        sound = sum(prosody(orig, new, config.weights, transcriber) for orig, new in pairs) / len(pairs)
    else:
        sound = 0.0
    if config.food_sim_scope == "modified":
        scope = tuple(new for _, new in pairs)
    else:
        scope = ind.current_words()
    vector = FitnessVector(
        prosody=sound,
        food_sim=semantics.food_similarity(scope, config.food_anchor, store) if scope else 0.0,
        orig_sim=semantics.surprise_similarity(pairs, store),
        altered=len(pairs),
    )
    ind.fitness = vector
    return vector


def nondominated_sort(fitnesses: Sequence[FitnessVector]) -> list[list[int]]:
    """Fast non-dominated sort; returns index fronts in rank order."""
    n = len(fitnesses)
    for i, f in enumerate(fitnesses):
        if f is None:
            raise ValueError(f"individual {i} is unevaluated")
    dominated_by: list[list[int]] = [[] for _ in range(n)]
    domination_count = [0] * n
    fronts: list[list[int]] = [[]]
    for p in range(n):
        for q in range(p + 1, n):
            if fitnesses[p].dominates(fitnesses[q]):
                dominated_by[p].append(q)
                domination_count[q] += 1
            elif fitnesses[q].dominates(fitnesses[p]):
                dominated_by[q].append(p)
                domination_count[p] += 1
    for p in range(n):
        if domination_count[p] == 0:
            fronts[0].append(p)
    current = 0
    while fronts[current]:
        next_front: list[int] = []
        for p in fronts[current]:
            for q in dominated_by[p]:
                domination_count[q] -= 1
                if domination_count[q] == 0:
                    next_front.append(q)
        current += 1
        fronts.append(sorted(next_front))
    fronts.pop()
    return fronts


def crowding_distance(front: Sequence[int], fitnesses: Sequence[FitnessVector]) -> dict[int, float]:
    """Standard NSGA-II crowding: per-objective neighbor gaps, boundaries infinite."""
    distances = {i: 0.0 for i in front}
    if len(front) <= 2:
        return {i: math.inf for i in front}
    for objective in range(len(OBJECTIVE_SENSES)):
        ordered = sorted(front, key=lambda i: fitnesses[i].as_tuple()[objective])
        low = fitnesses[ordered[0]].as_tuple()[objective]
        high = fitnesses[ordered[-1]].as_tuple()[objective]
        distances[ordered[0]] = math.inf
        distances[ordered[-1]] = math.inf
        span = high - low
        if span == 0:
            continue  # degenerate objective adds nothing
        for rank in range(1, len(ordered) - 1):
            if distances[ordered[rank]] == math.inf:
                continue
            gap = (
                fitnesses[ordered[rank + 1]].as_tuple()[objective]
                - fitnesses[ordered[rank - 1]].as_tuple()[objective]
            )
            distances[ordered[rank]] += gap / span
    return distances


def select_nsga2(pool: Sequence[Individual], mu: int) -> list[Individual]:
    """Duplicate-filter the pool, then keep the best mu by front rank and crowding."""
    unique: list[Individual] = []
    seen: set[Words] = set()
    for ind in pool:
        words = ind.current_words()
        if words in seen:
            continue
        seen.add(words)
        unique.append(ind)
    if len(unique) <= mu:
        return unique
    fitnesses = [ind.fitness for ind in unique]
    selected: list[Individual] = []
    for front in nondominated_sort(fitnesses):
        if len(selected) + len(front) <= mu:
            selected.extend(unique[i] for i in front)
            if len(selected) == mu:
                break
            continue
        distances = crowding_distance(front, fitnesses)
        # Larger crowding distance first; pool order breaks ties.
        boundary = sorted(front, key=lambda i: (-distances[i], i))
        selected.extend(unique[i] for i in boundary[: mu - len(selected)])
        break
    return selected


GenerationLog = Callable[[dict], None]


def evolve(
    title: Sequence[str],
    lexicon: Lexicon,
    store: EmbeddingStore,
    transcriber: AnyTranscriber,
    config: EvolutionConfig,
    log: GenerationLog | None = None,
) -> list[Individual]:
    """Run the full (mu + lambda) loop for one title; deterministic per seed."""
    rng = random.Random(config.seed)
    population = init_population(title, lexicon, config, rng)
    for ind in population:
        evaluate(ind, store, transcriber, config)
    for generation in range(1, config.generations + 1):
        offspring: list[Individual] = []
        while len(offspring) < config.lambda_:
            if rng.random() < config.crossover_prob and len(population) >= 2:
                i, j = rng.sample(range(len(population)), 2)
                child, _ = crossover(population[i], population[j], rng)
            else:
                parent = population[rng.randrange(len(population))]
                child = mutate(parent, lexicon, rng)
            offspring.append(child)
        for child in offspring:
            evaluate(child, store, transcriber, config)
        population = select_nsga2(list(population) + offspring, config.mu)
        if log is not None:
            log({"generation": generation, "best": _best_per_dimension(population)})
    return population


def _best_per_dimension(population: Sequence[Individual]) -> dict[str, float]:
    vectors = [ind.fitness for ind in population]
    return {
        "prosody": max(v.prosody for v in vectors),
        "food_sim": max(v.food_sim for v in vectors),
        "orig_sim": min(v.orig_sim for v in vectors),
        "altered": min(v.altered for v in vectors),
    }


def final_verdict(ind: Individual) -> bool:
    """The master's binary liking decision: threshold checks on all four dimensions."""
    if ind.fitness is None:
        raise ValueError("individual must be evaluated before the verdict")
    content_slots = ind.content_slot_count()
    if content_slots == 0:
        return False
    f = ind.fitness
    return (
        f.prosody > 0.0
        and f.food_sim > 0.0
        and f.orig_sim < 0.5
        and f.altered <= 0.5 * content_slots
    )


def per_title_seed(seed: int, title_index: int) -> int:
    """Independent per-title RNG stream derivation: seed XOR title index."""
    return seed ^ title_index


def generate_master_corpus(
    titles: Sequence[Words],
    lexicon: Lexicon,
    store: EmbeddingStore,
    transcriber: AnyTranscriber,
    config: EvolutionConfig,
    log: GenerationLog | None = None,
) -> list[ParallelPair]:
    """Evolve every title once and keep the verdict-passing final candidates.

    Titles whose final population contains no liked individual contribute no
    pairs. Exact duplicate pairs are collapsed.
    """
    pairs: list[ParallelPair] = []
    for index, title in enumerate(titles):
        title_config = replace(config, seed=per_title_seed(config.seed, index))
        title_log = None
        if log is not None:
            title_log = lambda record, _t=title: log({"title": " ".join(_t), **record})
        try:
            population = evolve(title, lexicon, store, transcriber, title_config, log=title_log)
        except NoEligibleSlotError:
            continue
        for ind in population:
            if final_verdict(ind):
                pairs.append(
                    ParallelPair(original=tuple(title), punned=ind.current_words(), source="master")
                )
    return dedupe_pairs(pairs)

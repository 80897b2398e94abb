"""Lexicons, part-of-speech lookup, inflection, and dataset ingestion."""

from __future__ import annotations

import string
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence

POS_TAGS = ("noun", "verb", "adj", "adv", "other")
CONTENT_TAGS = frozenset({"noun", "verb", "adj", "adv"})
SUBSTITUTABLE_TAGS = frozenset({"noun", "adj", "verb"})
PAIR_SOURCES = ("master", "peer", "apprentice")

Words = tuple[str, ...]


class DataFormatError(ValueError):
    """A data file could not be parsed; carries the offending location."""

    def __init__(self, path: str | Path, line_no: int, message: str):
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = str(path)
        self.line_no = line_no


@dataclass(frozen=True)
class TitleRecord:
    """One movie title with its popularity vote count."""

    title: str
    votes: int = 0


@dataclass(frozen=True)
class ParallelPair:
    """An (original title -> punned title) pair tagged with its provenance."""

    original: Words
    punned: Words
    source: str

    def __post_init__(self):
        if self.source not in PAIR_SOURCES:
            raise ValueError(f"unknown pair source {self.source!r}")
        if not self.original or not self.punned:
            raise ValueError("parallel pair sides must be nonempty")

    def key(self) -> tuple[Words, Words]:
        return (self.original, self.punned)


def _suffix_tag(word: str) -> str:
    # Cheap stand-in for a statistical tagger; see Lexicon.pos_of.
    if word.endswith("ly"):
        return "adv"
    if word.endswith(("ing", "ed")):
        return "verb"
    return "noun"


class Lexicon:
    """Word -> POS tags plus the ordered substitution vocabulary.

    Unknown words fall back to ``fallback_tagger`` (suffix heuristic by
    default); swap in another callable to plug a real tagger.
    """

    def __init__(
        self,
        entries: dict[str, frozenset[str]],
        food_words: Sequence[str],
        fallback_tagger: Optional[Callable[[str], str]] = None,
    ):
        self.entries = dict(entries)
        self.food_words: Words = tuple(food_words)
        self.fallback_tagger = fallback_tagger or _suffix_tag
        self._validate()

    def _validate(self):
        if not self.food_words:
            raise ValueError("food word list is empty")
        if len(set(self.food_words)) != len(self.food_words):
            raise ValueError("duplicate food words")
        for word, tags in self.entries.items():
            if not word or word != word.lower() or any(c.isspace() for c in word):
                raise ValueError(f"bad lexicon entry {word!r}")
            if not tags <= set(POS_TAGS):
                raise ValueError(f"unknown tag set {tags!r} for {word!r}")
        for word in self.food_words:
            if "noun" not in self.entries.get(word, frozenset()):
                raise ValueError(f"food word {word!r} missing noun entry")

    def tags_of(self, word: str) -> frozenset[str]:
        return self.entries.get(word.lower(), frozenset())

    def pos_of(self, word: str) -> str:
        """Primary tag for ``word``: lexicon first, heuristic fallback otherwise."""
        tags = self.tags_of(word)
        for tag in POS_TAGS:  # noun > verb > adj > adv > other
            if tag in tags:
                return tag
        return self.fallback_tagger(word.lower())

    def is_food(self, word: str) -> bool:
        return word.lower() in self._food_set

    @property
    def _food_set(self) -> frozenset[str]:
        cached = getattr(self, "_food_set_cache", None)
        if cached is None:
            cached = frozenset(self.food_words)
            object.__setattr__(self, "_food_set_cache", cached)
        return cached

    def __len__(self) -> int:
        return len(self.entries)


def load_lexicon(food_path: str | Path, pos_path: str | Path) -> Lexicon:
    """Build a Lexicon from a one-word-per-line food file and a word<TAB>tag file.

    Food word order is preserved (substitution sampling is index-based);
    duplicates keep their first occurrence. Every food word is entered as a
    noun on top of whatever the POS file says.
    """
    entries: dict[str, set[str]] = {}
    for line_no, raw in enumerate(_read_lines(pos_path), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise DataFormatError(pos_path, line_no, f"expected word<TAB>tag, got {raw!r}")
        word, tag = parts[0].strip().lower(), parts[1].strip().lower()
        if not word or any(c.isspace() for c in word):
            raise DataFormatError(pos_path, line_no, f"bad word {parts[0]!r}")
        if tag not in POS_TAGS:
            raise DataFormatError(pos_path, line_no, f"unknown tag {tag!r}")
        entries.setdefault(word, set()).add(tag)

    food_words: list[str] = []
    seen: set[str] = set()
    for line_no, raw in enumerate(_read_lines(food_path), start=1):
        word = raw.strip().lower()
        if not word:
            continue
        if any(c.isspace() for c in word):
            raise DataFormatError(food_path, line_no, f"food word contains whitespace: {raw!r}")
        if word in seen:
            continue
        seen.add(word)
        food_words.append(word)
        entries.setdefault(word, set()).add("noun")

    if not food_words:
        raise DataFormatError(food_path, 0, "no food words found")
    return Lexicon({w: frozenset(t) for w, t in entries.items()}, food_words)


def _read_lines(path: str | Path) -> list[str]:
    return Path(path).read_text(encoding="utf-8").splitlines()


def read_titles(path: str | Path) -> list[TitleRecord]:
    """Parse a `title<TAB>votes` file; votes are optional and default to 0."""
    records = []
    for line_no, raw in enumerate(_read_lines(path), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split("\t")
        title = parts[0].strip().lower()
        if not title:
            raise DataFormatError(path, line_no, "empty title")
        votes = 0
        if len(parts) > 1 and parts[1].strip():
            try:
                votes = int(parts[1].strip())
            except ValueError:
                raise DataFormatError(path, line_no, f"bad vote count {parts[1]!r}") from None
        if votes < 0:
            raise DataFormatError(path, line_no, f"negative vote count {votes}")
        records.append(TitleRecord(title=title, votes=votes))
    return records


def read_comments(path: str | Path) -> list[str]:
    return [line for line in _read_lines(path) if line.strip()]


def filter_titles(
    records: Iterable[TitleRecord], min_votes: int, require_multiword: bool = True
) -> list[Words]:
    """Keep titles with votes >= min_votes (and >= 2 words if required), in order."""
    if min_votes < 0:
        raise ValueError("min_votes must be nonnegative")
    kept = []
    for record in records:
        words = tuple(record.title.lower().split())
        if record.votes < min_votes:
            continue
        if require_multiword and len(words) < 2:
            continue
        kept.append(words)
    return kept


def preprocess_comment(text: str) -> Words:
    """Lowercase and tokenize a raw comment, dropping hashtags and mentions.

    Punctuation is stripped from token edges after marker removal; tokens
    that end up empty are dropped.
    """
    out = []
    for token in text.split():
        if token.startswith(("#", "@")):
            continue
        token = token.strip(string.punctuation).lower()
        if token:
            out.append(token)
    return tuple(out)


def edit_distance(a: Sequence, b: Sequence) -> int:
    """Unit-cost Levenshtein distance over arbitrary symbol sequences."""
    if len(a) < len(b):
        a, b = b, a
    previous = list(range(len(b) + 1))
    for i, sym_a in enumerate(a, start=1):
        current = [i]
        for j, sym_b in enumerate(b, start=1):
            cost = 0 if sym_a == sym_b else 1
            current.append(min(previous[j] + 1, current[j - 1] + 1, previous[j - 1] + cost))
        previous = current
    return previous[-1]


def word_edit_distance(a: Sequence[str], b: Sequence[str]) -> int:
    return edit_distance(tuple(a), tuple(b))


def char_edit_distance(a: str, b: str) -> int:
    return edit_distance(a, b)


def match_comment(comment: Sequence[str], titles: Sequence[Words]) -> Optional[ParallelPair]:
    """Match a preprocessed comment against the title list.

    The closest title under lexicographic (word distance, character distance)
    wins, earliest title breaking ties. The match is accepted only with word
    distance <= 3 and at least one word shared with the title.
    """
    if not titles:
        raise ValueError("titles must be nonempty")
    comment = tuple(comment)
    best_key = None
    best_title = None
    joined_comment = " ".join(comment)
    for title in titles:
        key = (
            word_edit_distance(comment, title),
            char_edit_distance(joined_comment, " ".join(title)),
        )
        if best_key is None or key < best_key:
            best_key = key
            best_title = title
    word_dist = best_key[0]
    if word_dist > 3 or not set(comment) & set(best_title):
        return None
    return ParallelPair(original=tuple(best_title), punned=comment, source="peer")


_SIBILANT_ENDINGS = ("s", "x", "z", "ch", "sh")


def _looks_plural(template: str) -> bool:
    # "hallows" yes, "beast" no; "ss" endings ("glass") treated as singular.
    return len(template) > 1 and template.endswith("s") and not template.endswith("ss")


def pluralize(word: str) -> str:
    if word.endswith(_SIBILANT_ENDINGS):
        return word + "es"
    if len(word) > 1 and word.endswith("y") and word[-2] not in "aeiou":
        return word[:-1] + "ies"
    return word + "s"


def inflect(replacement: str, template: str, pos: str) -> str:
    """Match the replacement's morphology to the template word.

    Only regular noun pluralization is applied; verbs and adjectives pass
    through unchanged.
    """
    if pos == "noun" and _looks_plural(template):
        return pluralize(replacement)
    return replacement


def read_corpus(path: str | Path) -> list[ParallelPair]:
    """Parse an `original<TAB>punned<TAB>source` parallel corpus file."""
    pairs = []
    for line_no, raw in enumerate(_read_lines(path), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise DataFormatError(path, line_no, f"expected 3 tab-separated fields, got {len(parts)}")
        original, punned, source = parts
        if source not in PAIR_SOURCES:
            raise DataFormatError(path, line_no, f"unknown source {source!r}")
        orig_words = tuple(original.strip().lower().split())
        pun_words = tuple(punned.strip().lower().split())
        if not orig_words or not pun_words:
            raise DataFormatError(path, line_no, "empty pair side")
        pairs.append(ParallelPair(original=orig_words, punned=pun_words, source=source))
    return pairs


def write_corpus(path: str | Path, pairs: Iterable[ParallelPair]) -> None:
    lines = [f"{' '.join(p.original)}\t{' '.join(p.punned)}\t{p.source}" for p in pairs]
    Path(path).write_text("\n".join(lines) + ("\n" if lines else ""), encoding="utf-8")


def dedupe_pairs(pairs: Iterable[ParallelPair]) -> list[ParallelPair]:
    """Drop exact (original, punned) duplicates, keeping first occurrence."""
    seen: set[tuple[Words, Words]] = set()
    out = []
    for pair in pairs:
        if pair.key() in seen:
            continue
        seen.add(pair.key())
        out.append(pair)
    return out

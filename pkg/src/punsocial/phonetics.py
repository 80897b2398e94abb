"""Grapheme-to-phoneme transcription and word-vs-word sound similarity.

The reference transcriber combines a CMU-style pronunciation dictionary with
a deterministic letter-to-phoneme fallback, so every word gets a transcription.
An external command-mode tool can be swapped in via CommandTranscriber.
"""

from __future__ import annotations

import subprocess
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .textdata import DataFormatError

# ARPABET symbol classes; stress digits are stripped on load.
VOWEL_SYMBOLS = frozenset(
    "AA AE AH AO AW AY EH ER EY IH IY OW OY UH UW".split()
)
CONSONANT_SYMBOLS = frozenset(
    "B CH D DH F G HH JH K L M N NG P R S SH T TH V W Y Z ZH".split()
)


@dataclass(frozen=True)
class Phonemes:
    """An ordered phoneme sequence with a vowel set for class tagging."""

    segments: tuple[str, ...]
    vowel_symbols: frozenset[str] = VOWEL_SYMBOLS

    def __post_init__(self):
        if not self.segments:
            raise ValueError("phoneme sequence must be nonempty")

    def is_vowel(self, segment: str) -> bool:
        return segment in self.vowel_symbols

    def vowels(self) -> tuple[str, ...]:
        return tuple(s for s in self.segments if self.is_vowel(s))

    def consonants(self) -> tuple[str, ...]:
        return tuple(s for s in self.segments if not self.is_vowel(s))

    def __len__(self) -> int:
        return len(self.segments)


@dataclass(frozen=True)
class ProsodyWeights:
    """Relative weights of the four sound-similarity sub-features."""

    consonance: float = 0.25
    assonance: float = 0.25
    rhyme: float = 0.25
    alliteration: float = 0.25

    def __post_init__(self):
        values = (self.consonance, self.assonance, self.rhyme, self.alliteration)
        if any(not 0.0 <= v <= 1.0 for v in values):
            raise ValueError("prosody weights must lie in [0, 1]")
        if abs(sum(values) - 1.0) > 1e-9:
            raise ValueError("prosody weights must sum to 1")


# Ordered longest-match-first letter-to-phoneme rules for out-of-dictionary
# words. Digits are spelled out so numeric tokens still transcribe.
_FALLBACK_MULTI = (
    ("tch", ("CH",)),
    ("ch", ("CH",)),
    ("sh", ("SH",)),
    ("th", ("TH",)),
    ("ph", ("F",)),
    ("wh", ("W",)),
    ("ng", ("NG",)),
    ("qu", ("K", "W")),
    ("ck", ("K",)),
    ("ee", ("IY",)),
    ("ea", ("IY",)),
    ("oo", ("UW",)),
    ("ou", ("AW",)),
    ("ow", ("AW",)),
    ("ai", ("EY",)),
    ("ay", ("EY",)),
    ("ei", ("EY",)),
    ("ey", ("EY",)),
    ("oa", ("OW",)),
    ("oi", ("OY",)),
    ("oy", ("OY",)),
    ("au", ("AO",)),
    ("aw", ("AO",)),
    ("ie", ("IY",)),
    ("ue", ("UW",)),
    ("bb", ("B",)),
    ("cc", ("K",)),
    ("dd", ("D",)),
    ("ff", ("F",)),
    ("gg", ("G",)),
    ("ll", ("L",)),
    ("mm", ("M",)),
    ("nn", ("N",)),
    ("pp", ("P",)),
    ("rr", ("R",)),
    ("ss", ("S",)),
    ("tt", ("T",)),
    ("zz", ("Z",)),
)
_FALLBACK_SINGLE = {
    "a": ("AE",), "b": ("B",), "c": ("K",), "d": ("D",), "e": ("EH",),
    "f": ("F",), "g": ("G",), "h": ("HH",), "i": ("IH",), "j": ("JH",),
    "k": ("K",), "l": ("L",), "m": ("M",), "n": ("N",), "o": ("AA",),
    "p": ("P",), "q": ("K",), "r": ("R",), "s": ("S",), "t": ("T",),
    "u": ("AH",), "v": ("V",), "w": ("W",), "x": ("K", "S"), "y": ("Y",),
    "z": ("Z",),
    "0": ("Z", "IH", "R", "OW"), "1": ("W", "AH", "N"), "2": ("T", "UW"),
    "3": ("TH", "R", "IY"), "4": ("F", "AO", "R"), "5": ("F", "AY", "V"),
    "6": ("S", "IH", "K", "S"), "7": ("S", "EH", "V", "AH", "N"),
    "8": ("EY", "T"), "9": ("N", "AY", "N"),
}
_CONSONANT_LETTERS = frozenset("bcdfghjklmnpqrstvwxz")


def fallback_transcription(word: str) -> tuple[str, ...]:
    """Deterministic rule transcription; nonempty for any nonempty word."""
    segments: list[str] = []
    i = 0
    n = len(word)
    while i < n:
        # Final silent e after a consonant letter ("bake", "plate").
        if word[i] == "e" and i == n - 1 and n > 2 and word[i - 1] in _CONSONANT_LETTERS:
            i += 1
            continue
        if word[i] == "y" and i == n - 1 and n > 1:
            segments.append("IY")
            i += 1
            continue
        for pattern, phones in _FALLBACK_MULTI:
            if word.startswith(pattern, i):
                segments.extend(phones)
                i += len(pattern)
                break
        else:
            segments.extend(_FALLBACK_SINGLE.get(word[i], ()))
            i += 1
    if not any(s in VOWEL_SYMBOLS for s in segments):
        # Orthographic y carries the vowel in words like "thyme"; guarantee
        # at least one vowel segment either way.
        segments = [("AY" if s == "Y" else s) for s in segments]
        if not any(s in VOWEL_SYMBOLS for s in segments):
            segments.append("AH")
    return tuple(segments)


def _strip_stress(symbol: str) -> str:
    return symbol.rstrip("0123456789").upper()


def load_inventory(path: str | Path) -> frozenset[str]:
    """Read a `symbol<TAB>vowel|consonant` inventory file; returns the vowel set."""
    vowels = set()
    for line_no, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2 or parts[1] not in ("vowel", "consonant"):
            raise DataFormatError(path, line_no, f"expected symbol<TAB>vowel|consonant, got {raw!r}")
        if parts[1] == "vowel":
            vowels.add(parts[0].strip().upper())
    return frozenset(vowels)


class Transcriber:
    """Dictionary-backed transcriber with rule fallback for unknown words."""

    def __init__(
        self,
        dictionary: dict[str, tuple[str, ...]] | None = None,
        vowel_symbols: frozenset[str] = VOWEL_SYMBOLS,
    ):
        self._dictionary = dict(dictionary or {})
        self._vowel_symbols = vowel_symbols
        self._cache: dict[str, Phonemes] = {}

    @classmethod
    def from_file(cls, path: str | Path, vowel_symbols: frozenset[str] = VOWEL_SYMBOLS) -> "Transcriber":
        """Load a `word<TAB>seg1 seg2 ...` pronunciation dictionary."""
        dictionary = {}
        for line_no, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith(";"):
                continue
            parts = line.split("\t")
            if len(parts) != 2 or not parts[1].strip():
                raise DataFormatError(path, line_no, f"expected word<TAB>phonemes, got {raw!r}")
            word = parts[0].strip().lower()
            segments = tuple(_strip_stress(s) for s in parts[1].split())
            if word not in dictionary:  # first pronunciation wins
                dictionary[word] = segments
        return cls(dictionary, vowel_symbols)

    def __contains__(self, word: str) -> bool:
        return word.lower() in self._dictionary

    def __len__(self) -> int:
        return len(self._dictionary)

    def transcribe(self, word: str) -> Phonemes:
        word = word.strip().lower()
        if not word:
            raise ValueError("cannot transcribe an empty word")
        cached = self._cache.get(word)
        if cached is not None:
            return cached
        segments = self._dictionary.get(word)
        if segments is None:
            segments = fallback_transcription(word)
        phonemes = Phonemes(segments=segments, vowel_symbols=self._vowel_symbols)
        self._cache[word] = phonemes
        return phonemes


class CommandTranscriber:
    """Adapter for an external line-mode transcription tool.

    The command is spawned once; each word written to its stdin must yield one
    whitespace-separated phoneme line on stdout.
    """

    def __init__(self, command: list[str], vowel_symbols: frozenset[str] = VOWEL_SYMBOLS):
        self._command = list(command)
        self._vowel_symbols = vowel_symbols
        self._process: subprocess.Popen | None = None
        self._cache: dict[str, Phonemes] = {}

    def _ensure_process(self) -> subprocess.Popen:
        if self._process is None or self._process.poll() is not None:
            self._process = subprocess.Popen(
                self._command,
                stdin=subprocess.PIPE,
                stdout=subprocess.PIPE,
                text=True,
                bufsize=1,
            )
        return self._process

    def transcribe(self, word: str) -> Phonemes:
        word = word.strip().lower()
        if not word:
            raise ValueError("cannot transcribe an empty word")
        cached = self._cache.get(word)
        if cached is not None:
            return cached
        process = self._ensure_process()
        process.stdin.write(word + "\n")
        process.stdin.flush()
        line = process.stdout.readline()
        if not line:
            raise RuntimeError(f"transcription command {self._command} produced no output for {word!r}")
        segments = tuple(_strip_stress(s) for s in line.split())
        if not segments:
            segments = fallback_transcription(word)
        phonemes = Phonemes(segments=segments, vowel_symbols=self._vowel_symbols)
        self._cache[word] = phonemes
        return phonemes

    def close(self):
        if self._process is not None and self._process.poll() is None:
            self._process.stdin.close()
            self._process.wait(timeout=5)
        self._process = None


def _overlap_score(a: tuple[str, ...], b: tuple[str, ...]) -> float:
    if not a or not b:
        return 0.0
    shared = sum((Counter(a) & Counter(b)).values())
    return shared / max(len(a), len(b))


def _common_prefix_len(a: tuple[str, ...], b: tuple[str, ...]) -> int:
    n = 0
    for x, y in zip(a, b):
        if x != y:
            break
        n += 1
    return n


def prosody(
    original: str,
    replacement: str,
    weights: ProsodyWeights,
    transcriber: Transcriber | CommandTranscriber,
) -> float:
    """Weighted sound similarity of two words, in [0, 1].

    Sub-scores: consonance and assonance are normalized multiset overlaps of
    consonant/vowel segments; rhyme and alliteration are the longest common
    phoneme suffix/prefix relative to the longer transcription.
    """
    a = transcriber.transcribe(original)
    b = transcriber.transcribe(replacement)
    longest = max(len(a), len(b))
    consonance = _overlap_score(a.consonants(), b.consonants())
    assonance = _overlap_score(a.vowels(), b.vowels())
    rhyme = _common_prefix_len(a.segments[::-1], b.segments[::-1]) / longest
    alliteration = _common_prefix_len(a.segments, b.segments) / longest
    return (
        weights.consonance * consonance
        + weights.assonance * assonance
        + weights.rhyme * rhyme
        + weights.alliteration * alliteration
    )

"""Pun-title generation: an evolutionary master, a trainable apprentice, and
parenting-style curation of the corpora that socialize the apprentice."""

__version__ = "0.1.0"

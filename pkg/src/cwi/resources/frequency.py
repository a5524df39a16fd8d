"""Unigram frequency table backed by a pre-aggregated ``word<TAB>count`` file."""
from __future__ import annotations

from collections import defaultdict
from types import MappingProxyType
from typing import Mapping

from ..errors import MalformedCount


class FrequencyStore:
    """Case-folded word -> corpus count. Absent words count 0."""

    def __init__(self, entries: Mapping[str, int]):
        merged = defaultdict(int)
        for word, count in entries.items():
            if count < 0:
                raise MalformedCount(f"negative count {count} for {word!r}")
            merged[word.lower()] += int(count)
        self._entries = MappingProxyType(dict(merged))

    @property
    def entries(self) -> Mapping[str, int]:
        return self._entries

    def __len__(self):
        return len(self._entries)

    def __contains__(self, word):
        return word.lower() in self._entries

    def lookup(self, word: str) -> int:
        return self._entries.get(word.lower(), 0)


def load_frequency_table(path) -> FrequencyStore:
    counts = defaultdict(int)
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, start=1):
            line = line.rstrip("\r\n")
            if not line.strip():
                continue
            try:
                word, raw = line.split("\t")
            except ValueError:
                raise MalformedCount(
                    "expected word<TAB>count", path=str(path), lineno=lineno
                ) from None
            raw = raw.strip()
            if not raw.isdigit() or not raw.isascii():
                raise MalformedCount(
                    f"count {raw!r} is not a non-negative integer",
                    path=str(path),
                    lineno=lineno,
                )
            counts[word.lower()] += int(raw)
    return FrequencyStore(counts)


def frequency(store: FrequencyStore, word: str) -> int:
    return store.lookup(word)

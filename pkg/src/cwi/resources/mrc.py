"""Concreteness ratings from the MRC2 psycholinguistic dictionary file.

MRC2.DCT records are fixed-width. Only two fields are read here (1-based,
inclusive columns):

    CNC   29-31   concreteness, 100..700, 000 when unrated
    WORD  52-     headword, terminated by ``|`` (phonetic fields follow)
"""
from __future__ import annotations

from types import MappingProxyType
from typing import Dict, Mapping

from ..errors import DataError, ShortLine

CNC_COLUMNS = (29, 31)
WORD_START = 52
MIN_SCORE, MAX_SCORE = 100, 700


class ConcretenessStore:
    def __init__(self, scores: Mapping[str, int]):
        for word, score in scores.items():
            if not MIN_SCORE <= score <= MAX_SCORE:
                raise DataError(f"concreteness {score} for {word!r} outside [100, 700]")
        self._scores = MappingProxyType({w.lower(): int(s) for w, s in scores.items()})

    @property
    def scores(self) -> Mapping[str, int]:
        return self._scores

    def __len__(self):
        return len(self._scores)

    def lookup(self, word: str) -> int:
        """Stored rating, or 0 for words the database does not rate."""
        return self._scores.get(word.lower(), 0)


def parse_record(line: str):
    """Return ``(word, cnc)`` from one MRC2 record line."""
    line = line.rstrip("\r\n")
    start, end = CNC_COLUMNS
    if len(line) < end:
        raise ShortLine(f"record has {len(line)} columns, CNC field ends at {end}")
    raw = line[start - 1:end]
    try:
        cnc = int(raw)
    except ValueError:
        raise DataError(f"CNC field {raw!r} is not numeric") from None
    if len(line) < WORD_START:
        raise ShortLine(f"record has {len(line)} columns, word starts at {WORD_START}")
    word = line[WORD_START - 1:].split("|", 1)[0].strip()
    if not word:
        raise DataError("empty word field")
    return word, cnc


def load_mrc(path) -> ConcretenessStore:
    scores: Dict[str, int] = {}
    with open(path, encoding="latin-1") as f:
        for lineno, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                word, cnc = parse_record(line)
            except DataError as err:
                raise err.at(path=str(path), lineno=lineno) from None
            if not MIN_SCORE <= cnc <= MAX_SCORE:
                continue
            key = word.lower()
            # per-POS duplicates: keep the highest rating
            scores[key] = max(cnc, scores.get(key, 0))
    return ConcretenessStore(scores)


def concreteness(store: ConcretenessStore, word: str) -> int:
    return store.lookup(word)

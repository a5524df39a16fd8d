"""Synonym lookup over the WordNet 3.x flat database files.

Only the parts needed to count synonyms are read: the ``index.*`` files map a
lemma to its synset offsets, the ``data.*`` files give each synset's member
words. Synset ids are ``<pos><offset>`` (e.g. ``n02084071``) because offsets
are only unique within one data file.
"""
from __future__ import annotations

import os
import re
from types import MappingProxyType
from typing import Dict, FrozenSet, Mapping

from ..errors import MalformedDataLine, MalformedIndexLine, MissingFile

POS_FILES = ("noun", "verb", "adj", "adv")
_POS_CODE = {"noun": "n", "verb": "v", "adj": "a", "adv": "r"}
_ADJ_MARKER = re.compile(r"\((?:a|p|ip)\)$")


def normalize_lemma(word: str) -> str:
    return _ADJ_MARKER.sub("", word).replace("_", " ").lower()


class SynonymStore:
    def __init__(
        self,
        lemma_index: Mapping[str, FrozenSet[str]],
        members: Mapping[str, FrozenSet[str]],
    ):
        self._lemma_index = MappingProxyType(dict(lemma_index))
        self._members = MappingProxyType(dict(members))

    @property
    def lemma_index(self) -> Mapping[str, FrozenSet[str]]:
        return self._lemma_index

    @property
    def members(self) -> Mapping[str, FrozenSet[str]]:
        return self._members

    def synsets(self, word: str) -> FrozenSet[str]:
        return self._lemma_index.get(normalize_lemma(word), frozenset())

    def synonyms(self, word: str) -> FrozenSet[str]:
        """Distinct lemmas sharing any synset with ``word``, excluding ``word``."""
        key = normalize_lemma(word)
        found = set()
        for synset_id in self._lemma_index.get(key, ()):
            found.update(self._members.get(synset_id, ()))
        found.discard(key)
        return frozenset(found)

    def synonym_count(self, word: str) -> int:
        return len(self.synonyms(word))


def _is_header(line: str) -> bool:
    return line.startswith("  ")


def _read_data_file(path, pos: str, members: Dict[str, FrozenSet[str]]) -> None:
    with open(path, encoding="utf-8", errors="replace") as f:
        for lineno, line in enumerate(f, start=1):
            if _is_header(line) or not line.strip():
                continue
            fields = line.split(" ")
            try:
                offset = fields[0]
                w_cnt = int(fields[3], 16)
                words = [fields[4 + 2 * j] for j in range(w_cnt)]
            except (IndexError, ValueError):
                raise MalformedDataLine(
                    "cannot read synset words", path=str(path), lineno=lineno
                ) from None
            if not offset.isdigit() or w_cnt < 1:
                raise MalformedDataLine(
                    "bad synset offset or word count", path=str(path), lineno=lineno
                )
            members[pos + offset] = frozenset(normalize_lemma(w) for w in words)


def _read_index_file(path, pos: str, members, lemma_index: Dict[str, set]) -> None:
    with open(path, encoding="utf-8", errors="replace") as f:
        for lineno, line in enumerate(f, start=1):
            if _is_header(line) or not line.strip():
                continue
            fields = line.split()
            try:
                lemma = fields[0]
                synset_cnt = int(fields[2])
                p_cnt = int(fields[3])
                start = 4 + p_cnt + 2
                offsets = fields[start:]
            except (IndexError, ValueError):
                raise MalformedIndexLine(
                    "cannot read index record", path=str(path), lineno=lineno
                ) from None
            if len(offsets) != synset_cnt or not all(o.isdigit() for o in offsets):
                raise MalformedIndexLine(
                    f"expected {synset_cnt} synset offsets, found {offsets!r}",
                    path=str(path),
                    lineno=lineno,
                )
            ids = lemma_index.setdefault(normalize_lemma(lemma), set())
            for offset in offsets:
                synset_id = pos + offset
                if synset_id not in members:
                    raise MalformedIndexLine(
                        f"synset {offset} not present in data file",
                        path=str(path),
                        lineno=lineno,
                    )
                ids.add(synset_id)


def load_wordnet(path) -> SynonymStore:
    """Load all four parts of speech from a WordNet ``dict/`` directory."""
    for name in POS_FILES:
        for kind in ("index", "data"):
            fpath = os.path.join(path, f"{kind}.{name}")
            if not os.path.isfile(fpath):
                raise MissingFile(f"missing WordNet file {kind}.{name}", path=str(path))

    members: Dict[str, FrozenSet[str]] = {}
    lemma_index: Dict[str, set] = {}
    for name in POS_FILES:
        pos = _POS_CODE[name]
        _read_data_file(os.path.join(path, f"data.{name}"), pos, members)
        _read_index_file(os.path.join(path, f"index.{name}"), pos, members, lemma_index)
    return SynonymStore(
        {lemma: frozenset(ids) for lemma, ids in lemma_index.items()}, members
    )


def synonym_count(store: SynonymStore, word: str) -> int:
    return store.synonym_count(word)

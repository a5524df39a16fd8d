"""Part-of-speech tagging behind a small pluggable interface.

Any object with ``tag(tokens) -> list[str]`` can be used as a tagger; the
:class:`LexiconTagger` here is a deterministic baseline (most-frequent tag
per word plus three suffix rules).
"""
from __future__ import annotations

from types import MappingProxyType
from typing import Dict, List, Mapping, Protocol, Sequence

from ..errors import EmptySentence, MalformedLexiconLine

UNKNOWN_TAG = "UNK"

PENN_TAGS = frozenset(
    """CC CD DT EX FW IN JJ JJR JJS LS MD NN NNS NNP NNPS PDT POS PRP PRP$ RB
    RBR RBS RP SYM TO UH VB VBD VBG VBN VBP VBZ WDT WP WP$ WRB
    $ # `` '' -LRB- -RRB- , . :""".split()
)
TAGS = PENN_TAGS | {UNKNOWN_TAG}

SUFFIX_RULES = (("ly", "RB"), ("ing", "VBG"), ("ed", "VBD"))


class PosTagger(Protocol):
    def tag(self, tokens: Sequence[str]) -> List[str]:
        ...


class LexiconTagger:
    def __init__(self, lexicon: Mapping[str, str], suffix_rules=SUFFIX_RULES):
        bad = {t for t in lexicon.values() if t not in TAGS}
        if bad:
            raise MalformedLexiconLine(f"unknown tags in lexicon: {sorted(bad)}")
        self._lexicon = MappingProxyType({w.lower(): t for w, t in lexicon.items()})
        self._suffix_rules = tuple(suffix_rules)

    @property
    def lexicon(self):
        return self._lexicon

    def tag_word(self, token: str) -> str:
        key = token.lower()
        hit = self._lexicon.get(key)
        if hit is not None:
            return hit
        for suffix, tag in self._suffix_rules:
            if key.endswith(suffix) and len(key) > len(suffix):
                return tag
        return UNKNOWN_TAG

    def tag(self, tokens: Sequence[str]) -> List[str]:
        if not tokens:
            raise EmptySentence("cannot tag an empty sentence")
        return [self.tag_word(t) for t in tokens]


class PretaggedTagger:
    """Serves tags computed elsewhere, keyed by the exact token sequence."""

    def __init__(self, tagged: Mapping[tuple, Sequence[str]]):
        self._tagged = {tuple(k): list(v) for k, v in tagged.items()}
        for tokens, tags in self._tagged.items():
            if len(tokens) != len(tags):
                raise MalformedLexiconLine("tag sequence length differs from tokens")

    def tag(self, tokens: Sequence[str]) -> List[str]:
        if not tokens:
            raise EmptySentence("cannot tag an empty sentence")
        tags = self._tagged.get(tuple(tokens))
        if tags is None:
            return [UNKNOWN_TAG] * len(tokens)
        return list(tags)


def load_tagger_lexicon(path) -> LexiconTagger:
    lexicon: Dict[str, str] = {}
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, start=1):
            line = line.rstrip("\r\n")
            if not line.strip():
                continue
            parts = line.split("\t")
            if len(parts) != 2 or parts[1] not in TAGS:
                raise MalformedLexiconLine(
                    "expected word<TAB>penn_tag", path=str(path), lineno=lineno
                )
            # first entry wins: lexicon files list the most frequent tag first
            lexicon.setdefault(parts[0].lower(), parts[1])
    return LexiconTagger(lexicon)


def tag_sentence(tagger: PosTagger, tokens: Sequence[str]) -> List[str]:
    if not tokens:
        raise EmptySentence("cannot tag an empty sentence")
    tags = tagger.tag(tokens)
    if len(tags) != len(tokens):
        raise ValueError(f"tagger returned {len(tags)} tags for {len(tokens)} tokens")
    return tags

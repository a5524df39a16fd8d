"""Lexical resources used by feature extraction."""
from dataclasses import dataclass

from .frequency import FrequencyStore, frequency, load_frequency_table
from .mrc import ConcretenessStore, concreteness, load_mrc
from .tagger import (
    UNKNOWN_TAG,
    LexiconTagger,
    PosTagger,
    PretaggedTagger,
    load_tagger_lexicon,
    tag_sentence,
)
from .wordnet import SynonymStore, load_wordnet, synonym_count


@dataclass(frozen=True)
class ResourceBundle:
    frequency: FrequencyStore
    synonyms: SynonymStore
    concreteness: ConcretenessStore
    tagger: PosTagger


def load_resources(freq_path, wordnet_path, mrc_path, lexicon_path) -> ResourceBundle:
    return ResourceBundle(
        frequency=load_frequency_table(freq_path),
        synonyms=load_wordnet(wordnet_path),
        concreteness=load_mrc(mrc_path),
        tagger=load_tagger_lexicon(lexicon_path),
    )


__all__ = [
    "ConcretenessStore",
    "FrequencyStore",
    "LexiconTagger",
    "PosTagger",
    "PretaggedTagger",
    "ResourceBundle",
    "SynonymStore",
    "UNKNOWN_TAG",
    "concreteness",
    "frequency",
    "load_frequency_table",
    "load_mrc",
    "load_resources",
    "load_tagger_lexicon",
    "load_wordnet",
    "synonym_count",
    "tag_sentence",
]

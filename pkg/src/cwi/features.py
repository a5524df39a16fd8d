"""The five-feature representation of a target word in context."""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import cached_property
from typing import Dict, Iterable, Optional, Sequence, Tuple

import numpy as np

from .corpus_io import Dataset, Instance
from .errors import BadFeatureMask, DataError, EmptyDataset, EmptyWord
from .resources import ResourceBundle, tag_sentence

FEATURES = ("log_frequency", "pos_tag", "synonym_count", "inverse_length", "concreteness")
CATEGORICAL = frozenset({"pos_tag"})
NUMERIC = tuple(f for f in FEATURES if f not in CATEGORICAL)


@dataclass(frozen=True)
class FeatureVector:
    log_frequency: float
    pos_tag: str
    synonym_count: int
    inverse_length: float
    concreteness: int
    label: Optional[int] = None

    def __post_init__(self):
        if self.log_frequency < 0:
            raise DataError(f"log_frequency must be >= 0, got {self.log_frequency}")
        if self.synonym_count < 0:
            raise DataError(f"synonym_count must be >= 0, got {self.synonym_count}")
        if not 0 < self.inverse_length <= 1:
            raise DataError(f"inverse_length must be in (0, 1], got {self.inverse_length}")
        if self.concreteness != 0 and not 100 <= self.concreteness <= 700:
            raise DataError(f"concreteness must be 0 or in [100, 700], got {self.concreteness}")
        if self.label is not None and self.label not in (0, 1):
            raise DataError(f"label must be 0 or 1, got {self.label}")

    def value(self, feature: str):
        return getattr(self, feature)

    def values(self) -> Tuple:
        return tuple(getattr(self, f) for f in FEATURES)


def check_mask(mask: Iterable[str]) -> Tuple[str, ...]:
    """Validate a feature subset and return it in canonical order."""
    mask = set(mask)
    unknown = mask - set(FEATURES)
    if unknown:
        raise BadFeatureMask(f"unknown features: {sorted(unknown)}")
    if not mask:
        raise BadFeatureMask("feature mask must not be empty")
    return tuple(f for f in FEATURES if f in mask)


def parse_mask(spec: str) -> Tuple[str, ...]:
    """Parse ``all`` or a comma-separated list of feature names."""
    if spec.strip() == "all":
        return FEATURES
    return check_mask(name.strip() for name in spec.split(",") if name.strip())


@dataclass(frozen=True)
class FeatureDataset:
    vectors: Tuple[FeatureVector, ...]
    feature_mask: Tuple[str, ...] = FEATURES

    def __post_init__(self):
        object.__setattr__(self, "vectors", tuple(self.vectors))
        object.__setattr__(self, "feature_mask", check_mask(self.feature_mask))
        labeled = {v.label is not None for v in self.vectors}
        if len(labeled) > 1:
            raise DataError("feature vectors must be all labeled or all unlabeled")

    def __len__(self):
        return len(self.vectors)

    @property
    def labeled(self) -> bool:
        return bool(self.vectors) and self.vectors[0].label is not None

    def with_mask(self, mask: Iterable[str]) -> "FeatureDataset":
        return FeatureDataset(self.vectors, check_mask(mask))

    def take(self, indices: Sequence[int]) -> "FeatureDataset":
        return FeatureDataset(tuple(self.vectors[i] for i in indices), self.feature_mask)

    def map_feature(self, feature: str, fn) -> "FeatureDataset":
        """Return a copy with ``fn`` applied to one feature of every vector."""
        return FeatureDataset(
            tuple(replace(v, **{feature: fn(getattr(v, feature))}) for v in self.vectors),
            self.feature_mask,
        )

    @cached_property
    def columns(self) -> Dict[str, np.ndarray]:
        """Active features as arrays: float64 for numeric, str objects for tags."""
        cols = {}
        for name in self.feature_mask:
            values = [getattr(v, name) for v in self.vectors]
            if name in CATEGORICAL:
                cols[name] = np.array(values, dtype=object)
            else:
                cols[name] = np.array(values, dtype=np.float64)
        return cols

    @cached_property
    def labels(self) -> np.ndarray:
        if not self.labeled:
            return np.zeros(0, dtype=np.int64)
        return np.array([v.label for v in self.vectors], dtype=np.int64)


def inverse_length(word: str) -> float:
    if not word:
        raise EmptyWord("target word is empty")
    return 1.0 / len(word)


def extract(instance: Instance, resources: ResourceBundle, tags=None) -> FeatureVector:
    """Build the feature vector for one instance.

    ``tags`` may carry a precomputed tagging of ``instance.tokens``.
    """
    word = instance.target_word
    if tags is None:
        tags = tag_sentence(resources.tagger, instance.tokens)
    return FeatureVector(
        log_frequency=math.log10(1 + resources.frequency.lookup(word)),
        pos_tag=tags[instance.offset],
        synonym_count=resources.synonyms.synonym_count(word),
        inverse_length=inverse_length(word),
        concreteness=resources.concreteness.lookup(word),
        label=instance.label,
    )


def build_feature_matrix(dataset: Dataset, resources: ResourceBundle) -> FeatureDataset:
    if len(dataset) == 0:
        raise EmptyDataset("cannot build features for an empty dataset")
    tag_cache: Dict[Tuple[str, ...], list] = {}
    vectors = []
    for i, inst in enumerate(dataset):
        try:
            tags = tag_cache.get(inst.tokens)
            if tags is None:
                tags = tag_cache[inst.tokens] = tag_sentence(resources.tagger, inst.tokens)
            vectors.append(extract(inst, resources, tags))
        except DataError as err:
            raise type(err)(f"instance {i}: {err.detail}") from None
    return FeatureDataset(tuple(vectors), FEATURES)


CSV_HEADER = ",".join(FEATURES)


def format_row(fv: FeatureVector, mask: Sequence[str] = FEATURES, with_label: bool = True) -> str:
    cells = []
    for name in mask:
        value = getattr(fv, name)
        if isinstance(value, float):
            cells.append(f"{value:.6f}")
        else:
            cells.append(str(value))
    if with_label and fv.label is not None:
        cells.append(str(fv.label))
    return ",".join(cells)


def write_feature_matrix(data: FeatureDataset, fh) -> int:
    """Write the CSV export (header plus one row per vector); returns row count."""
    header = list(data.feature_mask) + (["label"] if data.labeled else [])
    fh.write(",".join(header) + "\n")
    for fv in data.vectors:
        fh.write(format_row(fv, data.feature_mask) + "\n")
    return len(data.vectors)


__all__ = [
    "CATEGORICAL",
    "FEATURES",
    "NUMERIC",
    "FeatureDataset",
    "FeatureVector",
    "build_feature_matrix",
    "check_mask",
    "extract",
    "format_row",
    "inverse_length",
    "parse_mask",
    "write_feature_matrix",
]

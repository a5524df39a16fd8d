"""Shared configuration, thresholding and column helpers for the learners."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Sequence

import numpy as np

from ..errors import BadConfig, BadThreshold, MissingFeature
from ..features import CATEGORICAL

MAX_SEED = 2**64 - 1


@dataclass(frozen=True)
class TrainConfig:
    num_trees: int = 100
    features_per_split: int = 3
    max_depth: Optional[int] = None
    min_leaf_size: int = 2
    seed: int = 42
    bootstrap: bool = True

    def __post_init__(self):
        if self.num_trees < 1:
            raise BadConfig(f"num_trees must be positive, got {self.num_trees}")
        if not 1 <= self.features_per_split <= 5:
            raise BadConfig(f"features_per_split must be in 1..5, got {self.features_per_split}")
        if self.max_depth is not None and self.max_depth < 1:
            raise BadConfig(f"max_depth must be positive, got {self.max_depth}")
        if self.min_leaf_size < 1:
            raise BadConfig(f"min_leaf_size must be positive, got {self.min_leaf_size}")
        if not 0 <= self.seed <= MAX_SEED:
            raise BadConfig(f"seed must fit in 64 unsigned bits, got {self.seed}")

    def to_dict(self) -> Dict:
        return {
            "num_trees": self.num_trees,
            "features_per_split": self.features_per_split,
            "max_depth": self.max_depth,
            "min_leaf_size": self.min_leaf_size,
            "seed": self.seed,
            "bootstrap": self.bootstrap,
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "TrainConfig":
        return cls(**d)


@dataclass(frozen=True)
class Prediction:
    probability_complex: float
    predicted_label: int
    threshold_used: float


def check_threshold(threshold: float) -> float:
    if not 0.0 < threshold < 1.0:
        raise BadThreshold(f"threshold must lie strictly between 0 and 1, got {threshold}")
    return threshold


def classify(probability_complex: float, threshold: float = 0.5) -> Prediction:
    """Label 1 (complex) iff the probability reaches the threshold."""
    check_threshold(threshold)
    if not 0.0 <= probability_complex <= 1.0:
        raise BadThreshold(f"probability must lie in [0, 1], got {probability_complex}")
    label = 1 if probability_complex >= threshold else 0
    return Prediction(probability_complex, label, threshold)


def derive_seed(*keys: int) -> int:
    """Deterministic 64-bit seed from a tuple of non-negative integers."""
    return int(np.random.SeedSequence(list(keys)).generate_state(1, np.uint64)[0])


def _get(fv, name):
    if isinstance(fv, Mapping):
        if name not in fv or fv[name] is None:
            raise MissingFeature(f"feature {name!r} missing from input")
        return fv[name]
    value = getattr(fv, name, None)
    if value is None:
        raise MissingFeature(f"feature {name!r} missing from input")
    return value


def vectors_to_columns(vectors: Sequence, mask: Sequence[str]) -> Dict[str, np.ndarray]:
    """Column arrays for ``mask`` from FeatureVectors or plain mappings."""
    cols = {}
    for name in mask:
        values = [_get(fv, name) for fv in vectors]
        if name in CATEGORICAL:
            cols[name] = np.array(values, dtype=object)
        else:
            cols[name] = np.array(values, dtype=np.float64)
    return cols

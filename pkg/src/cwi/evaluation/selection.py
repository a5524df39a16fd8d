"""Filter (information gain) and wrapper (exhaustive subset) feature selection."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..classifiers.splits import entropy
from ..errors import SingleClassData, UnlabeledData
from ..features import CATEGORICAL, FEATURES
from .crossval import cross_validate_matrix

MAX_BINS = 10


def equal_frequency_edges(values: Sequence[float], max_bins: int = MAX_BINS) -> np.ndarray:
    """Cut points splitting ``values`` into at most ``max_bins`` equal-count bins.

    Cuts sit at midpoints between distinct neighbouring values; a cut that
    would land inside a run of equal values moves to the nearer end of the
    run (the lower end on a tie).
    """
    v = np.sort(np.asarray(values, dtype=np.float64))
    n = len(v)
    bins = min(max_bins, len(np.unique(v)))
    edges = []
    for j in range(1, bins):
        r = _nearest_boundary(v, (j * n) // bins)
        if r is not None:
            edges.append((v[r - 1] + v[r]) / 2.0)
    return np.unique(np.asarray(edges, dtype=np.float64))


def _nearest_boundary(v, r):
    """Closest index b to r with 0 < b < len(v) and v[b - 1] < v[b]."""
    n = len(v)
    lo = r
    while 0 < lo < n and v[lo] == v[lo - 1]:
        lo -= 1
    hi = r
    while 0 < hi < n and v[hi] == v[hi - 1]:
        hi += 1
    options = [b for b in (lo, hi) if 0 < b < n]
    if not options:
        return None
    return min(options, key=lambda b: (abs(b - r), b))


def discretize(values: Sequence[float], max_bins: int = MAX_BINS) -> np.ndarray:
    values = np.asarray(values, dtype=np.float64)
    return np.searchsorted(equal_frequency_edges(values, max_bins), values, side="left")


def conditional_entropy(groups: Sequence, labels: Sequence[int]) -> float:
    groups = list(groups)
    labels = np.asarray(labels, dtype=np.int64)
    n = len(labels)
    counts = {}
    for g, y in zip(groups, labels):
        pair = counts.setdefault(g, [0, 0])
        pair[int(y)] += 1
    return sum((c0 + c1) / n * entropy((c0, c1)) for c0, c1 in counts.values())


def information_gain(values: Sequence, labels: Sequence[int], categorical: Optional[bool] = None) -> float:
    """Label entropy minus entropy conditioned on the (binned) feature.

    Numeric features are binned by :func:`equal_frequency_edges`; categorical
    ones (auto-detected from string values) condition on each value.
    """
    labels = np.asarray(labels, dtype=np.int64)
    if len(labels) != len(values):
        raise ValueError("values and labels differ in length")
    k1 = int(labels.sum())
    if len(labels) < 2 or k1 == 0 or k1 == len(labels):
        raise SingleClassData("information gain needs both classes present")
    if categorical is None:
        categorical = any(isinstance(v, str) for v in values)
    groups = list(values) if categorical else discretize(values).tolist()
    ig = entropy((len(labels) - k1, k1)) - conditional_entropy(groups, labels)
    return max(ig, 0.0)


def rank_features(data) -> List[Tuple[str, float]]:
    """Active features by descending information gain, ties in canonical order."""
    if not data.labeled:
        raise UnlabeledData("feature ranking needs labeled data")
    scored = [
        (name, information_gain(data.columns[name], data.labels, name in CATEGORICAL))
        for name in data.feature_mask
    ]
    return sorted(scored, key=lambda item: -item[1])


def subset_bitmask(subset: Sequence[str]) -> str:
    """One character per canonical feature, ``1`` when the feature is in the subset."""
    return "".join("1" if f in subset else "0" for f in FEATURES)


def all_subsets(features: Sequence[str] = FEATURES) -> List[Tuple[str, ...]]:
    return [c for size in range(1, len(features) + 1) for c in combinations(features, size)]


@dataclass(frozen=True)
class SubsetScore:
    subset: Tuple[str, ...]
    correct: int
    total: int

    @property
    def accuracy(self) -> float:
        return self.correct / self.total

    @property
    def bitmask(self) -> str:
        return subset_bitmask(self.subset)

    def rank_key(self):
        return (-self.correct, len(self.subset), tuple(FEATURES.index(f) for f in self.subset))


@dataclass(frozen=True)
class WrapperResult:
    best: SubsetScore
    log: Tuple[SubsetScore, ...]


def wrapper_subset_selection(learner, data, k: int = 10, seed: int = 42, threshold: float = 0.5, order=None) -> WrapperResult:
    """Cross-validate the learner on every non-empty feature subset.

    Folds are shared by all subsets; learner seeds are keyed by the subset's
    bitmask so the outcome does not depend on evaluation ``order``.
    Accuracy picks the winner; ties prefer smaller, then earlier, subsets.
    """
    subsets = all_subsets(FEATURES)
    if order is not None:
        subsets = [subsets[i] for i in order]
    log = []
    for subset in subsets:
        key = int(subset_bitmask(subset), 2)
        m = cross_validate_matrix(learner, data.with_mask(subset), k, seed, threshold, key=(key,))
        log.append(SubsetScore(subset, m.tp + m.tn, m.total))
    best = min(log, key=SubsetScore.rank_key)
    return WrapperResult(best, tuple(log))

"""Entropy and information-gain split search shared by the tree learners."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from ..errors import EmptyCounts, UnlabeledData
from ..features import CATEGORICAL

# gains at or below this are rounding noise from equal-proportion children
MIN_GAIN = 1e-12


def entropy(counts: Tuple[int, int]) -> float:
    """Binary Shannon entropy in bits of a ``(count_0, count_1)`` pair."""
    n0, n1 = counts
    if n0 < 0 or n1 < 0:
        raise EmptyCounts(f"negative class count in {counts}")
    total = n0 + n1
    if total == 0:
        raise EmptyCounts("entropy of an empty count pair")
    h = 0.0
    for c in (n0, n1):
        if c:
            p = c / total
            h -= p * math.log2(p)
    return h


_XLOGX = np.zeros(1)


def xlogx_table(n: int) -> np.ndarray:
    """``k * log2(k)`` for k = 0..n, with 0 log 0 = 0 (cached, grown on demand)."""
    global _XLOGX
    if len(_XLOGX) <= n:
        k = np.arange(max(n + 1, 2 * len(_XLOGX)), dtype=np.float64)
        table = np.zeros_like(k)
        table[1:] = k[1:] * np.log2(k[1:])
        _XLOGX = table
    return _XLOGX


def _weighted_entropy_sum(t, n0, n1):
    """Sum over children of ``size * entropy`` from integer class counts."""
    return t[n0 + n1] - t[n0] - t[n1]


@dataclass(frozen=True)
class Split:
    feature: str
    gain: float
    threshold: Optional[float] = None
    categories: Optional[Tuple[str, ...]] = None

    @property
    def categorical(self) -> bool:
        return self.categories is not None


def _numeric_split(x, y, parent_h, min_leaf, t):
    n = len(x)
    order = np.argsort(x, kind="stable")
    xs = x[order]
    admissible = xs[1:] > xs[:-1]
    if min_leaf > 1:
        admissible[: min_leaf - 1] = False
        admissible[n - min_leaf:] = False
    if not admissible.any():
        return None
    ones = np.cumsum(y[order])
    cut = np.flatnonzero(admissible)
    left_n = cut + 1
    left1 = ones[cut]
    left0 = left_n - left1
    right1 = ones[-1] - left1
    right0 = (n - left_n) - right1
    children = _weighted_entropy_sum(t, left0, left1) + _weighted_entropy_sum(t, right0, right1)
    gains = parent_h - children / n
    i = int(np.argmax(gains))
    j = cut[i]
    return float(gains[i]), float((xs[j] + xs[j + 1]) / 2.0)


def _categorical_split(x, y, parent_h, min_leaf, t):
    cats, inverse = np.unique(x, return_inverse=True)
    if len(cats) < 2:
        return None
    n1 = np.bincount(inverse, weights=y, minlength=len(cats)).astype(np.int64)
    sizes = np.bincount(inverse, minlength=len(cats))
    if np.count_nonzero(sizes >= min_leaf) < 2:
        return None
    gain = parent_h - float(np.sum(_weighted_entropy_sum(t, sizes - n1, n1))) / len(x)
    return float(gain), tuple(str(c) for c in cats)


def find_best_split(
    columns, y: np.ndarray, features: Sequence[str], min_leaf: int = 1
) -> Optional[Split]:
    """Best information-gain split over ``features`` of the given column arrays.

    Numeric features are cut at midpoints between consecutive distinct
    values (value <= threshold goes left); the categorical feature splits
    multiway by value. With ``min_leaf`` > 1 a numeric cut must leave that
    many vectors on each side and a categorical split needs two branches of
    that size. Ties go to the earlier feature in ``features`` and, within a
    feature, to the smallest threshold.
    """
    n = len(y)
    if n < 2:
        return None
    k1 = int(y.sum())
    if k1 == 0 or k1 == n:
        return None
    t = xlogx_table(n)
    parent_h = (t[n] - t[k1] - t[n - k1]) / n
    best = None
    for name in features:
        x = columns[name]
        if name in CATEGORICAL:
            found = _categorical_split(x, y, parent_h, min_leaf, t)
            if found is None:
                continue
            gain, cats = found
            candidate = Split(name, gain, categories=cats)
        else:
            found = _numeric_split(x, y, parent_h, min_leaf, t)
            if found is None:
                continue
            gain, threshold = found
            candidate = Split(name, gain, threshold=threshold)
        if candidate.gain > MIN_GAIN and (best is None or candidate.gain > best.gain):
            best = candidate
    return best


def best_split(data, features: Optional[Sequence[str]] = None, min_leaf: int = 1) -> Optional[Split]:
    """Best split of a labeled FeatureDataset, or None when nothing gains."""
    if not data.labeled:
        raise UnlabeledData("best_split needs labeled vectors")
    if features is None:
        features = data.feature_mask
    return find_best_split(data.columns, data.labels, features, min_leaf)

"""Stratified k-fold cross-validation with pooled held-out predictions."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..classifiers.base import check_threshold, derive_seed
from ..errors import BadK, DataError, TooFewPerClass, UnlabeledData
from .metrics import ClassMetrics, ConfusionMatrix, class_metrics, confusion


@dataclass(frozen=True)
class FoldAssignment:
    folds: np.ndarray
    k: int
    seed: int

    def train_test(self, fold: int):
        test = np.flatnonzero(self.folds == fold)
        train = np.flatnonzero(self.folds != fold)
        return train, test


def stratified_folds(labels: Sequence[int], k: int, seed: int) -> FoldAssignment:
    """Shuffle each class with a seeded permutation and deal it round-robin.

    Dealing continues across classes from where the previous class stopped,
    which keeps fold sizes within one of each other as well.
    """
    if k < 2:
        raise BadK(f"cross-validation needs k >= 2, got {k}")
    labels = np.asarray(labels, dtype=np.int64)
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    folds = np.empty(len(labels), dtype=np.int64)
    start = 0
    for c in (0, 1):
        members = np.flatnonzero(labels == c)
        if len(members) < k:
            raise TooFewPerClass(f"class {c} has {len(members)} instances, fewer than k={k}")
        members = members[rng.permutation(len(members))]
        folds[members] = (start + np.arange(len(members))) % k
        start = (start + len(members)) % k
    return FoldAssignment(folds, k, seed)


def stratified_k_fold(data, k: int, seed: int) -> FoldAssignment:
    if not data.labeled:
        raise UnlabeledData("stratified folds need labeled data")
    return stratified_folds(data.labels, k, seed)


def cross_validate_matrix(learner, data, k: int = 10, seed: int = 42, threshold: float = 0.5, key=()) -> ConfusionMatrix:
    """Pooled confusion matrix over all held-out folds.

    The learner for fold ``f`` is seeded from ``(seed, *key, f)``.
    """
    check_threshold(threshold)
    assignment = stratified_k_fold(data, k, seed)
    pooled = ConfusionMatrix(0, 0, 0, 0)
    for fold in range(k):
        train_idx, test_idx = assignment.train_test(fold)
        train = data.take(train_idx)
        test = data.take(test_idx)
        try:
            model = learner.fit(train, seed=derive_seed(seed, *key, fold))
        except DataError as err:
            raise type(err)(f"fold {fold}: {err.detail}") from None
        proba = np.asarray(model.predict_proba_many(test.vectors), dtype=np.float64)
        predicted = (proba >= threshold).astype(np.int64)
        pooled = pooled + confusion(predicted, test.labels)
    return pooled


def cross_validate(learner, data, k: int = 10, seed: int = 42, threshold: float = 0.5) -> ClassMetrics:
    return class_metrics(cross_validate_matrix(learner, data, k, seed, threshold))

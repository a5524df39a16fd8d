"""Naive Bayes baseline: Gaussian numeric features, Laplace-smoothed POS tags."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

import numpy as np

from ..errors import SingleClassData, UnlabeledData
from ..features import CATEGORICAL
from .base import vectors_to_columns

VARIANCE_FLOOR_SCALE = 1e-9


@dataclass
class NaiveBayesModel:
    feature_mask: Tuple[str, ...]
    priors: Tuple[float, float]
    # feature -> ((mean_0, var_0), (mean_1, var_1))
    gaussians: Dict[str, Tuple[Tuple[float, float], Tuple[float, float]]]
    # feature -> (categories, (probs_0, probs_1), (unseen_0, unseen_1))
    categorical: Dict[str, Tuple[Tuple[str, ...], Tuple[Tuple[float, ...], Tuple[float, ...]], Tuple[float, float]]]

    model_kind = "naive_bayes"

    def log_joint(self, columns, n: int) -> np.ndarray:
        """``(n, 2)`` array of log prior + log likelihood per class."""
        out = np.tile(np.log(np.asarray(self.priors)), (n, 1))
        for name, params in self.gaussians.items():
            x = columns[name]
            for c, (mean, var) in enumerate(params):
                out[:, c] += -0.5 * np.log(2 * np.pi * var) - (x - mean) ** 2 / (2 * var)
        for name, (cats, probs, unseen) in self.categorical.items():
            lookup = [dict(zip(cats, probs[c])) for c in (0, 1)]
            values = columns[name]
            for c in (0, 1):
                out[:, c] += np.log([lookup[c].get(v, unseen[c]) for v in values])
        return out

    def predict_proba_columns(self, columns, n: int) -> np.ndarray:
        joint = self.log_joint(columns, n)
        top = joint.max(axis=1, keepdims=True)
        weights = np.exp(joint - top)
        return weights[:, 1] / weights.sum(axis=1)

    def predict_proba_many(self, vectors: Sequence) -> np.ndarray:
        return self.predict_proba_columns(vectors_to_columns(vectors, self.feature_mask), len(vectors))

    def predict_proba(self, fv) -> float:
        """Posterior probability of the complex class."""
        return float(self.predict_proba_many([fv])[0])


def train_naive_bayes(data) -> NaiveBayesModel:
    if not data.labeled or len(data) == 0:
        raise UnlabeledData("naive Bayes needs a non-empty labeled dataset")
    y = data.labels
    n1 = int(y.sum())
    n0 = len(y) - n1
    if n0 == 0 or n1 == 0:
        raise SingleClassData("naive Bayes needs both classes in the training data")
    n = len(y)
    priors = ((n0 + 1) / (n + 2), (n1 + 1) / (n + 2))
    class_rows = (y == 0, y == 1)

    gaussians = {}
    categorical = {}
    for name in data.feature_mask:
        x = data.columns[name]
        if name in CATEGORICAL:
            cats = tuple(sorted(set(x.tolist())))
            # one extra smoothing slot reserves mass for tags unseen in training
            vocab = len(cats) + 1
            probs = []
            unseen = []
            for rows in class_rows:
                seen = x[rows].tolist()
                total = len(seen)
                freq = {c: 0 for c in cats}
                for v in seen:
                    freq[v] += 1
                probs.append(tuple((freq[c] + 1) / (total + vocab) for c in cats))
                unseen.append(1 / (total + vocab))
            categorical[name] = (cats, tuple(probs), tuple(unseen))
        else:
            floor = VARIANCE_FLOOR_SCALE * (float(np.var(x)) + 1e-12)
            params = []
            for rows in class_rows:
                xc = x[rows]
                params.append((float(xc.mean()), max(float(xc.var()), floor)))
            gaussians[name] = tuple(params)
    return NaiveBayesModel(data.feature_mask, priors, gaussians, categorical)


def predict_naive_bayes(model: NaiveBayesModel, fv) -> float:
    return model.predict_proba(fv)

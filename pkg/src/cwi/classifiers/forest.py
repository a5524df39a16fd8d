"""Bagged random forests of information-gain trees.

Tree ``i`` draws its bootstrap sample and its per-node feature subsets from a
generator seeded by ``(config.seed, i)``, so the model does not depend on the
order or the process in which trees are grown.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Optional, Sequence, Tuple

import numpy as np

from ..errors import UnlabeledData
from .base import TrainConfig, vectors_to_columns
from .tree import DecisionTree, grow


@dataclass
class RandomForestModel:
    trees: Tuple[DecisionTree, ...]
    config: TrainConfig
    feature_mask: Tuple[str, ...]

    model_kind = "forest"

    def predict_proba_columns(self, columns, n: int) -> np.ndarray:
        votes = np.zeros(n, dtype=np.int64)
        for tree in self.trees:
            votes += tree.votes(columns, n)
        return votes / len(self.trees)

    def predict_proba_many(self, vectors: Sequence) -> np.ndarray:
        return self.predict_proba_columns(vectors_to_columns(vectors, self.feature_mask), len(vectors))

    def predict_proba(self, fv) -> float:
        """Fraction of trees whose leaf votes complex."""
        return float(self.predict_proba_many([fv])[0])


def tree_rng(seed: int, tree_index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, tree_index]))


def bootstrap_indices(n: int, rng: np.random.Generator) -> np.ndarray:
    return np.sort(rng.integers(0, n, size=n))


def sample_for_tree(n: int, config: TrainConfig, tree_index: int):
    """The generator and training rows used by tree ``tree_index``."""
    rng = tree_rng(config.seed, tree_index)
    idx = bootstrap_indices(n, rng) if config.bootstrap else np.arange(n)
    return rng, idx


def _fit_one(columns, y, mask, config, tree_index):
    rng, idx = sample_for_tree(len(y), config, tree_index)
    return DecisionTree(grow(columns, y, idx, mask, config, rng), mask, config)


_WORKER_STATE = None


def _init_worker(columns, y, mask, config):
    global _WORKER_STATE
    _WORKER_STATE = (columns, y, mask, config)


def _fit_in_worker(tree_index):
    columns, y, mask, config = _WORKER_STATE
    return _fit_one(columns, y, mask, config, tree_index)


def train_forest(data, config: TrainConfig, n_jobs: int = 1) -> RandomForestModel:
    """Grow ``config.num_trees`` trees; ``n_jobs > 1`` uses worker processes."""
    if not data.labeled or len(data) == 0:
        raise UnlabeledData("train_forest needs a non-empty labeled dataset")
    mask = data.feature_mask
    # a feature subset smaller than mtry (wrapper search) caps it
    effective = replace(config, features_per_split=min(config.features_per_split, len(mask)))
    columns, y = data.columns, data.labels
    if n_jobs > 1 and effective.num_trees > 1:
        with ProcessPoolExecutor(
            max_workers=n_jobs, initializer=_init_worker, initargs=(columns, y, mask, effective)
        ) as pool:
            trees = tuple(pool.map(_fit_in_worker, range(effective.num_trees)))
    else:
        trees = tuple(_fit_one(columns, y, mask, effective, i) for i in range(effective.num_trees))
    return RandomForestModel(trees, effective, mask)


def predict_proba(model, fv) -> float:
    return model.predict_proba(fv)

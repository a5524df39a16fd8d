"""Uniform ``fit(data, seed) -> model`` wrappers used by evaluation and the CLI."""
from __future__ import annotations

from dataclasses import dataclass, field, replace

from .base import TrainConfig
from .forest import train_forest
from .naive_bayes import train_naive_bayes
from .tree import train_tree

LEARNERS = ("nb", "tree", "forest")


@dataclass(frozen=True)
class ForestLearner:
    config: TrainConfig = field(default_factory=TrainConfig)
    n_jobs: int = 1
    name = "forest"

    def fit(self, data, seed=None):
        config = self.config if seed is None else replace(self.config, seed=seed)
        return train_forest(data, config, n_jobs=self.n_jobs)


@dataclass(frozen=True)
class TreeLearner:
    """Single unpruned tree considering every active feature at each node."""

    config: TrainConfig = field(default_factory=lambda: TrainConfig(num_trees=1, features_per_split=5))
    name = "tree"

    def fit(self, data, seed=None):
        config = replace(
            self.config,
            num_trees=1,
            features_per_split=len(data.feature_mask),
            seed=self.config.seed if seed is None else seed,
        )
        return train_tree(data, config)


@dataclass(frozen=True)
class NaiveBayesLearner:
    name = "nb"

    def fit(self, data, seed=None):
        return train_naive_bayes(data)


def make_learner(name: str, config: TrainConfig = None, n_jobs: int = 1):
    config = config or TrainConfig()
    if name == "forest":
        return ForestLearner(config, n_jobs)
    if name == "tree":
        return TreeLearner(replace(config, num_trees=1))
    if name == "nb":
        return NaiveBayesLearner()
    raise ValueError(f"unknown learner {name!r}; choose from {', '.join(LEARNERS)}")

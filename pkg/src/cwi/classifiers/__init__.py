"""From-scratch learners: naive Bayes, information-gain tree, random forest."""
from .base import Prediction, TrainConfig, classify, derive_seed
from .forest import RandomForestModel, bootstrap_indices, predict_proba, sample_for_tree, train_forest
from .learners import LEARNERS, ForestLearner, NaiveBayesLearner, TreeLearner, make_learner
from .naive_bayes import NaiveBayesModel, predict_naive_bayes, train_naive_bayes
from .persistence import SCHEMA_VERSION, dumps, load_model, loads, save_model
from .splits import Split, best_split, entropy, find_best_split
from .tree import CategoricalNode, DecisionTree, Leaf, NumericNode, train_tree

__all__ = [
    "CategoricalNode",
    "DecisionTree",
    "ForestLearner",
    "LEARNERS",
    "Leaf",
    "NaiveBayesLearner",
    "NaiveBayesModel",
    "NumericNode",
    "Prediction",
    "RandomForestModel",
    "SCHEMA_VERSION",
    "Split",
    "TrainConfig",
    "TreeLearner",
    "best_split",
    "bootstrap_indices",
    "classify",
    "derive_seed",
    "dumps",
    "entropy",
    "find_best_split",
    "load_model",
    "loads",
    "make_learner",
    "predict_naive_bayes",
    "predict_proba",
    "sample_for_tree",
    "save_model",
    "train_forest",
    "train_naive_bayes",
    "train_tree",
]

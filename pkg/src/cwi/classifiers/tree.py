"""Unpruned information-gain decision trees.

Numeric splits are binary (``value <= threshold`` goes left); the POS tag
splits multiway, with unseen tags routed to the branch that saw the most
training vectors.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..errors import UnlabeledData
from .base import TrainConfig, vectors_to_columns
from .splits import find_best_split


@dataclass
class Leaf:
    counts: Tuple[int, int]

    @property
    def vote(self) -> int:
        # ties go to the complex class
        return 1 if self.counts[1] >= self.counts[0] else 0


@dataclass
class NumericNode:
    feature: str
    threshold: float
    left: "Node"
    right: "Node"
    counts: Tuple[int, int]


@dataclass
class CategoricalNode:
    feature: str
    branches: Dict[str, "Node"]
    default: str
    counts: Tuple[int, int]


Node = Union[Leaf, NumericNode, CategoricalNode]


@dataclass
class DecisionTree:
    root: Node
    feature_mask: Tuple[str, ...]
    config: TrainConfig = field(default_factory=TrainConfig)

    model_kind = "tree"

    def predict_proba_columns(self, columns, n: int) -> np.ndarray:
        """Class-1 fraction of the leaf each row lands in."""
        fractions = np.empty(n, dtype=np.float64)
        for leaf, idx in _route(self.root, columns, np.arange(n)):
            fractions[idx] = leaf.counts[1] / (leaf.counts[0] + leaf.counts[1])
        return fractions

    def predict_proba_many(self, vectors: Sequence) -> np.ndarray:
        return self.predict_proba_columns(vectors_to_columns(vectors, self.feature_mask), len(vectors))

    def predict_proba(self, fv) -> float:
        return float(self.predict_proba_many([fv])[0])

    def votes(self, columns, n: int) -> np.ndarray:
        out = np.empty(n, dtype=np.int64)
        for leaf, idx in _route(self.root, columns, np.arange(n)):
            out[idx] = leaf.vote
        return out


def _counts(y: np.ndarray) -> Tuple[int, int]:
    k1 = int(y.sum())
    return (len(y) - k1, k1)


def grow(
    columns: Dict[str, np.ndarray],
    y: np.ndarray,
    idx: np.ndarray,
    features: Sequence[str],
    config: TrainConfig,
    rng: np.random.Generator,
) -> Node:
    """Recursively induce a tree on the rows ``idx`` of the column arrays."""
    m = min(config.features_per_split, len(features))
    return _grow(columns, y, idx, tuple(features), m, config, rng, 0)


def _grow(columns, y, idx, features, m, config, rng, depth) -> Node:
    ys = y[idx]
    counts = _counts(ys)
    if counts[0] == 0 or counts[1] == 0:
        return Leaf(counts)
    if config.max_depth is not None and depth >= config.max_depth:
        return Leaf(counts)
    if len(idx) < 2 * config.min_leaf_size:
        return Leaf(counts)

    if m < len(features):
        chosen = np.sort(rng.choice(len(features), size=m, replace=False))
        candidates = tuple(features[i] for i in chosen)
    else:
        candidates = features
    sub = {name: columns[name][idx] for name in candidates}
    split = find_best_split(sub, ys, candidates, config.min_leaf_size)
    if split is None:
        return Leaf(counts)

    x = sub[split.feature]
    if not split.categorical:
        goes_left = x <= split.threshold
        left = _grow(columns, y, idx[goes_left], features, m, config, rng, depth + 1)
        right = _grow(columns, y, idx[~goes_left], features, m, config, rng, depth + 1)
        return NumericNode(split.feature, split.threshold, left, right, counts)

    branches = {}
    sizes = {}
    for cat in split.categories:
        member = x == cat
        sizes[cat] = int(member.sum())
        branches[cat] = _grow(columns, y, idx[member], features, m, config, rng, depth + 1)
    # categories are sorted, so max() breaks size ties alphabetically
    default = max(split.categories, key=lambda c: (sizes[c], -split.categories.index(c)))
    return CategoricalNode(split.feature, branches, default, counts)


def _route(root: Node, columns, idx: np.ndarray):
    """Yield ``(leaf, row_indices)`` for every leaf reached by rows ``idx``."""
    stack = [(root, idx)]
    while stack:
        node, rows = stack.pop()
        if len(rows) == 0:
            continue
        if isinstance(node, Leaf):
            yield node, rows
        elif isinstance(node, NumericNode):
            goes_left = columns[node.feature][rows] <= node.threshold
            stack.append((node.right, rows[~goes_left]))
            stack.append((node.left, rows[goes_left]))
        else:
            values = columns[node.feature][rows]
            matched = np.zeros(len(rows), dtype=bool)
            for cat, child in node.branches.items():
                member = values == cat
                matched |= member
                if cat == node.default:
                    continue
                stack.append((child, rows[member]))
            default_rows = (values == node.default) | ~matched
            stack.append((node.branches[node.default], rows[default_rows]))


def iter_nodes(root: Node):
    """Pre-order traversal; categorical branches in sorted category order."""
    stack = [root]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, NumericNode):
            stack.append(node.right)
            stack.append(node.left)
        elif isinstance(node, CategoricalNode):
            for cat in sorted(node.branches, reverse=True):
                stack.append(node.branches[cat])


def structure(root: Node) -> List[Tuple[str, Optional[str]]]:
    """Pre-order list of ``(kind, feature)`` pairs, ignoring thresholds."""
    out = []
    for node in iter_nodes(root):
        if isinstance(node, Leaf):
            out.append(("leaf", None))
        elif isinstance(node, NumericNode):
            out.append(("numeric", node.feature))
        else:
            out.append(("categorical", node.feature))
    return out


def apply(root: Node, columns, n: int) -> np.ndarray:
    """Pre-order leaf number reached by each of the ``n`` rows."""
    leaf_ids = {}
    for node in iter_nodes(root):
        if isinstance(node, Leaf):
            leaf_ids[id(node)] = len(leaf_ids)
    out = np.empty(n, dtype=np.int64)
    for leaf, rows in _route(root, columns, np.arange(n)):
        out[rows] = leaf_ids[id(leaf)]
    return out


def depth(root: Node) -> int:
    if isinstance(root, Leaf):
        return 0
    if isinstance(root, NumericNode):
        children = (root.left, root.right)
    else:
        children = tuple(root.branches.values())
    return 1 + max(depth(c) for c in children)


def train_tree(data, config: TrainConfig, rng: Optional[np.random.Generator] = None) -> DecisionTree:
    """Fit a single tree on every vector of a labeled FeatureDataset."""
    if not data.labeled or len(data) == 0:
        raise UnlabeledData("train_tree needs a non-empty labeled dataset")
    if rng is None:
        rng = np.random.default_rng(np.random.SeedSequence(config.seed))
    root = grow(data.columns, data.labels, np.arange(len(data)), data.feature_mask, config, rng)
    return DecisionTree(root, data.feature_mask, config)

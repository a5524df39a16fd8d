"""Versioned JSON model files.

Layout::

    {"schema_version": 1, "model_kind": "forest"|"tree"|"naive_bayes",
     "feature_mask": [...], "config": {...}, "trees": [...] | "nb_params": {...}}

Floats are written with ``repr`` so every value reads back bit-for-bit.
"""
from __future__ import annotations

import json
import sys
from contextlib import contextmanager

from ..errors import CorruptModel, SchemaVersionMismatch
from ..features import check_mask
from .base import TrainConfig
from .forest import RandomForestModel
from .naive_bayes import NaiveBayesModel
from .tree import CategoricalNode, DecisionTree, Leaf, NumericNode

SCHEMA_VERSION = 1


@contextmanager
def _deep_recursion(limit=20000):
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, limit))
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


def node_to_dict(node):
    if isinstance(node, Leaf):
        return {"kind": "leaf", "counts": list(node.counts)}
    if isinstance(node, NumericNode):
        return {
            "kind": "numeric",
            "feature": node.feature,
            "threshold": node.threshold,
            "counts": list(node.counts),
            "left": node_to_dict(node.left),
            "right": node_to_dict(node.right),
        }
    return {
        "kind": "categorical",
        "feature": node.feature,
        "default": node.default,
        "counts": list(node.counts),
        "branches": {cat: node_to_dict(node.branches[cat]) for cat in sorted(node.branches)},
    }


def node_from_dict(d):
    kind = d["kind"]
    counts = tuple(int(c) for c in d["counts"])
    if len(counts) != 2 or sum(counts) < 1:
        raise CorruptModel(f"bad node counts {d['counts']!r}")
    if kind == "leaf":
        return Leaf(counts)
    if kind == "numeric":
        return NumericNode(
            d["feature"], float(d["threshold"]), node_from_dict(d["left"]), node_from_dict(d["right"]), counts
        )
    if kind == "categorical":
        branches = {cat: node_from_dict(child) for cat, child in d["branches"].items()}
        if d["default"] not in branches:
            raise CorruptModel(f"default branch {d['default']!r} missing")
        return CategoricalNode(d["feature"], branches, d["default"], counts)
    raise CorruptModel(f"unknown node kind {kind!r}")


def model_to_dict(model) -> dict:
    out = {
        "schema_version": SCHEMA_VERSION,
        "model_kind": model.model_kind,
        "feature_mask": list(model.feature_mask),
    }
    if isinstance(model, RandomForestModel):
        out["config"] = model.config.to_dict()
        out["trees"] = [node_to_dict(t.root) for t in model.trees]
    elif isinstance(model, DecisionTree):
        out["config"] = model.config.to_dict()
        out["trees"] = [node_to_dict(model.root)]
    elif isinstance(model, NaiveBayesModel):
        out["config"] = {}
        out["nb_params"] = {
            "priors": list(model.priors),
            "gaussians": {name: [list(p) for p in params] for name, params in model.gaussians.items()},
            "categorical": {
                name: {"categories": list(cats), "probs": [list(p) for p in probs], "unseen": list(unseen)}
                for name, (cats, probs, unseen) in model.categorical.items()
            },
        }
    else:
        raise TypeError(f"cannot serialize {type(model).__name__}")
    return out


def model_from_dict(d: dict):
    version = d.get("schema_version")
    if version != SCHEMA_VERSION:
        raise SchemaVersionMismatch(f"model schema version {version!r}, expected {SCHEMA_VERSION}")
    try:
        kind = d["model_kind"]
        mask = check_mask(d["feature_mask"])
        if kind == "forest":
            config = TrainConfig.from_dict(d["config"])
            trees = tuple(DecisionTree(node_from_dict(t), mask, config) for t in d["trees"])
            if len(trees) != config.num_trees:
                raise CorruptModel(f"{len(trees)} trees stored, config says {config.num_trees}")
            return RandomForestModel(trees, config, mask)
        if kind == "tree":
            config = TrainConfig.from_dict(d["config"])
            (root,) = d["trees"]
            return DecisionTree(node_from_dict(root), mask, config)
        if kind == "naive_bayes":
            p = d["nb_params"]
            return NaiveBayesModel(
                mask,
                tuple(float(v) for v in p["priors"]),
                {name: tuple(tuple(float(v) for v in pair) for pair in params) for name, params in p["gaussians"].items()},
                {
                    name: (
                        tuple(c["categories"]),
                        tuple(tuple(float(v) for v in row) for row in c["probs"]),
                        tuple(float(v) for v in c["unseen"]),
                    )
                    for name, c in p["categorical"].items()
                },
            )
    except (KeyError, TypeError, ValueError) as err:
        if isinstance(err, CorruptModel):
            raise
        raise CorruptModel(f"malformed model file: {err!r}") from None
    raise CorruptModel(f"unknown model kind {kind!r}")


def dumps(model) -> str:
    with _deep_recursion():
        return json.dumps(model_to_dict(model), separators=(",", ":"), allow_nan=False) + "\n"


def loads(text: str):
    try:
        with _deep_recursion():
            d = json.loads(text)
    except json.JSONDecodeError as err:
        raise CorruptModel(f"model file is not valid JSON: {err}") from None
    if not isinstance(d, dict):
        raise CorruptModel("model file must hold a JSON object")
    with _deep_recursion():
        return model_from_dict(d)


def save_model(model, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps(model))


def load_model(path):
    with open(path, encoding="utf-8") as f:
        return loads(f.read())

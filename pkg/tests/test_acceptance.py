"""Acceptance suite: one test per criterion, each reporting PASS/FAIL/SKIPPED.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines inline; they are also repeated in the terminal summary.
"""
import os

import numpy as np
import pytest

from acceptance_log import criterion
from helpers import (
    label_copy_corpus,
    noisy_dataset,
    random_dataset,
    random_vector,
    separable_dataset,
    synthetic_corpus,
)
from oracles import entropy_bits, enumerate_splits
from cwi import cli
from cwi.classifiers import (
    NaiveBayesLearner,
    ForestLearner,
    TrainConfig,
    best_split,
    dumps,
    loads,
    sample_for_tree,
    train_forest,
    train_naive_bayes,
)
from cwi.classifiers.splits import entropy
from cwi.classifiers.tree import apply, structure
from cwi.corpus_io import load_dataset, parse_instance
from cwi.evaluation import ConfusionMatrix, class_metrics, cross_validate, harmonic_mean, information_gain, rank_features
from cwi.features import CATEGORICAL, FEATURES, build_feature_matrix
from cwi.resources import load_resources

FIRST_EXAMPLE = (
    "There are several stories about Mozart 's final illness and death , and it is "
    "not easy to be sure what happened .\thappened\t21\t0"
)
SECOND_EXAMPLE = (
    "Although anoxic events have not happened for millions of years , the geological "
    "record shows that they happened many times in the past .\thappened\t5\t1"
)


def test_criterion_1_metric_identities():
    with criterion(1, "metric identities", 1.0):
        rng = np.random.default_rng(1)
        for _ in range(1000):
            tp, fp, tn, fn = (int(v) for v in rng.integers(0, 500, size=4))
            if tp + fn == 0:
                fn = 1
            if fp + tn == 0:
                tn = 1
            m = class_metrics(ConfusionMatrix(tp, fp, tn, fn))
            assert abs(m.weighted_recall - m.accuracy) <= 1e-12
            for scores in m.per_class.values():
                p, r, f = scores.precision, scores.recall, scores.f_measure
                if p + r == 0:
                    assert f == 0.0
                else:
                    assert abs(f - 2 * p * r / (p + r)) <= 1e-12
                    assert min(p, r) - 1e-15 <= f <= max(p, r) + 1e-15
        # published naive Bayes complex-class row
        assert round(harmonic_mean(0.267, 0.017), 3) == 0.032


def test_criterion_2_entropy_and_information_gain():
    with criterion(2, "entropy/IG oracle suite", 1.0):
        assert entropy((3, 3)) == 1.0
        assert entropy((4, 0)) == 0.0
        assert abs(entropy((1, 3)) - 0.811278) <= 1e-6
        rng = np.random.default_rng(2)
        for _ in range(20):
            labels = rng.integers(0, 2, size=int(rng.integers(2, 200)))
            if labels.min() == labels.max():
                labels[0] = 1 - labels[0]
            h = entropy_bits(labels.tolist())
            assert information_gain(labels.astype(float), labels) == pytest.approx(h, abs=1e-12)
            assert information_gain([str(v) for v in labels], labels) == pytest.approx(h, abs=1e-12)
            assert information_gain(np.full(len(labels), 3.5), labels) == 0.0
            assert information_gain(["NN"] * len(labels), labels) == 0.0


def test_criterion_3_best_split_oracle_equivalence():
    with criterion(3, "best-split oracle equivalence", 10.0):
        rng = np.random.default_rng(3)
        for _ in range(200):
            data = random_dataset(rng, int(rng.integers(2, 13)))
            rows = [{f: v.value(f) for f in data.feature_mask} for v in data.vectors]
            labels = [v.label for v in data.vectors]
            candidates = enumerate_splits(rows, labels, data.feature_mask, CATEGORICAL)
            oracle = max((g for _, _, g in candidates), default=0.0)
            split = best_split(data)
            if split is None:
                assert oracle <= 1e-12
                continue
            assert abs(split.gain - oracle) <= 1e-12
            same = [g for f, t, g in candidates if f == split.feature and (t is None or t == split.threshold)]
            assert any(abs(g - oracle) <= 1e-12 for g in same)


def test_criterion_4_monotone_invariance():
    with criterion(4, "monotone invariance", 30.0):
        config = TrainConfig(num_trees=10)
        for seed in range(20):
            data = noisy_dataset(150, seed=seed)
            cubed = data.map_feature("log_frequency", lambda x: x**3 + x)
            cfg = TrainConfig.from_dict({**config.to_dict(), "seed": seed})
            fa, fb = train_forest(data, cfg), train_forest(cubed, cfg)
            thresholds_moved = False
            for i, (ta, tb) in enumerate(zip(fa.trees, fb.trees)):
                assert structure(ta.root) == structure(tb.root)
                _, idx = sample_for_tree(len(data), cfg, i)
                sa, sb = data.take(idx), cubed.take(idx)
                assert np.array_equal(apply(ta.root, sa.columns, len(sa)), apply(tb.root, sb.columns, len(sb)))
                thresholds_moved |= dumps(ta) != dumps(tb)
            assert thresholds_moved


def _train(paths, model, jobs):
    argv = [
        "train", "--learner", "forest", "--seed", "42", "--jobs", str(jobs),
        "--data", paths["data"], "--model", model,
        "--freq", paths["freq"], "--wordnet", paths["wordnet"],
        "--mrc", paths["mrc"], "--tagger-lexicon", paths["lexicon"],
    ]
    assert cli.main(argv) == 0


def test_criterion_5_deterministic_training(tmp_path, capsys):
    paths = synthetic_corpus(str(tmp_path / "corpus"), n=2000, seed=5, vocab_size=1500)
    with criterion(5, "byte-identical forest training, serial and parallel", 30.0):
        models = []
        for run, jobs in enumerate((1, 1, 2, 2)):
            out = str(tmp_path / f"model{run}.json")
            _train(paths, out, jobs)
            with open(out, "rb") as f:
                models.append(f.read())
        assert len(set(models)) == 1
        assert models[0].startswith(b'{"schema_version":1')


def test_criterion_6_separability():
    with criterion(6, "separable set: forest >= 0.95, naive Bayes >= 0.90", 30.0):
        data = separable_dataset(200, seed=6)
        forest = cross_validate(ForestLearner(TrainConfig()), data, k=10, seed=42)
        nb = cross_validate(NaiveBayesLearner(), data, k=10, seed=42)
        print(f"forest accuracy {forest.accuracy:.3f}, naive Bayes accuracy {nb.accuracy:.3f}")
        assert forest.accuracy >= 0.95
        assert nb.accuracy >= 0.90


def test_criterion_7_wrapper_exhaustive(tmp_path, capsys):
    paths = label_copy_corpus(str(tmp_path / "copy"), n=200, seed=7)
    with criterion(7, "wrapper: 31 subsets, label-copy singleton wins", 120.0):
        out = str(tmp_path / "wrapper.tsv")
        argv = [
            "select-features", "--method", "wrapper", "--learner", "forest", "--trees", "20",
            "--data", paths["data"], "--out", out,
            "--freq", paths["freq"], "--wordnet", paths["wordnet"],
            "--mrc", paths["mrc"], "--tagger-lexicon", paths["lexicon"],
        ]
        assert cli.main(argv) == 0
        with open(out) as f:
            lines = f.read().splitlines()
        evaluations = [line for line in lines if not line.startswith("best\t")]
        assert len(evaluations) == 31
        assert len({line.split("\t")[0] for line in evaluations}) == 31
        best = lines[-1].split("\t")
        assert best[0] == "best"
        assert best[2] == "synonym_count"
        assert best[1] == "00100"


REFERENCE_FILES = ("CWI_TRAIN_DATA", "CWI_FREQ", "CWI_WORDNET", "CWI_MRC", "CWI_TAGGER_LEXICON")


def test_criterion_8_reference_data_reproduction():
    with criterion(8, "reference-data reproduction", float("inf")):
        missing = [name for name in REFERENCE_FILES if not os.environ.get(name)]
        if missing:
            pytest.skip("SKIPPED: set " + ", ".join(missing) + " to the training file and resources")
        env = {name: os.environ[name] for name in REFERENCE_FILES}
        bundle = load_resources(env["CWI_FREQ"], env["CWI_WORDNET"], env["CWI_MRC"], env["CWI_TAGGER_LEXICON"])
        data = build_feature_matrix(load_dataset(env["CWI_TRAIN_DATA"]), bundle)
        ranking = [name for name, _ in rank_features(data)]
        print("information gain ranking:", ranking)
        assert ranking[0] == "synonym_count"
        assert "inverse_length" in ranking[-2:]
        forest = cross_validate(ForestLearner(TrainConfig()), data, k=10, seed=42)
        nb = cross_validate(NaiveBayesLearner(), data, k=10, seed=42)
        print(f"forest weighted F {forest.weighted_f:.3f}, naive Bayes weighted F {nb.weighted_f:.3f}")
        assert abs(forest.weighted_f - 0.667) <= 0.06
        assert abs(nb.weighted_f - 0.557) <= 0.06
        # the test-set G-score needs hidden gold labels and is not checked


def test_criterion_9_format_fidelity():
    with criterion(9, "example instances and model round trip", 1.0):
        first = parse_instance(FIRST_EXAMPLE, labeled=True)
        second = parse_instance(SECOND_EXAMPLE, labeled=True)
        assert (first.offset, first.label, first.tokens[21]) == (21, 0, "happened")
        assert (second.offset, second.label, second.tokens[5]) == (5, 1, "happened")
        assert first.to_line() == FIRST_EXAMPLE and second.to_line() == SECOND_EXAMPLE

        rng = np.random.default_rng(9)
        train = noisy_dataset(200, seed=9)
        probe = [random_vector(rng) for _ in range(50)]
        for model in (train_forest(train, TrainConfig(num_trees=10)), train_naive_bayes(train)):
            restored = loads(dumps(model))
            assert np.array_equal(model.predict_proba_many(probe), restored.predict_proba_many(probe))
            assert dumps(restored) == dumps(model)
        assert FEATURES == ("log_frequency", "pos_tag", "synonym_count", "inverse_length", "concreteness")

"""Command-line entry point: ``cwi <subcommand> [flags]``.

Exit codes: 0 success, 1 data or runtime error, 2 usage error.
"""
from __future__ import annotations

import argparse
import logging
import os
import sys
from contextlib import contextmanager
from itertools import islice

from . import __version__
from .classifiers import LEARNERS, TrainConfig, load_model, make_learner, save_model
from .corpus_io import format_prediction, iter_instances, load_dataset
from .errors import BadFeatureMask, CWIError
from .evaluation import cross_validate, format_report, rank_features, wrapper_subset_selection
from .features import build_feature_matrix, extract, parse_mask, write_feature_matrix
from .resources import load_resources

log = logging.getLogger("cwi")

RESOURCE_FLAGS = {
    "freq": "CWI_FREQ",
    "wordnet": "CWI_WORDNET",
    "mrc": "CWI_MRC",
    "tagger_lexicon": "CWI_TAGGER_LEXICON",
}
PREDICT_CHUNK = 1024


def _probability(text):
    value = float(text)
    if not 0.0 < value < 1.0:
        raise argparse.ArgumentTypeError(f"threshold must lie strictly between 0 and 1, got {value}")
    return value


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _seed(text):
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"seed must fit in 64 unsigned bits, got {value}")
    return value


def _mask(text):
    try:
        return parse_mask(text)
    except BadFeatureMask as err:
        raise argparse.ArgumentTypeError(str(err)) from None


def build_parser() -> argparse.ArgumentParser:
    resources = argparse.ArgumentParser(add_help=False)
    group = resources.add_argument_group("resources (env override in parentheses)")
    group.add_argument("--freq", help="word<TAB>count frequency table (CWI_FREQ)")
    group.add_argument("--wordnet", help="WordNet dict/ directory (CWI_WORDNET)")
    group.add_argument("--mrc", help="MRC2 dictionary file (CWI_MRC)")
    group.add_argument("--tagger-lexicon", help="word<TAB>penn_tag lexicon (CWI_TAGGER_LEXICON)")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--data", required=True, help="instance file (tab-separated)")
    common.add_argument("--out", help="output file (default stdout)")
    common.add_argument("--seed", type=_seed, default=42)
    common.add_argument("-v", "--verbose", action="store_true")

    learning = argparse.ArgumentParser(add_help=False)
    learning.add_argument("--learner", choices=LEARNERS, default="forest")
    learning.add_argument("--trees", type=_positive, default=100)
    learning.add_argument("--mtry", type=_positive, default=3, help="features tried per split")
    learning.add_argument("--min-leaf", type=_positive, default=2)
    learning.add_argument("--max-depth", type=_positive, default=None)
    learning.add_argument("--features", type=_mask, default=parse_mask("all"), help="comma list or 'all'")
    learning.add_argument("--jobs", type=_positive, default=1, help="processes for forest training")

    parser = argparse.ArgumentParser(prog="cwi", description="Complex word identification toolkit.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("extract", parents=[resources, common], help="write the feature matrix as CSV")

    p = sub.add_parser("train", parents=[resources, common, learning], help="train and save a model")
    p.add_argument("--model", required=True, help="model file to write")

    p = sub.add_parser("predict", parents=[resources, common], help="label an unlabeled instance file")
    p.add_argument("--model", required=True)
    p.add_argument("--threshold", type=_probability, default=0.5)

    p = sub.add_parser("cross-validate", parents=[resources, common, learning], help="k-fold evaluation report")
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--threshold", type=_probability, default=0.5)

    p = sub.add_parser("select-features", parents=[resources, common, learning], help="feature ranking or subset search")
    p.add_argument("--method", choices=("ig", "wrapper"), required=True)
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--threshold", type=_probability, default=0.5)
    return parser


def resolve_resources(parser, args):
    missing = []
    for attr, env in RESOURCE_FLAGS.items():
        if getattr(args, attr) is None:
            setattr(args, attr, os.environ.get(env))
        if getattr(args, attr) is None:
            missing.append("--" + attr.replace("_", "-"))
    if missing:
        parser.error(f"{args.command} requires {', '.join(missing)}")


@contextmanager
def _output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as f:
            yield f


def _is_labeled(path) -> bool:
    with open(path, encoding="utf-8") as f:
        for line in f:
            if line.strip():
                return len(line.rstrip("\r\n").split("\t")) == 4
    return True


def _load_features(args):
    bundle = load_resources(args.freq, args.wordnet, args.mrc, args.tagger_lexicon)
    dataset = load_dataset(args.data, labeled=_is_labeled(args.data))
    return bundle, build_feature_matrix(dataset, bundle)


def _train_config(args) -> TrainConfig:
    return TrainConfig(
        num_trees=args.trees,
        features_per_split=args.mtry,
        max_depth=args.max_depth,
        min_leaf_size=args.min_leaf,
        seed=args.seed,
    )


def _learner(args):
    return make_learner(args.learner, _train_config(args), n_jobs=args.jobs)


def cmd_extract(args):
    _, data = _load_features(args)
    with _output(args.out) as fh:
        rows = write_feature_matrix(data, fh)
    print(f"{rows} rows", file=sys.stderr if args.out is None else sys.stdout)
    return 0


def cmd_train(args):
    _, data = _load_features(args)
    data = data.with_mask(args.features)
    model = _learner(args).fit(data, seed=args.seed)
    save_model(model, args.model)
    summary = [f"learner={args.learner}", f"instances={len(data)}", f"seed={args.seed}"]
    if args.learner == "forest":
        summary.insert(1, f"trees={len(model.trees)}")
    summary.append("features=" + ",".join(model.feature_mask))
    print(" ".join(summary))
    return 0


def cmd_predict(args):
    model = load_model(args.model)
    bundle = load_resources(args.freq, args.wordnet, args.mrc, args.tagger_lexicon)
    stream = iter_instances(args.data, labeled=False)
    rows = 0
    with _output(args.out) as fh:
        while True:
            chunk = list(islice(stream, PREDICT_CHUNK))
            if not chunk:
                break
            vectors = [extract(inst, bundle) for _, _, inst in chunk]
            for (_, raw, _), p in zip(chunk, model.predict_proba_many(vectors)):
                label = 1 if p >= args.threshold else 0
                fh.write(format_prediction(raw, label, float(p)) + "\n")
            rows += len(chunk)
    log.info("predicted %d rows", rows)
    return 0


def cmd_cross_validate(args, learner=None):
    _, data = _load_features(args)
    data = data.with_mask(args.features)
    learner = learner or _learner(args)
    metrics = cross_validate(learner, data, k=args.k, seed=args.seed, threshold=args.threshold)
    title = (
        f"{learner.name} {args.k}-fold cross-validation, seed {args.seed}, "
        f"threshold {args.threshold}, features {','.join(data.feature_mask)}"
    )
    with _output(args.out) as fh:
        fh.write(format_report(metrics, title))
    return 0


def cmd_select_features(args, learner=None):
    _, data = _load_features(args)
    with _output(args.out) as fh:
        if args.method == "ig":
            fh.write("feature\tinformation_gain\n")
            for name, ig in rank_features(data.with_mask(args.features)):
                fh.write(f"{name}\t{ig:.3f}\n")
        else:
            learner = learner or _learner(args)
            result = wrapper_subset_selection(learner, data, k=args.k, seed=args.seed, threshold=args.threshold)
            for entry in result.log:
                fh.write(f"{entry.bitmask}\t{entry.accuracy:.6f}\n")
            best = result.best
            fh.write(f"best\t{best.bitmask}\t{','.join(best.subset)}\t{best.accuracy:.6f}\n")
    return 0


COMMANDS = {
    "extract": cmd_extract,
    "train": cmd_train,
    "predict": cmd_predict,
    "cross-validate": cmd_cross_validate,
    "select-features": cmd_select_features,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    resolve_resources(parser, args)
    if getattr(args, "k", 2) < 2:
        parser.error("--k must be at least 2")
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return COMMANDS[args.command](args)
    except (CWIError, OSError) as err:
        print(f"cwi {args.command}: error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

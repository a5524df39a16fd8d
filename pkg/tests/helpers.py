"""Fixture builders shared by the test modules."""
import os

import numpy as np

from cwi.features import FeatureDataset, FeatureVector

TAGS = ("NN", "VB", "JJ", "RB", "NNS", "VBD")
POS_FILE = {"n": "noun", "v": "verb", "a": "adj", "r": "adv"}


def write_wordnet(directory, synsets):
    """Write a minimal WordNet dict directory.

    ``synsets`` maps an integer offset to ``(pos, [words])`` with pos in n/v/a/r.
    """
    os.makedirs(directory, exist_ok=True)
    data = {p: [] for p in POS_FILE}
    index = {p: {} for p in POS_FILE}
    for offset, (pos, words) in sorted(synsets.items()):
        body = " ".join(f"{w} 0" for w in words)
        data[pos].append(f"{offset:08d} 03 {pos} {len(words):02x} {body} 000 | a gloss")
        for w in words:
            index[pos].setdefault(w.lower(), []).append(f"{offset:08d}")
    header = "  1 This software and database is being provided to you, the LICENSEE"
    for pos, name in POS_FILE.items():
        with open(os.path.join(directory, f"data.{name}"), "w") as f:
            f.write(header + "\n")
            for line in data[pos]:
                f.write(line + " \n")
        with open(os.path.join(directory, f"index.{name}"), "w") as f:
            f.write(header + "\n")
            for lemma in sorted(index[pos]):
                offs = index[pos][lemma]
                f.write(f"{lemma} {pos} {len(offs)} 1 @ {len(offs)} 0 {' '.join(offs)}  \n")
    return directory


def mrc_record(word, cnc, fam=0, img=0):
    """One fixed-width MRC2 record with the given concreteness in columns 29-31."""
    prefix = (
        "05"  # NLET 1-2
        "04"  # NPHON 3-4
        "1"  # NSYL 5
        "00042"  # K-F-FREQ 6-10
        "05"  # K-F-NCATS 11-12
        "010"  # K-F-NSAMP 13-15
        "000120"  # T-L-FREQ 16-21
        "0033"  # BROWN-FREQ 22-25
        f"{fam:03d}"  # FAM 26-28
        f"{cnc:03d}"  # CNC 29-31
        f"{img:03d}"  # IMG 32-34
        "000"  # MEANC 35-37
        "000"  # MEANP 38-40
        "000"  # AOA 41-43
        " "  # TQ2 44
        "N"  # WTYPE 45
        "N"  # PDWTYPE 46
        " "  # ALPHSYL 47
        " "  # STATUS 48
        " "  # VAR 49
        "L"  # CAP 50
        " "  # IRREG 51
    )
    assert len(prefix) == 51
    return f"{prefix}{word.upper()}|tSE@|tSE@|1"


def write_lines(path, lines):
    with open(path, "w", encoding="utf-8") as f:
        for line in lines:
            f.write(line + "\n")
    return path


def random_vector(rng, label=None):
    return FeatureVector(
        log_frequency=float(rng.integers(0, 6)),
        pos_tag=str(rng.choice(TAGS[:3])),
        synonym_count=int(rng.integers(0, 4)),
        inverse_length=1.0 / int(rng.integers(1, 5)),
        concreteness=int(rng.choice([0, 300, 450, 600])),
        label=label,
    )


def random_dataset(rng, n, mask=None):
    vectors = [random_vector(rng, int(rng.integers(0, 2))) for _ in range(n)]
    return FeatureDataset(tuple(vectors), mask) if mask else FeatureDataset(tuple(vectors))


def noisy_dataset(n, seed=0, noise=1.0):
    """CWI-like vectors: complex words are rarer, longer, have fewer synonyms."""
    rng = np.random.default_rng(seed)
    vectors = []
    for _ in range(n):
        lf = float(rng.uniform(0, 9))
        syn = int(rng.integers(0, 30))
        length = int(rng.integers(2, 15))
        cnc = int(rng.integers(100, 701)) if rng.random() < 0.5 else 0
        score = -lf / 3 - syn / 10 + length / 5 + rng.normal(0, noise)
        vectors.append(FeatureVector(lf, str(rng.choice(TAGS)), syn, 1.0 / length, cnc, int(score > 0)))
    return FeatureDataset(tuple(vectors))


def separable_dataset(n=200, seed=0):
    """Label is 1 exactly when log_frequency + synonym_count/10 < 4.

    Other features are independent noise. Points within 0.2 of the boundary
    are resampled so the classes are linearly separable with a margin.
    """
    rng = np.random.default_rng(seed)
    vectors = []
    while len(vectors) < n:
        lf = float(rng.uniform(0, 8))
        syn = int(rng.integers(0, 20))
        margin = lf + syn / 10 - 4
        if abs(margin) < 0.2:
            continue
        vectors.append(
            FeatureVector(
                lf,
                str(rng.choice(TAGS)),
                syn,
                1.0 / int(rng.integers(1, 15)),
                int(rng.choice([0, int(rng.integers(100, 701))])),
                int(margin < 0),
            )
        )
    return FeatureDataset(tuple(vectors))


def label_copy_dataset(n=120, seed=0):
    """synonym_count equals the label; every other feature is uniform noise."""
    rng = np.random.default_rng(seed)
    vectors = []
    for i in range(n):
        label = i % 2
        vectors.append(
            FeatureVector(
                float(rng.uniform(0, 8)),
                str(rng.choice(TAGS)),
                label,
                1.0 / int(rng.integers(1, 15)),
                int(rng.integers(100, 701)),
                label,
            )
        )
    order = rng.permutation(n)
    return FeatureDataset(tuple(vectors[i] for i in order))


def synthetic_corpus(directory, n=200, seed=0, labeled=True, vocab_size=300):
    """Write resource files plus an instance file whose labels follow the features.

    Returns a dict of paths: freq, wordnet, mrc, lexicon, data.
    """
    rng = np.random.default_rng(seed)
    os.makedirs(directory, exist_ok=True)
    letters = np.array(list("abcdefghijklmnopqrstuvwxyz"))
    words = set()
    while len(words) < vocab_size:
        words.add("".join(rng.choice(letters, size=int(rng.integers(2, 13)))))
    words = sorted(words)
    freq = {w: int(10 ** rng.uniform(0, 8)) for w in words}
    tags = {w: str(rng.choice(TAGS)) for w in words}
    cnc = {w: int(rng.integers(100, 701)) for w in words if rng.random() < 0.4}
    synsets = {}
    offset = 100
    for w in words:
        if rng.random() < 0.7:
            mates = [str(m) for m in rng.choice(words, size=int(rng.integers(1, 6)), replace=False)]
            synsets[offset] = ("n", sorted({w, *mates}))
            offset += 1
    # complexity: rare, long, few synonyms
    syn_members = {}
    for _, (_, ws) in synsets.items():
        for x in ws:
            syn_members.setdefault(x, set()).update(ws)
    score = {
        w: -np.log10(1 + freq[w]) / 2 + len(w) / 4 - len(syn_members.get(w, {w})) / 3 + 0.5
        for w in words
    }
    paths = {
        "freq": write_lines(os.path.join(directory, "freq.tsv"), [f"{w}\t{c}" for w, c in freq.items()]),
        "wordnet": write_wordnet(os.path.join(directory, "wordnet"), synsets),
        "mrc": write_lines(os.path.join(directory, "mrc2.dct"), [mrc_record(w, c) for w, c in cnc.items()]),
        "lexicon": write_lines(os.path.join(directory, "lexicon.tsv"), [f"{w}\t{t}" for w, t in tags.items()]),
    }
    lines = []
    for _ in range(n):
        sentence = [str(w) for w in rng.choice(words, size=int(rng.integers(4, 12)))]
        offset = int(rng.integers(0, len(sentence)))
        target = sentence[offset]
        label = int(score[target] + rng.normal(0, 0.7) > 0)
        fields = [" ".join(sentence), target, str(offset)]
        if labeled:
            fields.append(str(label))
        lines.append("\t".join(fields))
    paths["data"] = write_lines(os.path.join(directory, "data.tsv"), lines)
    return paths


def label_copy_corpus(directory, n=200, seed=0):
    """Corpus where the target's synonym count (0 or 1) is exactly its label.

    Every instance has a distinct target word, so no other feature can
    identify words and memorize their labels across folds.
    """
    rng = np.random.default_rng(seed)
    os.makedirs(directory, exist_ok=True)
    letters = np.array(list("abcdefghijklmnopqrstuvwxyz"))
    words = set()
    while len(words) < 2 * n + 50:
        words.add("".join(rng.choice(letters, size=int(rng.integers(3, 13)))))
    words = sorted(words)
    rng.shuffle(words)
    targets, fillers = words[:n], words[n:]
    labels = [i % 2 for i in range(n)]
    synsets = {}
    for i, (w, y) in enumerate(zip(targets, labels)):
        if y == 1:
            synsets[1000 + i] = ("n", [w, fillers[i]])
    freq = {w: int(10 ** rng.uniform(0, 8)) for w in words}
    tags = {w: str(rng.choice(TAGS)) for w in words}
    cnc = {w: int(rng.integers(100, 701)) for w in words}
    paths = {
        "freq": write_lines(os.path.join(directory, "freq.tsv"), [f"{w}\t{c}" for w, c in freq.items()]),
        "wordnet": write_wordnet(os.path.join(directory, "wordnet"), synsets),
        "mrc": write_lines(os.path.join(directory, "mrc2.dct"), [mrc_record(w, c) for w, c in cnc.items()]),
        "lexicon": write_lines(os.path.join(directory, "lexicon.tsv"), [f"{w}\t{t}" for w, t in tags.items()]),
    }
    lines = []
    for w, y in zip(targets, labels):
        sentence = [str(x) for x in rng.choice(fillers, size=int(rng.integers(3, 9)))]
        offset = int(rng.integers(0, len(sentence) + 1))
        sentence.insert(offset, w)
        lines.append("\t".join([" ".join(sentence), w, str(offset), str(y)]))
    paths["data"] = write_lines(os.path.join(directory, "data.tsv"), lines)
    return paths

"""Confusion counts, per-class and weighted P/R/F, accuracy and G-score.

Class 1 (complex) is the positive class throughout.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Sequence

from ..errors import EmptyMatrix, LengthMismatch


@dataclass(frozen=True)
class ConfusionMatrix:
    tp: int
    fp: int
    tn: int
    fn: int

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.tn + self.fn

    def __add__(self, other: "ConfusionMatrix") -> "ConfusionMatrix":
        return ConfusionMatrix(
            self.tp + other.tp, self.fp + other.fp, self.tn + other.tn, self.fn + other.fn
        )


@dataclass(frozen=True)
class ClassScores:
    precision: float
    recall: float
    f_measure: float


@dataclass(frozen=True)
class ClassMetrics:
    matrix: ConfusionMatrix
    per_class: Dict[int, ClassScores]
    weighted: ClassScores
    accuracy: float
    g_score: float

    @property
    def weighted_precision(self):
        return self.weighted.precision

    @property
    def weighted_recall(self):
        return self.weighted.recall

    @property
    def weighted_f(self):
        return self.weighted.f_measure


def confusion(predictions: Sequence[int], gold: Sequence[int]) -> ConfusionMatrix:
    if len(predictions) != len(gold):
        raise LengthMismatch(f"{len(predictions)} predictions for {len(gold)} gold labels")
    tp = fp = tn = fn = 0
    for p, g in zip(predictions, gold):
        p, g = int(p), int(g)
        if p not in (0, 1) or g not in (0, 1):
            raise ValueError(f"labels must be 0 or 1, got prediction {p}, gold {g}")
        if p == 1:
            if g == 1:
                tp += 1
            else:
                fp += 1
        elif g == 1:
            fn += 1
        else:
            tn += 1
    return ConfusionMatrix(tp, fp, tn, fn)


def _ratio(num: int, den: int) -> float:
    return num / den if den else 0.0


def harmonic_mean(a: float, b: float) -> float:
    return 2 * a * b / (a + b) if a + b > 0 else 0.0


def _scores(tp: int, fp: int, fn: int) -> ClassScores:
    p = _ratio(tp, tp + fp)
    r = _ratio(tp, tp + fn)
    return ClassScores(p, r, harmonic_mean(p, r))


def accuracy(m: ConfusionMatrix) -> float:
    if m.total == 0:
        raise EmptyMatrix("no evaluated instances")
    return (m.tp + m.tn) / m.total


def g_score(m: ConfusionMatrix) -> float:
    """Harmonic mean of accuracy and complex-class recall."""
    return harmonic_mean(accuracy(m), _ratio(m.tp, m.tp + m.fn))


def class_metrics(m: ConfusionMatrix) -> ClassMetrics:
    if m.total == 0:
        raise EmptyMatrix("no evaluated instances")
    complex_ = _scores(m.tp, m.fp, m.fn)
    # class 0 as positive: its true positives are the true negatives
    simple = _scores(m.tn, m.fn, m.fp)
    w1 = (m.tp + m.fn) / m.total
    w0 = (m.tn + m.fp) / m.total
    weighted = ClassScores(
        w0 * simple.precision + w1 * complex_.precision,
        w0 * simple.recall + w1 * complex_.recall,
        w0 * simple.f_measure + w1 * complex_.f_measure,
    )
    return ClassMetrics(m, {0: simple, 1: complex_}, weighted, accuracy(m), g_score(m))


def format_report(metrics: ClassMetrics, title: str = "") -> str:
    """Plain-text report laid out like a per-class results table, 3 decimals."""
    m = metrics.matrix
    lines = []
    if title:
        lines.append(title)
    lines += [
        "Confusion matrix (rows gold, columns predicted)",
        f"{'':>10}{'pred 0':>10}{'pred 1':>10}",
        f"{'gold 0':>10}{m.tn:>10d}{m.fp:>10d}",
        f"{'gold 1':>10}{m.fn:>10d}{m.tp:>10d}",
        "",
        f"{'Class':<20}{'Precision':>10}{'Recall':>10}{'F-Measure':>10}",
    ]
    rows = (
        ("0 (Simple)", metrics.per_class[0]),
        ("1 (Complex)", metrics.per_class[1]),
        ("Weighted Average", metrics.weighted),
    )
    for name, s in rows:
        lines.append(f"{name:<20}{s.precision:>10.3f}{s.recall:>10.3f}{s.f_measure:>10.3f}")
    lines += [
        "",
        f"Accuracy: {metrics.accuracy:.3f}",
        f"G-score: {metrics.g_score:.3f}",
    ]
    return "\n".join(lines) + "\n"

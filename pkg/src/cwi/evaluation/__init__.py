"""Metrics, cross-validation and feature selection."""
from .crossval import FoldAssignment, cross_validate, cross_validate_matrix, stratified_folds, stratified_k_fold
from .metrics import (
    ClassMetrics,
    ClassScores,
    ConfusionMatrix,
    accuracy,
    class_metrics,
    confusion,
    format_report,
    g_score,
    harmonic_mean,
)
from .selection import (
    SubsetScore,
    WrapperResult,
    all_subsets,
    discretize,
    equal_frequency_edges,
    information_gain,
    rank_features,
    subset_bitmask,
    wrapper_subset_selection,
)

__all__ = [
    "ClassMetrics",
    "ClassScores",
    "ConfusionMatrix",
    "FoldAssignment",
    "SubsetScore",
    "WrapperResult",
    "accuracy",
    "all_subsets",
    "class_metrics",
    "confusion",
    "cross_validate",
    "cross_validate_matrix",
    "discretize",
    "equal_frequency_edges",
    "format_report",
    "g_score",
    "harmonic_mean",
    "information_gain",
    "rank_features",
    "stratified_folds",
    "stratified_k_fold",
    "subset_bitmask",
    "wrapper_subset_selection",
]

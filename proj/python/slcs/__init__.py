"""Semi-local string comparison."""

from ._slcs import (
    Error,
    SemiLocal,
    Slp,
    alignment_score,
    complete_matching,
    cyclic_lcs,
    lcs,
    lis,
    longest_repeating_subsequence,
    max_clique,
    spliced_alignment,
    tandem,
    threshold_matching,
    window_window,
)

__all__ = [
    "Error",
    "SemiLocal",
    "Slp",
    "alignment_score",
    "complete_matching",
    "cyclic_lcs",
    "lcs",
    "lis",
    "longest_repeating_subsequence",
    "max_clique",
    "spliced_alignment",
    "tandem",
    "threshold_matching",
    "window_window",
]

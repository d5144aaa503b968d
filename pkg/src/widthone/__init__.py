"""Exact sums of width-one matrices and the mean EMD for Monge costs."""

from widthone.formulas import (
    SumMatrix,
    convolution_check,
    entry_rsk,
    entry_rsk_4f3,
    entry_stanley,
    sum_matrix,
)
from widthone.transport import CostMatrix, emd, mean_emd, mean_emd_oracle, nw_corner
from widthone.width_one import Biword, WidthOneMatrix, is_width_one, sum_all_oracle

__all__ = [
    "Biword",
    "CostMatrix",
    "SumMatrix",
    "WidthOneMatrix",
    "convolution_check",
    "emd",
    "entry_rsk",
    "entry_rsk_4f3",
    "entry_stanley",
    "is_width_one",
    "mean_emd",
    "mean_emd_oracle",
    "nw_corner",
    "sum_all_oracle",
    "sum_matrix",
]

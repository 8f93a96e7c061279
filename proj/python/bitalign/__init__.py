"""Bit-parallel windowed edit-distance alignment."""

from ._core import (
    AlignmentResult,
    Error,
    InvalidArgument,
    WindowFailed,
    align,
    align_batch,
    dc_distance,
    format_cigar,
    global_distance,
    make_reference,
    parse_cigar,
    semiglobal_distance,
    simulate_read,
)

__all__ = [
    "AlignmentResult",
    "Error",
    "InvalidArgument",
    "WindowFailed",
    "align",
    "align_batch",
    "dc_distance",
    "format_cigar",
    "global_distance",
    "make_reference",
    "parse_cigar",
    "semiglobal_distance",
    "simulate_read",
]

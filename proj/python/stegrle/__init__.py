"""Lossless text hiding and run-length compression for grayscale images."""

from ._stegrle import (
    EmbedReport,
    GrayImage,
    Rect,
    RunLengthStream,
    StegrleError,
    bytes_to_text,
    check_rect,
    deserialize,
    embed,
    extract,
    mse,
    psnr,
    read_pgm,
    rle_decode,
    rle_encode,
    run_pipeline,
    scan_candidates,
    serialize,
    synthetic_carrier,
    text_to_bytes,
    to_grayscale,
    validate_carrier,
    write_pgm,
)

__all__ = [
    "EmbedReport",
    "GrayImage",
    "Rect",
    "RunLengthStream",
    "StegrleError",
    "bytes_to_text",
    "check_rect",
    "deserialize",
    "embed",
    "extract",
    "mse",
    "psnr",
    "read_pgm",
    "rle_decode",
    "rle_encode",
    "run_pipeline",
    "scan_candidates",
    "serialize",
    "synthetic_carrier",
    "text_to_bytes",
    "to_grayscale",
    "validate_carrier",
    "write_pgm",
]

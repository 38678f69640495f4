"""Magic-square LSB steganography on the intensity plane of color images.

The codec hides a byte payload in a square, even-sided RGB cover: the
payload is scrambled into four keyed blocks, the cover's integer
intensity plane is split into four key-rotated quadrants, and each block
is written into the LSBs of one quadrant along the traversal defined by
a deterministic magic square. Extraction is bit-exact with the same key.
"""

from .baseline import classic_lsb_embed, classic_lsb_extract
from .bits import as_bits, bits_to_bytes, bytes_to_bits
from .codec import capacity, embed, extract, plane_embed_bits, plane_extract_bits
from .colorspace import HsiTriple, hsi_to_rgb, hsi_to_rgb_unit, rgb_to_hsi, rgb_to_hsi_unit
from .errors import (
    BlockLengthMismatch,
    CapacityExceeded,
    CorruptHeader,
    DimensionMismatch,
    EmptyKey,
    IntensityDeltaTooLarge,
    NonSquare,
    OddDimensions,
    OutOfGamut,
    PayloadTooLarge,
    StegoError,
    TileMismatch,
    TooSmall,
    UnalignedLength,
    UnsupportedOrder,
    ZeroDenominator,
)
from .geometry import (
    QuadrantSet,
    RotationSchedule,
    merge_quadrants,
    rotate_quarter,
    rotation_schedule,
    split_quadrants,
    transpose,
)
from .image import apply_i_plane, compute_i_plane, ensure_plane, ensure_rgb_image
from .magic import magic_constant, magic_square, traversal_order
from .metrics import QualityReport, mae, mse, ncc, psnr, quality_report, ssim
from .mlea import MessageBlocks, derive_keystream, mlea_decrypt, mlea_encrypt, split_blocks

__version__ = "0.1.0"

__all__ = [
    "classic_lsb_embed",
    "classic_lsb_extract",
    "as_bits",
    "bits_to_bytes",
    "bytes_to_bits",
    "capacity",
    "embed",
    "extract",
    "plane_embed_bits",
    "plane_extract_bits",
    "HsiTriple",
    "hsi_to_rgb",
    "hsi_to_rgb_unit",
    "rgb_to_hsi",
    "rgb_to_hsi_unit",
    "BlockLengthMismatch",
    "CapacityExceeded",
    "CorruptHeader",
    "DimensionMismatch",
    "EmptyKey",
    "IntensityDeltaTooLarge",
    "NonSquare",
    "OddDimensions",
    "OutOfGamut",
    "PayloadTooLarge",
    "StegoError",
    "TileMismatch",
    "TooSmall",
    "UnalignedLength",
    "UnsupportedOrder",
    "ZeroDenominator",
    "QuadrantSet",
    "RotationSchedule",
    "merge_quadrants",
    "rotate_quarter",
    "rotation_schedule",
    "split_quadrants",
    "transpose",
    "apply_i_plane",
    "compute_i_plane",
    "ensure_plane",
    "ensure_rgb_image",
    "magic_constant",
    "magic_square",
    "traversal_order",
    "QualityReport",
    "mae",
    "mse",
    "ncc",
    "psnr",
    "quality_report",
    "ssim",
    "MessageBlocks",
    "derive_keystream",
    "mlea_decrypt",
    "mlea_encrypt",
    "split_blocks",
]

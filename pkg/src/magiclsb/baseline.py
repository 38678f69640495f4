"""Classic k-bit LSB substitution over raster-order samples.

The reference point the codec is compared against: successive k-bit
groups of the message replace the k low bits of successive samples,
raster order, channels R then G then B within each pixel. No geometry,
no scrambling, no header; callers that need a self-describing stream
must frame it themselves (the CLI prepends a 32-bit length).
"""

import numpy as np

from .bits import as_bits
from .errors import CapacityExceeded, UnalignedLength
from .image import ensure_rgb_image


def _check_k(k: int) -> int:
    k = int(k)
    if not 1 <= k <= 5:
        raise ValueError("bits per sample must lie in [1, 5], got %d" % k)
    return k


def classic_lsb_embed(image, bits, k: int = 1) -> np.ndarray:
    """Replace the k low bits of successive samples with message bits."""
    arr = ensure_rgb_image(image)
    k = _check_k(k)
    bits = as_bits(bits)
    if bits.size % k != 0:
        raise UnalignedLength("bit count %d is not a multiple of k=%d" % (bits.size, k))
    n_samples = bits.size // k
    flat = arr.reshape(-1).copy()
    if n_samples > flat.size:
        raise CapacityExceeded(
            "%d bits need %d samples, image has %d" % (bits.size, n_samples, flat.size)
        )
    groups = bits.reshape(-1, k)
    values = np.zeros(n_samples, dtype=np.uint8)
    for col in range(k):
        values = (values << 1) | groups[:, col]
    mask = np.uint8((0xFF << k) & 0xFF)
    flat[:n_samples] = (flat[:n_samples] & mask) | values
    return flat.reshape(arr.shape)


def classic_lsb_extract(image, count: int, k: int = 1) -> np.ndarray:
    """Read ``count`` bits back from the k low bits of raster samples."""
    arr = ensure_rgb_image(image)
    k = _check_k(k)
    if count < 0:
        raise ValueError("count must be non-negative")
    flat = arr.reshape(-1)
    if count > flat.size * k:
        raise CapacityExceeded(
            "%d bits exceed the %d-sample image at k=%d" % (count, flat.size, k)
        )
    n_samples = -(-count // k)
    values = flat[:n_samples]
    cols = [(values >> shift) & 1 for shift in range(k - 1, -1, -1)]
    return np.stack(cols, axis=1).reshape(-1)[:count].astype(np.uint8)

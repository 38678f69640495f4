"""Image data model and the integer intensity plane.

Images are numpy arrays of shape (H, W, 3), dtype uint8, one (R, G, B)
triple per pixel. The intensity plane of an image is the per-pixel value
floor((R+G+B)/3), shape (H, W). ``apply_i_plane`` is the bit-exact
write-back: it adjusts the channel sum of each pixel so the recomputed
intensity equals the requested plane exactly, which is what makes LSB
payloads stored in the plane survive reconstruction.
"""

import numpy as np

from .errors import DimensionMismatch, IntensityDeltaTooLarge

MAX_CHANNEL_SUM = 3 * 255


def ensure_rgb_image(image) -> np.ndarray:
    """Validate and canonicalize an RGB image to a (H, W, 3) uint8 array."""
    arr = np.asarray(image)
    if arr.ndim != 3 or arr.shape[2] != 3:
        raise ValueError("expected an (H, W, 3) RGB array, got shape %r" % (arr.shape,))
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError("image must contain at least one pixel")
    if arr.dtype != np.uint8:
        if not np.issubdtype(arr.dtype, np.integer):
            raise ValueError("channel values must be integers")
        if arr.min() < 0 or arr.max() > 255:
            raise ValueError("channel values must lie in [0, 255]")
        arr = arr.astype(np.uint8)
    return arr


def ensure_plane(plane) -> np.ndarray:
    """Validate and canonicalize an intensity plane to a (H, W) uint8 array."""
    arr = np.asarray(plane)
    if arr.ndim != 2:
        raise ValueError("expected a 2-D intensity plane, got shape %r" % (arr.shape,))
    if arr.dtype != np.uint8:
        if not np.issubdtype(arr.dtype, np.integer):
            raise ValueError("intensity values must be integers")
        if arr.min() < 0 or arr.max() > 255:
            raise ValueError("intensity values must lie in [0, 255]")
        arr = arr.astype(np.uint8)
    return arr


def compute_i_plane(image) -> np.ndarray:
    """Per-pixel floor((R+G+B)/3) as a uint8 plane of the same dimensions."""
    arr = ensure_rgb_image(image)
    sums = arr.astype(np.int32).sum(axis=2)
    return (sums // 3).astype(np.uint8)


def apply_i_plane(image, plane) -> np.ndarray:
    """Rewrite pixel channel sums so the image's intensity plane equals ``plane``.

    For each pixel with sum S = R+G+B the new sum is S' = 3*I' + (S mod 3),
    clamped to 765 (which only bites when I' = 255, by dropping the
    remainder). The delta S'-S is split as evenly as possible over the
    channels, remainder units going to R first, then G, then B; a channel
    that would leave [0, 255] is clamped and the residue carries to the
    next channel. The target intensity may differ from the current one by
    at most 1 per pixel.
    """
    arr = ensure_rgb_image(image)
    tgt = ensure_plane(plane)
    if arr.shape[:2] != tgt.shape:
        raise DimensionMismatch(
            "plane shape %r does not match image shape %r" % (tgt.shape, arr.shape[:2])
        )

    channels = arr.astype(np.int32)
    sums = channels.sum(axis=2)
    cur = sums // 3
    tgt32 = tgt.astype(np.int32)
    if np.abs(tgt32 - cur).max(initial=0) > 1:
        raise IntensityDeltaTooLarge("plane requests an intensity step larger than 1")

    new_sums = np.minimum(3 * tgt32 + sums % 3, MAX_CHANNEL_SUM)
    delta = new_sums - sums
    sign = np.sign(delta)
    mag = np.abs(delta)
    base = mag // 3
    rem = mag % 3

    out = np.empty_like(channels)
    carry = np.zeros_like(delta)
    for c in range(3):
        want = sign * (base + (rem > c))
        raw = channels[:, :, c] + want + carry
        clipped = np.clip(raw, 0, 255)
        carry = raw - clipped
        out[:, :, c] = clipped
    # Residue can survive the first pass only when the last channel clamps;
    # S' in [0, 765] guarantees one more sweep over the channels absorbs it.
    if carry.any():
        for c in range(3):
            raw = out[:, :, c] + carry
            clipped = np.clip(raw, 0, 255)
            carry = raw - clipped
            out[:, :, c] = clipped
    return out.astype(np.uint8)

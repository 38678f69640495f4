"""The end-to-end stego codec.

Wire format (all of this must match between embedder and extractor):

* Carrier: square RGB image, even side N >= 12 (the header must fit in
  one quadrant). The image is transposed, its integer intensity plane
  (floor((R+G+B)/3)) is split into quadrants numbered in reading order,
  and quadrant j is rotated by key[(j-1) mod len(key)] mod 4
  counterclockwise quarter turns.
* Traversal: cells of each (N/2)-order quadrant are visited in the value
  order of the deterministic magic square of that order (cell holding 1
  first), LSB of the intensity value replaced per bit.
* Header: 32-bit big-endian unpadded payload byte count, XORed with the
  first 32 keystream bits, written at traversal positions 0..31 of
  quadrant 1.
* Payload: padded with 0x00 to a multiple of 4 bytes and scrambled into
  four blocks (see ``mlea``); block 1 follows the header in quadrant 1
  (traversal position 32), blocks 2..4 start at position 0 of quadrants
  2..4.
* Write-back: quadrants are unrotated, merged, the intensity plane is
  applied sum-exactly to the transposed image, and the result transposed
  back. Only lossless carrier formats preserve the payload.
"""

import numpy as np

from . import geometry, mlea
from .bits import as_bits, bits_to_bytes, bytes_to_bits
from .errors import (
    CapacityExceeded,
    CorruptHeader,
    EmptyKey,
    NonSquare,
    OddDimensions,
    PayloadTooLarge,
    TooSmall,
)
from .image import apply_i_plane, compute_i_plane, ensure_plane, ensure_rgb_image
from .magic import _traversal_flat

HEADER_BITS = 32


def capacity(width: int, height: int) -> int:
    """Payload capacity in bytes of a width x height carrier.

    The header takes 32 cells of quadrant 1 and each of the four blocks
    stores two bits per payload byte, so with Q = (N/2)**2 cells per
    quadrant the limit is the largest multiple of 4 at most (Q - 32) / 2.
    """
    if width != height:
        raise NonSquare("carrier must be square, got %dx%d" % (width, height))
    if width % 2 != 0:
        raise OddDimensions("carrier side %d is odd" % width)
    if width < 6:
        raise TooSmall("carrier side %d leaves no quadrant of order >= 3" % width)
    q = (width // 2) ** 2
    usable = (q - HEADER_BITS) // 2
    return max(usable - usable % 4, 0)


def _pad(payload: bytes) -> bytes:
    return payload + b"\x00" * (-len(payload) % 4)


def plane_embed_bits(plane, bits, start: int = 0) -> np.ndarray:
    """Replace LSBs along the magic traversal of a square plane."""
    arr = ensure_plane(plane)
    n = arr.shape[0]
    if arr.shape[1] != n:
        raise NonSquare("traversal needs a square plane")
    bits = as_bits(bits)
    if start < 0:
        raise ValueError("start must be non-negative")
    if start + bits.size > n * n:
        raise CapacityExceeded(
            "%d bits from position %d exceed %d cells" % (bits.size, start, n * n)
        )
    path = _traversal_flat(n)[start : start + bits.size]
    out = arr.copy()
    flat = out.reshape(-1)
    flat[path] = (flat[path] & 0xFE) | bits
    return out


def plane_extract_bits(plane, count: int, start: int = 0) -> np.ndarray:
    """Read LSBs along the magic traversal; inverse of plane_embed_bits."""
    arr = ensure_plane(plane)
    n = arr.shape[0]
    if arr.shape[1] != n:
        raise NonSquare("traversal needs a square plane")
    if count < 0 or start < 0:
        raise ValueError("count and start must be non-negative")
    if start + count > n * n:
        raise CapacityExceeded(
            "%d bits from position %d exceed %d cells" % (count, start, n * n)
        )
    path = _traversal_flat(n)[start : start + count]
    return arr.reshape(-1)[path] & 1


def _check_header_room(side: int):
    # Sides 6..10 pass the capacity geometry checks with capacity 0, but
    # their quadrants cannot even hold the 32-bit header.
    if (side // 2) ** 2 < HEADER_BITS:
        raise TooSmall(
            "quadrant of side %d has fewer than %d cells; no header fits"
            % (side // 2, HEADER_BITS)
        )


def embed(cover, payload: bytes, key: bytes) -> np.ndarray:
    """Hide ``payload`` in a square even-sided cover image under ``key``."""
    arr = ensure_rgb_image(cover)
    cap = capacity(arr.shape[1], arr.shape[0])
    _check_header_room(arr.shape[0])
    if len(key) == 0:
        raise EmptyKey("secret key must not be empty")
    payload = bytes(payload)
    if len(payload) > cap:
        raise PayloadTooLarge(
            "payload of %d bytes exceeds capacity of %d bytes" % (len(payload), cap)
        )

    blocks = mlea.mlea_encrypt(_pad(payload), key)
    header = bytes_to_bits(len(payload).to_bytes(4, "big")) ^ mlea.derive_keystream(
        key, HEADER_BITS
    )

    transposed = geometry.transpose(arr)
    quads = geometry.split_quadrants(compute_i_plane(transposed))
    turns = geometry.rotation_schedule(key)

    stego_quads = []
    for j, (quad, k, block) in enumerate(zip(quads, turns, blocks)):
        rotated = geometry.rotate_quarter(quad, k)
        if j == 0:
            rotated = plane_embed_bits(rotated, header, start=0)
            rotated = plane_embed_bits(rotated, block, start=HEADER_BITS)
        else:
            rotated = plane_embed_bits(rotated, block, start=0)
        stego_quads.append(geometry.rotate_quarter(rotated, (4 - k) % 4))

    stego_plane = geometry.merge_quadrants(geometry.QuadrantSet(*stego_quads))
    return geometry.transpose(apply_i_plane(transposed, stego_plane))


def extract(stego, key: bytes) -> bytes:
    """Recover the payload hidden by ``embed`` with the same key."""
    arr = ensure_rgb_image(stego)
    cap = capacity(arr.shape[1], arr.shape[0])
    _check_header_room(arr.shape[0])
    if len(key) == 0:
        raise EmptyKey("secret key must not be empty")

    quads = geometry.split_quadrants(compute_i_plane(geometry.transpose(arr)))
    turns = geometry.rotation_schedule(key)
    rotated = [geometry.rotate_quarter(q, k) for q, k in zip(quads, turns)]

    header = plane_extract_bits(rotated[0], HEADER_BITS, start=0)
    header ^= mlea.derive_keystream(key, HEADER_BITS)
    payload_len = int.from_bytes(bits_to_bytes(header), "big")
    if payload_len > cap:
        raise CorruptHeader(
            "decoded length %d exceeds capacity %d (wrong key or not a stego image)"
            % (payload_len, cap)
        )

    block_bits = 2 * ((payload_len + 3) // 4 * 4)
    blocks = [plane_extract_bits(rotated[0], block_bits, start=HEADER_BITS)]
    blocks.extend(plane_extract_bits(q, block_bits, start=0) for q in rotated[1:])
    padded = mlea.mlea_decrypt(mlea.MessageBlocks(*blocks), key)
    return padded[:payload_len]

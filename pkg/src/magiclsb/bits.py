"""Bit-string helpers.

A bit string is a 1-D numpy array of uint8 values 0/1. Bytes serialize
MSB-first: byte 0x41 becomes bits 0,1,0,0,0,0,0,1.
"""

import numpy as np


def bytes_to_bits(data: bytes) -> np.ndarray:
    """MSB-first bit expansion of a byte string."""
    return np.unpackbits(np.frombuffer(bytes(data), dtype=np.uint8))


def bits_to_bytes(bits) -> bytes:
    """Inverse of bytes_to_bits; length must be a multiple of 8."""
    bits = np.asarray(bits, dtype=np.uint8)
    if bits.size % 8 != 0:
        raise ValueError("bit count %d is not a multiple of 8" % bits.size)
    return np.packbits(bits).tobytes()


def as_bits(bits) -> np.ndarray:
    """Coerce a sequence of 0/1 values to the canonical bit array."""
    arr = np.asarray(bits, dtype=np.uint8).ravel()
    if arr.size and arr.max() > 1:
        raise ValueError("bit values must be 0 or 1")
    return arr

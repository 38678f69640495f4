"""Multi-level keyed scrambling of the payload bit stream.

The payload is fanned out into four equal blocks two bits per byte
(outermost bit pair to block 1, innermost pair to block 4), every bit is
flipped, each 8-bit group inside a block is reversed, and finally each
block is XORed with a keystream derived from the secret key by the same
flip-and-reverse transform. Every stage is an involution or has an exact
inverse, so decryption runs the stages backwards.

This is a keyed scrambler, not a cipher with any proven strength; the
security of the codec rests on the key-driven geometry plus this
diffusion, and the payload should be pre-encrypted when that matters.
"""

from typing import NamedTuple

import numpy as np

from .bits import as_bits, bits_to_bytes, bytes_to_bits
from .errors import BlockLengthMismatch, EmptyKey, UnalignedLength


class MessageBlocks(NamedTuple):
    b1: np.ndarray
    b2: np.ndarray
    b3: np.ndarray
    b4: np.ndarray


def derive_keystream(key: bytes, out_len: int) -> np.ndarray:
    """Keystream bits: key bytes MSB-first, flipped, each byte reversed,
    repeated cyclically to out_len bits."""
    if len(key) == 0:
        raise EmptyKey("secret key must not be empty")
    if out_len < 0:
        raise ValueError("out_len must be non-negative")
    base = _reverse_bytes(1 - bytes_to_bits(key))
    if out_len == 0:
        return np.zeros(0, dtype=np.uint8)
    reps = -(-out_len // base.size)
    return np.tile(base, reps)[:out_len]


def split_blocks(msg_bits) -> MessageBlocks:
    """Fan a bit stream out into four blocks, two bits per 8-bit group.

    Group bits t1..t8 (MSB first) contribute (t8, t1) to block 1,
    (t7, t2) to block 2, (t6, t3) to block 3 and (t5, t4) to block 4.
    """
    bits = as_bits(msg_bits)
    if bits.size % 32 != 0:
        raise UnalignedLength("bit count %d is not a multiple of 32" % bits.size)
    groups = bits.reshape(-1, 8)
    blocks = []
    for outer, inner in ((7, 0), (6, 1), (5, 2), (4, 3)):
        blocks.append(groups[:, (outer, inner)].reshape(-1).copy())
    return MessageBlocks(*blocks)


def _merge_blocks(blocks: MessageBlocks) -> np.ndarray:
    # Exact inverse of split_blocks.
    n_bytes = blocks.b1.size // 2
    groups = np.empty((n_bytes, 8), dtype=np.uint8)
    for block, (outer, inner) in zip(blocks, ((7, 0), (6, 1), (5, 2), (4, 3))):
        pairs = block.reshape(-1, 2)
        groups[:, outer] = pairs[:, 0]
        groups[:, inner] = pairs[:, 1]
    return groups.reshape(-1)


def _reverse_bytes(bits: np.ndarray) -> np.ndarray:
    return bits.reshape(-1, 8)[:, ::-1].reshape(-1)


def _key_mix(block: np.ndarray, key: bytes) -> np.ndarray:
    return block ^ derive_keystream(key, block.size)


def mlea_encrypt(payload: bytes, key: bytes) -> MessageBlocks:
    """Scramble a payload (length a multiple of 4 bytes) into four blocks."""
    if len(key) == 0:
        raise EmptyKey("secret key must not be empty")
    if len(payload) % 4 != 0:
        raise UnalignedLength("payload length %d is not a multiple of 4" % len(payload))
    blocks = split_blocks(bytes_to_bits(payload))
    out = []
    for block in blocks:
        block = _reverse_bytes(1 - block) if block.size else block
        out.append(_key_mix(block, key))
    return MessageBlocks(*out)


def mlea_decrypt(blocks: MessageBlocks, key: bytes) -> bytes:
    """Exact inverse of mlea_encrypt."""
    if len(key) == 0:
        raise EmptyKey("secret key must not be empty")
    blocks = MessageBlocks(*(as_bits(b) for b in blocks))
    sizes = {b.size for b in blocks}
    if len(sizes) != 1 or blocks.b1.size % 8 != 0:
        raise BlockLengthMismatch("blocks must have equal lengths, multiples of 8")
    undone = []
    for block in blocks:
        block = _key_mix(block, key)
        undone.append(1 - _reverse_bytes(block) if block.size else block)
    return bits_to_bytes(_merge_blocks(MessageBlocks(*undone)))

"""Lossless grid geometry: transposition, quadrant tiling, quarter turns.

Rotation is restricted to quarter turns so that every operation is an
exact permutation of cell values and therefore invertible on integer
grids. Each quadrant's turn count comes from one key byte mod 4, so the
extractor can reproduce the layout from the key alone.

Quadrant numbering is reading order: 1 = top-left, 2 = top-right,
3 = bottom-left, 4 = bottom-right. This numbering is part of the stego
wire format.
"""

from typing import NamedTuple

import numpy as np

from .errors import EmptyKey, NonSquare, OddDimensions, TileMismatch


class QuadrantSet(NamedTuple):
    q1: np.ndarray
    q2: np.ndarray
    q3: np.ndarray
    q4: np.ndarray


class RotationSchedule(NamedTuple):
    k1: int
    k2: int
    k3: int
    k4: int


def transpose(grid) -> np.ndarray:
    """Swap rows and columns; trailing channel axes ride along."""
    arr = np.asarray(grid)
    if arr.ndim == 2:
        return arr.T.copy()
    if arr.ndim == 3:
        return arr.transpose(1, 0, 2).copy()
    raise ValueError("expected a 2-D plane or (H, W, C) image")


def split_quadrants(plane) -> QuadrantSet:
    """Four disjoint half-size tiles of a square, even-sided plane."""
    arr = np.asarray(plane)
    if arr.ndim != 2:
        raise ValueError("expected a 2-D plane")
    h, w = arr.shape
    if h != w:
        raise NonSquare("plane is %dx%d; quadrant split needs a square" % (h, w))
    if h % 2 != 0:
        raise OddDimensions("side %d is odd" % h)
    m = h // 2
    return QuadrantSet(
        arr[:m, :m].copy(), arr[:m, m:].copy(), arr[m:, :m].copy(), arr[m:, m:].copy()
    )


def merge_quadrants(quads: QuadrantSet) -> np.ndarray:
    """Inverse of split_quadrants."""
    q1, q2, q3, q4 = (np.asarray(q) for q in quads)
    shapes = {q.shape for q in (q1, q2, q3, q4)}
    if len(shapes) != 1 or q1.ndim != 2 or q1.shape[0] != q1.shape[1]:
        raise TileMismatch("quadrants must be four equal square tiles")
    return np.block([[q1, q2], [q3, q4]])


def rotate_quarter(plane, k: int) -> np.ndarray:
    """k counterclockwise quarter turns of a square plane."""
    arr = np.asarray(plane)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise NonSquare("quarter turns are defined on square planes only")
    if k not in (0, 1, 2, 3):
        raise ValueError("turn count must be in {0, 1, 2, 3}")
    return np.rot90(arr, k).copy()


def rotation_schedule(key: bytes) -> RotationSchedule:
    """Per-quadrant turn counts: key byte (j-1) mod len(key), mod 4."""
    if len(key) == 0:
        raise EmptyKey("secret key must not be empty")
    return RotationSchedule(*(key[j % len(key)] % 4 for j in range(4)))

"""Deterministic magic squares and the cell traversal they induce.

The embedder and extractor must agree on one square per order, so the
construction is pinned: Siamese for odd orders, the complement pattern
for orders divisible by 4, and the Strachey/LUX block method for the
remaining even orders. Orders below 3 are rejected (there is no 2x2
magic square).
"""

from functools import lru_cache

import numpy as np

from .errors import UnsupportedOrder


def magic_constant(n: int) -> int:
    """Common row/column/diagonal sum of an order-n magic square."""
    return n * (n * n + 1) // 2


def _siamese(n: int) -> np.ndarray:
    # Start in the middle of the top row, move up-right with wraparound,
    # drop one row down instead when the target cell is taken.
    square = np.zeros((n, n), dtype=np.int64)
    r, c = 0, n // 2
    for value in range(1, n * n + 1):
        square[r, c] = value
        nr, nc = (r - 1) % n, (c + 1) % n
        if square[nr, nc]:
            nr, nc = (r + 1) % n, c
        r, c = nr, nc
    return square


def _doubly_even(n: int) -> np.ndarray:
    # Raster fill, then complement the cells on the diagonals of each
    # aligned 4x4 block.
    square = np.arange(1, n * n + 1, dtype=np.int64).reshape(n, n)
    i, j = np.indices((n, n)) % 4
    mask = (i == j) | (i + j == 3)
    square[mask] = n * n + 1 - square[mask]
    return square


# 2x2 offset patterns for the LUX construction; entries are added to
# 4*(v-1) where v is the underlying odd-square value.
_L = np.array([[4, 1], [2, 3]], dtype=np.int64)
_U = np.array([[1, 4], [2, 3]], dtype=np.int64)
_X = np.array([[1, 4], [3, 2]], dtype=np.int64)


def _singly_even(n: int) -> np.ndarray:
    m = n // 2
    k = (m - 1) // 2
    odd = _siamese(m)

    letters = [[_L] * m for _ in range(k + 1)]
    letters.append([_U] * m)
    letters.extend([_X] * m for _ in range(k - 1))
    # Swap the centre L with the U directly below it.
    letters[k][k], letters[k + 1][k] = letters[k + 1][k], letters[k][k]

    square = np.zeros((n, n), dtype=np.int64)
    for i in range(m):
        for j in range(m):
            base = 4 * (odd[i, j] - 1)
            square[2 * i : 2 * i + 2, 2 * j : 2 * j + 2] = base + letters[i][j]
    return square


@lru_cache(maxsize=64)
def _magic_square_cached(n: int) -> np.ndarray:
    if n < 3:
        raise UnsupportedOrder("no magic square of order %d" % n)
    if n % 2 == 1:
        square = _siamese(n)
    elif n % 4 == 0:
        square = _doubly_even(n)
    else:
        square = _singly_even(n)
    square.setflags(write=False)
    return square


def magic_square(n: int) -> np.ndarray:
    """Order-n magic square holding each of 1..n*n exactly once."""
    return _magic_square_cached(n).copy()


@lru_cache(maxsize=64)
def _traversal_cached(n: int) -> np.ndarray:
    square = _magic_square_cached(n)
    flat_by_value = np.argsort(square.ravel(), kind="stable")
    positions = np.column_stack(np.unravel_index(flat_by_value, (n, n)))
    positions.setflags(write=False)
    return positions


def traversal_order(n: int) -> np.ndarray:
    """(n*n, 2) array of (row, col); row k locates square value k+1."""
    return _traversal_cached(n).copy()


def _traversal_flat(n: int) -> np.ndarray:
    """Read-only flat cell indices in embedding order (internal)."""
    pos = _traversal_cached(n)
    return pos[:, 0] * n + pos[:, 1]

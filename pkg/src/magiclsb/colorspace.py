"""RGB <-> HSI conversion (hue in degrees, saturation and intensity in [0,1]).

Used for analysis and reporting only; the embedding path works on the
integer intensity plane directly (see ``image``). Conversions follow the
standard arccos / three-sector formulation on device RGB. No gamma and
no white point handling. Achromatic pixels get hue 0 by convention.

``rgb_to_hsi_unit`` / ``hsi_to_rgb_unit`` operate on floats in [0, 1]
and accept scalars or numpy arrays; ``rgb_to_hsi`` / ``hsi_to_rgb`` are
the 8-bit pixel wrappers.
"""

import numpy as np

from .errors import OutOfGamut

_GAMUT_EPS = 1e-9


class HsiTriple(tuple):
    """(h, s, i) with h in degrees [0, 360), s and i in [0, 1]."""

    __slots__ = ()

    def __new__(cls, h, s, i):
        return super().__new__(cls, (h, s, i))

    h = property(lambda self: self[0])
    s = property(lambda self: self[1])
    i = property(lambda self: self[2])


def rgb_to_hsi_unit(r, g, b):
    """Convert unit-range RGB to (hue degrees, saturation, intensity)."""
    r, g, b = (np.asarray(c, dtype=np.float64) for c in (r, g, b))
    total = r + g + b
    i = total / 3.0

    mn = np.minimum(np.minimum(r, g), b)
    with np.errstate(divide="ignore", invalid="ignore"):
        s = np.where(total > 0.0, 1.0 - 3.0 * mn / np.where(total > 0.0, total, 1.0), 0.0)
    s = np.clip(s, 0.0, 1.0)

    num = 0.5 * ((r - g) + (r - b))
    den = np.sqrt((r - g) ** 2 + (r - b) * (g - b))
    achromatic = den <= 0.0
    cosv = np.clip(num / np.where(achromatic, 1.0, den), -1.0, 1.0)
    theta = np.degrees(np.arccos(cosv))
    h = np.where(b > g, 360.0 - theta, theta)
    h = np.where(achromatic, 0.0, h)
    h = np.where(h >= 360.0, 0.0, h)
    if h.ndim == 0:
        return float(h), float(s), float(i)
    return h, s, i


def hsi_to_rgb_unit(h, s, i):
    """Inverse conversion; raises OutOfGamut if any channel leaves [0, 1]."""
    h, s, i = (np.asarray(c, dtype=np.float64) for c in (h, s, i))
    if np.any(h < 0.0) or np.any(h >= 360.0):
        raise ValueError("hue must lie in [0, 360)")
    if np.any(s < 0.0) or np.any(s > 1.0) or np.any(i < 0.0) or np.any(i > 1.0):
        raise ValueError("saturation and intensity must lie in [0, 1]")

    sector = np.floor_divide(h, 120.0).astype(np.int64)
    hp = np.radians(h - 120.0 * sector)
    low = i * (1.0 - s)
    high = i * (1.0 + s * np.cos(hp) / np.cos(np.radians(60.0) - hp))
    rest = 3.0 * i - (low + high)

    # Sector 0 (h < 120): b low, r high; sector 1: r low, g high; sector 2: g low, b high.
    r = np.choose(sector, (high, low, rest))
    g = np.choose(sector, (rest, high, low))
    b = np.choose(sector, (low, rest, high))
    if min(r.min(), g.min(), b.min()) < -_GAMUT_EPS or max(r.max(), g.max(), b.max()) > 1.0 + _GAMUT_EPS:
        raise OutOfGamut("hue/saturation/intensity combination leaves the RGB cube")
    r, g, b = (np.clip(c, 0.0, 1.0) for c in (r, g, b))
    if r.ndim == 0:
        return float(r), float(g), float(b)
    return r, g, b


def rgb_to_hsi(pixel) -> HsiTriple:
    """HSI triple of one 8-bit (R, G, B) pixel."""
    r, g, b = (int(c) for c in pixel)
    for c in (r, g, b):
        if not 0 <= c <= 255:
            raise ValueError("channel values must lie in [0, 255]")
    h, s, i = rgb_to_hsi_unit(r / 255.0, g / 255.0, b / 255.0)
    return HsiTriple(h, s, i)


def hsi_to_rgb(triple) -> tuple:
    """8-bit (R, G, B) pixel for an HSI triple; raises OutOfGamut."""
    h, s, i = triple
    r, g, b = hsi_to_rgb_unit(h, s, i)
    return tuple(int(np.floor(c * 255.0 + 0.5)) for c in (r, g, b))

"""Image quality metrics for cover/stego comparison.

All metrics run over every sample (pixel x channel). PSNR of identical
images is reported as the cap value 100 dB instead of infinity so
reports stay comparable; computed values above the cap are clipped to
it. SSIM is the single-window global statistic (whole image as one
window, per channel, then averaged), not the sliding-window variant.
NCC is normalized by the energy of the second (stego) argument, so it
is the one asymmetric metric here.
"""

import dataclasses
import json
import math

import numpy as np

from .errors import DimensionMismatch, ZeroDenominator
from .image import ensure_rgb_image

PSNR_CAP_DB = 100.0
_SSIM_C1 = (0.01 * 255.0) ** 2
_SSIM_C2 = (0.03 * 255.0) ** 2

CSV_FIELDS = ("mse", "psnr", "ssim", "ncc", "mae")


@dataclasses.dataclass(frozen=True)
class QualityReport:
    mse: float
    psnr: float
    ssim: float
    ncc: float
    mae: float

    def to_text(self) -> str:
        return "\n".join("%s=%.6f" % (f, getattr(self, f)) for f in CSV_FIELDS)

    def to_csv_row(self) -> str:
        return ",".join("%.6f" % getattr(self, f) for f in CSV_FIELDS)

    def to_json(self) -> str:
        return json.dumps({f: getattr(self, f) for f in CSV_FIELDS})


def _pair(cover, stego):
    c = ensure_rgb_image(cover)
    s = ensure_rgb_image(stego)
    if c.shape != s.shape:
        raise DimensionMismatch("shapes %r and %r differ" % (c.shape, s.shape))
    return c.astype(np.float64), s.astype(np.float64)


def mse(cover, stego) -> float:
    """Mean squared difference over all samples."""
    c, s = _pair(cover, stego)
    return float(np.mean((s - c) ** 2))


def psnr(cover, stego) -> float:
    """10*log10(Cmax^2 / MSE) in dB; Cmax is the max sample of both images."""
    c, s = _pair(cover, stego)
    err = float(np.mean((s - c) ** 2))
    if err == 0.0:
        return PSNR_CAP_DB
    c_max = float(max(c.max(), s.max()))
    return min(10.0 * math.log10(c_max * c_max / err), PSNR_CAP_DB)


def ssim(cover, stego) -> float:
    """Global structural similarity, averaged over the three channels."""
    c, s = _pair(cover, stego)
    values = []
    for ch in range(3):
        x = c[:, :, ch].ravel()
        y = s[:, :, ch].ravel()
        mx, my = x.mean(), y.mean()
        vx, vy = x.var(), y.var()
        cov = float(np.mean((x - mx) * (y - my)))
        values.append(
            ((2 * mx * my + _SSIM_C1) * (2 * cov + _SSIM_C2))
            / ((mx * mx + my * my + _SSIM_C1) * (vx + vy + _SSIM_C2))
        )
    return float(np.mean(values))


def ncc(cover, stego) -> float:
    """Cross-correlation normalized by the stego image's energy."""
    c, s = _pair(cover, stego)
    denom = float(np.sum(s * s))
    if denom == 0.0:
        raise ZeroDenominator("stego image is all zeros")
    return float(np.sum(s * c) / denom)


def mae(cover, stego) -> float:
    """Mean absolute difference over all samples."""
    c, s = _pair(cover, stego)
    return float(np.mean(np.abs(c - s)))


def quality_report(cover, stego) -> QualityReport:
    """All five metrics in one record."""
    return QualityReport(
        mse=mse(cover, stego),
        psnr=psnr(cover, stego),
        ssim=ssim(cover, stego),
        ncc=ncc(cover, stego),
        mae=mae(cover, stego),
    )

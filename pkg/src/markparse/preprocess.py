"""Raster preprocessing: grayscale, binarization, denoising, deskew.

Scanned certificates arrive as color rasters; recognition quality depends
on feeding the engine clean, level, black-and-white input. All operations
are pure (new arrays out) and deterministic:

- grayscale uses integer BT.601 luma, so results are exactly testable
- binarization is global Otsu, with the threshold chosen by exact
  integer arithmetic (no float ties)
- denoising is a majority filter over the binary image
- skew is estimated by sweeping candidate angles and maximizing the
  variance of the row-projection profile

The estimated angle is the corrective rotation: ``rotate(image, angle)``
levels the text. Rotations beyond +/-45 degrees are refused rather than
guessed at; severely rotated documents are rejected for human handling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidImage, InvalidParameter, OrientationUnsupported


@dataclass(eq=False)
class GrayImage:
    """8-bit luminance raster, row-major, 0 = black."""

    pixels: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.pixels, dtype=np.uint8)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise InvalidImage("gray image must be a non-empty 2-D array")
        self.pixels = arr

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]


@dataclass(eq=False)
class BinaryImage:
    """Boolean raster, True = ink (foreground)."""

    pixels: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.pixels, dtype=bool)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise InvalidImage("binary image must be a non-empty 2-D array")
        self.pixels = arr

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    def ink_count(self) -> int:
        return int(self.pixels.sum())


@dataclass(frozen=True)
class SkewEstimate:
    """Corrective rotation in degrees and a confidence score in [0, 1].

    Applying ``rotate(image, angle)`` levels the text.
    """

    angle: float
    confidence: float


def to_grayscale(rgb: np.ndarray) -> GrayImage:
    """Convert an RGB raster (H x W x 3, channels 0-255) to luminance.

    Luma is computed in integer arithmetic as
    (299*R + 587*G + 114*B + 500) // 1000, i.e. BT.601 weights with
    half-up rounding, which is exact and monotone in every channel.
    """
    arr = np.asarray(rgb)
    if arr.ndim != 3 or arr.shape[2] != 3 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise InvalidImage("expected a non-empty H x W x 3 RGB array")
    if arr.min() < 0 or arr.max() > 255:
        raise InvalidImage("channel values must be within 0-255")
    channels = arr.astype(np.int64)
    luma = (299 * channels[:, :, 0] + 587 * channels[:, :, 1] + 114 * channels[:, :, 2] + 500) // 1000
    return GrayImage(luma.astype(np.uint8))


def _otsu_threshold(histogram: np.ndarray) -> int:
    """Threshold in 0..255 maximizing between-class variance, exact.

    Pixels below the threshold are one class, the rest the other. The
    variance ratio is compared as integer fractions so ties resolve
    deterministically to the smallest threshold.
    """
    counts = [int(c) for c in histogram]
    total = sum(counts)
    weighted_total = sum(v * c for v, c in enumerate(counts))
    best_t = 0
    # variance(t) = (s0*N - S*n0)^2 / (n0*n1), tracked as num/den
    best_num, best_den = 0, 1
    n0 = 0
    s0 = 0
    for t in range(256):
        # n0/s0 cover pixel values < t
        if t > 0:
            n0 += counts[t - 1]
            s0 += (t - 1) * counts[t - 1]
        n1 = total - n0
        if n0 == 0 or n1 == 0:
            continue
        num = (s0 * total - weighted_total * n0) ** 2
        den = n0 * n1
        if num * best_den > best_num * den:
            best_num, best_den = num, den
            best_t = t
    return best_t


def binarize_otsu(gray: GrayImage) -> BinaryImage:
    """Binarize dark-text-on-light-paper via Otsu's method.

    A pixel is foreground (ink) iff its luma is strictly below the
    threshold. A constant image has no ink evidence and comes back all
    background.
    """
    histogram = np.bincount(gray.pixels.ravel(), minlength=256)
    threshold = _otsu_threshold(histogram)
    return BinaryImage(gray.pixels < threshold)


def denoise_median(binary: BinaryImage, window: int = 3) -> BinaryImage:
    """Majority filter over a window x window neighborhood.

    Border pixels use replicated-edge windows. Window must be odd and
    >= 3 so a majority always exists.
    """
    if not isinstance(window, int) or isinstance(window, bool):
        raise InvalidParameter("window must be an integer")
    if window < 3 or window % 2 == 0:
        raise InvalidParameter("window must be odd and >= 3")
    pad = window // 2
    padded = np.pad(binary.pixels, pad, mode="edge").astype(np.int32)
    view = np.lib.stride_tricks.sliding_window_view(padded, (window, window))
    sums = view.sum(axis=(2, 3))
    return BinaryImage(2 * sums > window * window)


def _projected_row_variance(xs: np.ndarray, ys: np.ndarray, angle_deg: float) -> float:
    """Variance of the row-projection profile after rotating ink by angle.

    Ink pixel coordinates are center-relative; each pixel lands in the
    nearest destination row and the profile variance over the occupied
    row range is returned.
    """
    theta = math.radians(angle_deg)
    rows = np.rint(-xs * math.sin(theta) + ys * math.cos(theta)).astype(np.int64)
    rows -= rows.min()
    profile = np.bincount(rows)
    return float(profile.var())


def estimate_skew(binary: BinaryImage, sweep: float = 15.0, step: float = 0.25) -> SkewEstimate:
    """Estimate the corrective rotation within +/- sweep degrees.

    Sweeps candidate angles at ``step`` increments and keeps the one
    whose row-projection profile has the highest variance (level text
    projects into few, dense rows). Ties prefer the smaller magnitude.
    Confidence is the margin of the best variance over the sweep's
    median, normalized by the best. A blank image estimates 0 with
    confidence 0.
    """
    if sweep <= 0 or step <= 0:
        raise InvalidParameter("sweep and step must be positive")
    ys, xs = np.nonzero(binary.pixels)
    if len(xs) == 0:
        return SkewEstimate(angle=0.0, confidence=0.0)
    cx = (binary.width - 1) / 2.0
    cy = (binary.height - 1) / 2.0
    xs = xs.astype(np.float64) - cx
    ys = ys.astype(np.float64) - cy
    steps = int(math.floor(sweep / step + 1e-9))
    angles = [k * step for k in range(-steps, steps + 1)]
    variances = [_projected_row_variance(xs, ys, a) for a in angles]
    best_i = 0
    for i in range(1, len(angles)):
        if variances[i] > variances[best_i]:
            best_i = i
        elif variances[i] == variances[best_i]:
            if (abs(angles[i]), angles[i]) < (abs(angles[best_i]), angles[best_i]):
                best_i = i
    best = variances[best_i]
    if best <= 0.0:
        return SkewEstimate(angle=0.0, confidence=0.0)
    median = float(np.median(variances))
    confidence = min(1.0, max(0.0, (best - median) / best))
    return SkewEstimate(angle=float(angles[best_i]), confidence=confidence)


def check_orientation(binary: BinaryImage, ratio: float = 4.0) -> None:
    """Reject images whose text runs vertically (rotated ~90 degrees).

    If the column-projection profile carries far more structure than the
    row profile the page is on its side, which the parser cannot fix.
    """
    ink = binary.pixels.sum(axis=1).astype(np.float64)
    row_var = float(ink.var())
    col_var = float(binary.pixels.sum(axis=0).astype(np.float64).var())
    if col_var > ratio * row_var and col_var > 0.0:
        raise OrientationUnsupported(
            "text appears vertically oriented (rotated ~90 degrees or more)"
        )


def _rotated_canvas(width: int, height: int, theta: float) -> tuple[int, int]:
    cos_t = abs(math.cos(theta))
    sin_t = abs(math.sin(theta))
    out_w = int(math.ceil(width * cos_t + height * sin_t))
    out_h = int(math.ceil(width * sin_t + height * cos_t))
    return max(out_w, 1), max(out_h, 1)


def _source_coords(out_w: int, out_h: int, in_w: int, in_h: int, theta: float) -> tuple[np.ndarray, np.ndarray]:
    """Map every output pixel back to source coordinates (inverse rotation)."""
    dst_x = np.arange(out_w, dtype=np.float64) - (out_w - 1) / 2.0
    dst_y = np.arange(out_h, dtype=np.float64) - (out_h - 1) / 2.0
    gx, gy = np.meshgrid(dst_x, dst_y)
    cos_t = math.cos(theta)
    sin_t = math.sin(theta)
    src_x = gx * cos_t - gy * sin_t + (in_w - 1) / 2.0
    src_y = gx * sin_t + gy * cos_t + (in_h - 1) / 2.0
    return src_x, src_y


def rotate(image: GrayImage | BinaryImage, angle: float):
    """Rotate about the image center; positive angles turn counter-clockwise.

    The canvas grows to contain the rotated bounds. Gray images are
    sampled bilinearly with white background fill; binary images use
    nearest-neighbor with background (no ink) fill. Angles beyond +/-45
    degrees are refused: such documents are rejected, not recovered.
    """
    if not math.isfinite(angle):
        raise InvalidParameter("angle must be finite")
    if abs(angle) > 45.0:
        raise OrientationUnsupported(f"rotation by {angle} degrees is outside +/-45")
    if angle == 0.0:
        return type(image)(image.pixels.copy())
    theta = math.radians(angle)
    out_w, out_h = _rotated_canvas(image.width, image.height, theta)
    src_x, src_y = _source_coords(out_w, out_h, image.width, image.height, theta)

    if isinstance(image, BinaryImage):
        xi = np.rint(src_x).astype(np.int64)
        yi = np.rint(src_y).astype(np.int64)
        inside = (xi >= 0) & (xi < image.width) & (yi >= 0) & (yi < image.height)
        out = np.zeros((out_h, out_w), dtype=bool)
        out[inside] = image.pixels[yi[inside], xi[inside]]
        return BinaryImage(out)

    background = 255.0
    x0 = np.floor(src_x).astype(np.int64)
    y0 = np.floor(src_y).astype(np.int64)
    fx = src_x - x0
    fy = src_y - y0
    pixels = image.pixels.astype(np.float64)

    def sample(yy: np.ndarray, xx: np.ndarray) -> np.ndarray:
        inside = (xx >= 0) & (xx < image.width) & (yy >= 0) & (yy < image.height)
        values = np.full(xx.shape, background)
        values[inside] = pixels[yy[inside], xx[inside]]
        return values

    top = sample(y0, x0) * (1 - fx) + sample(y0, x0 + 1) * fx
    bottom = sample(y0 + 1, x0) * (1 - fx) + sample(y0 + 1, x0 + 1) * fx
    blended = top * (1 - fy) + bottom * fy
    return GrayImage(np.clip(np.rint(blended), 0, 255).astype(np.uint8))

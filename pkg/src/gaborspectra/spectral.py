"""Spectra of Gabor analysis matrices and dual-frame reconstruction.

The squared singular values of the analysis matrix are the eigenvalues of
the frame operator; this module computes them, summarizes frame bounds
and condition numbers, provides the exact diagonal fast path available
for product sets ``F x Z_M``, and reconstructs signals from (noisy) frame
coefficients through the pseudoinverse.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .core import as_mod_vector, frame_operator, synthesis_matrix
from .errors import GaborSpectraError, NotAFrameError, ValidationError
from .framesets import FrameSet

HERMITIAN_TOL = 1e-10
_TRACE_TOL = 1e-9


def rank_threshold(modulus: int, sigma_sq_max: float) -> float:
    """Scale-aware zero threshold: eigenvalues at or below it count as zero."""
    return modulus * 2.0**-46 * sigma_sq_max


def hermitian_eigenvalues(matrix, check: bool = True) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix, ascending.

    Rejects non-square inputs and matrices that are not Hermitian to
    ``HERMITIAN_TOL`` (relative to the largest entry).  The returned
    eigenvalues sum to the trace to 1e-9 relative accuracy.
    """
    a = np.asarray(matrix, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValidationError(f"expected a square matrix, got shape {a.shape}")
    if check:
        scale = max(1.0, float(np.abs(a).max()))
        dev = float(np.abs(a - a.conj().T).max())
        if dev > HERMITIAN_TOL * scale:
            raise ValidationError(
                f"matrix is not Hermitian: max deviation {dev:.3e} exceeds "
                f"{HERMITIAN_TOL:.0e} * {scale:.3e}"
            )
    values = np.linalg.eigvalsh((a + a.conj().T) / 2)
    trace = float(np.real(np.trace(a)))
    if abs(values.sum() - trace) > _TRACE_TOL * max(1.0, abs(trace)):
        raise GaborSpectraError("eigenvalue sum deviates from trace beyond tolerance")
    return values


@dataclass(frozen=True)
class SpectralSummary:
    """Sorted squared singular values of an analysis matrix plus extremes.

    ``cond`` is ``sqrt(sigma_sq_max / sigma_sq_min)`` or ``inf`` when the
    smallest squared singular value falls at or below the rank threshold
    (the system then fails to span C^M).
    """

    modulus: int
    lambda_size: int
    sigma_sq: np.ndarray = field(repr=False)
    cond: float

    def __post_init__(self):
        values = np.asarray(self.sigma_sq, dtype=np.float64)
        if values.shape != (self.modulus,):
            raise ValidationError("sigma_sq must hold exactly M values")
        if np.any(np.diff(values) < 0):
            raise ValidationError("sigma_sq must be sorted ascending")
        values.setflags(write=False)
        object.__setattr__(self, "sigma_sq", values)

    @property
    def sigma_sq_min(self) -> float:
        return float(self.sigma_sq[0])

    @property
    def sigma_sq_max(self) -> float:
        return float(self.sigma_sq[-1])

    def to_json(self) -> str:
        payload = {
            "M": self.modulus,
            "lambda_size": self.lambda_size,
            "sigma_sq": [float(v) for v in self.sigma_sq],
            "cond": "inf" if math.isinf(self.cond) else self.cond,
        }
        return json.dumps(payload, sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "SpectralSummary":
        data = json.loads(text)
        cond = float("inf") if data["cond"] == "inf" else float(data["cond"])
        return SpectralSummary(
            modulus=int(data["M"]),
            lambda_size=int(data["lambda_size"]),
            sigma_sq=np.array(data["sigma_sq"], dtype=np.float64),
            cond=cond,
        )


def summary_from_eigenvalues(values: np.ndarray, modulus: int, lambda_size: int) -> SpectralSummary:
    values = np.maximum(np.sort(np.asarray(values, dtype=np.float64)), 0.0)
    smin, smax = float(values[0]), float(values[-1])
    if smin <= rank_threshold(modulus, smax):
        cond = float("inf")
    else:
        cond = math.sqrt(smax / smin)
    return SpectralSummary(modulus=modulus, lambda_size=lambda_size, sigma_sq=values, cond=cond)


def spectral_summary(g, frame_set: FrameSet) -> SpectralSummary:
    """Squared singular values of the analysis matrix of ``(g, frame_set)``."""
    values = hermitian_eigenvalues(frame_operator(g, frame_set), check=False)
    return summary_from_eigenvalues(values, frame_set.modulus, len(frame_set))


def diagonal_spectrum(g, f_set) -> np.ndarray:
    """Exact squared singular values for the product set ``F x Z_M``.

    For such sets the frame operator is diagonal with entries
    ``M * sum_{k in F} |g(m - k)|^2``; the returned vector is indexed by
    ``m`` (diagonal order, not sorted).  The system is a frame exactly when
    every entry is nonzero.
    """
    vec = as_mod_vector(g)
    m = vec.size
    f = np.unique(np.mod(np.asarray(list(f_set), dtype=np.int64), m))
    if f.size == 0:
        raise ValidationError("F must be nonempty")
    power = np.abs(vec) ** 2
    out = np.zeros(m)
    for k in f:
        out += np.roll(power, k)
    return m * out


def analysis_coefficients(g, frame_set: FrameSet, signal) -> np.ndarray:
    """Frame coefficients ``Phi^* x`` in the frame set's column order."""
    x = as_mod_vector(signal)
    phi = synthesis_matrix(g, frame_set)
    if x.size != phi.shape[0]:
        raise ValidationError("signal modulus does not match the frame")
    return phi.conj().T @ x


def dual_reconstruct(g, frame_set: FrameSet, coefficients) -> np.ndarray:
    """Reconstruct a signal from frame coefficients via the standard dual.

    Computes ``(Phi Phi^*)^{-1} Phi c`` through the eigendecomposition of
    the frame operator (the inverse is never formed).  With noiseless
    coefficients ``c = Phi^* x`` this returns ``x``; with noise ``delta``
    the error is at most ``||delta|| / sigma_min``.
    """
    c = np.asarray(coefficients, dtype=np.complex128)
    if c.ndim != 1 or c.size != len(frame_set):
        raise ValidationError(
            f"coefficient vector must have length {len(frame_set)}, got {c.size}"
        )
    phi = synthesis_matrix(g, frame_set)
    op = phi @ phi.conj().T
    values, vectors = np.linalg.eigh((op + op.conj().T) / 2)
    if values[0] <= rank_threshold(frame_set.modulus, float(values[-1])):
        raise NotAFrameError(
            "frame operator is rank-deficient: the system does not span C^M"
        )
    projected = vectors.conj().T @ (phi @ c)
    return vectors @ (projected / values)

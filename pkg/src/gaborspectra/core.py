"""Arithmetic of Z_M-indexed complex vectors and Gabor system assembly.

Vectors are plain 1-D complex arrays of length M; all index arithmetic is
cyclic (done mod M), so negative shift amounts are accepted and wrapped.
The time-frequency shift ``pi(k, ell)`` is modulation-after-translation,
and every operation here is unitary on C^M.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import ModulusMismatchError, ValidationError
from .framesets import FrameSet


def as_mod_vector(x) -> np.ndarray:
    """Validate and return ``x`` as a finite 1-D complex128 vector."""
    vec = np.asarray(x, dtype=np.complex128)
    if vec.ndim != 1 or vec.size == 0:
        raise ValidationError("expected a nonempty 1-D complex vector")
    if not np.all(np.isfinite(vec.view(np.float64))):
        raise ValidationError("vector entries must be finite")
    return vec


def translate(x, shift: int) -> np.ndarray:
    """Cyclic translation: ``result[m] = x[(m - shift) mod M]``."""
    vec = as_mod_vector(x)
    return np.roll(vec, shift % vec.size)


def modulate(x, freq: int) -> np.ndarray:
    """Pointwise multiplication with the harmonic ``exp(2*pi*i*freq*m/M)``."""
    vec = as_mod_vector(x)
    m = np.arange(vec.size)
    return np.exp(2j * np.pi * ((freq % vec.size) * m % vec.size) / vec.size) * vec


def tf_shift(x, index: tuple[int, int]) -> np.ndarray:
    """Time-frequency shift ``pi(k, ell) = M_ell T_k`` applied to ``x``."""
    k, ell = index
    return modulate(translate(x, k), ell)


@lru_cache(maxsize=16)
def _dft_matrix(modulus: int) -> np.ndarray:
    m = np.arange(modulus)
    w = np.exp(-2j * np.pi * np.outer(m, m) / modulus) / np.sqrt(modulus)
    w.setflags(write=False)
    return w


def dft(x) -> np.ndarray:
    """Normalized discrete Fourier transform (unitary).

    ``result[k] = (1/sqrt(M)) * sum_m exp(-2*pi*i*k*m/M) * x[m]``, computed
    as a direct O(M^2) matrix product.
    """
    vec = as_mod_vector(x)
    return _dft_matrix(vec.size) @ vec


def _check_pair(g, frame_set: FrameSet) -> np.ndarray:
    vec = as_mod_vector(g)
    if vec.size != frame_set.modulus:
        raise ModulusMismatchError(
            f"window has modulus {vec.size}, frame set has {frame_set.modulus}"
        )
    if len(frame_set) == 0:
        raise ValidationError("frame set must be nonempty")
    return vec


def synthesis_matrix(g, frame_set: FrameSet) -> np.ndarray:
    """Synthesis matrix with the shifted windows as columns.

    Column ``c`` is ``pi(k_c, ell_c) g`` in the frame set's order; the
    result has shape ``(M, len(frame_set))``.
    """
    vec = _check_pair(g, frame_set)
    m = vec.size
    rows = np.arange(m)
    gather = (rows[:, None] - frame_set.k[None, :]) % m
    phases = np.exp(2j * np.pi * (rows[:, None] * frame_set.ell[None, :] % m) / m)
    return phases * vec[gather]


def frame_operator(g, frame_set: FrameSet) -> np.ndarray:
    """Frame operator ``Phi Phi^*``: Hermitian PSD, shape ``(M, M)``.

    Its trace equals ``len(frame_set) * ||g||^2`` because time-frequency
    shifts preserve norms.  The result is symmetrized so the Hermitian
    property holds entrywise, not just up to rounding.
    """
    phi = synthesis_matrix(g, frame_set)
    op = phi @ phi.conj().T
    return (op + op.conj().T) / 2

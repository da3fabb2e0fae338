"""Seeded sampling of random Gabor windows and i.i.d. baseline matrices.

All randomness flows through :class:`RngStream`, a counter-based (Philox)
generator keyed by ``(seed, substream)``.  Monte Carlo trials address
disjoint substreams, so independent tasks can run in any order, on any
number of workers, and still produce bit-identical results.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ModulusMismatchError, ValidationError

_MASK64 = (1 << 64) - 1


def parse_seed(text: str) -> int:
    """Parse a seed given as decimal or 0x-prefixed hex string."""
    try:
        value = int(str(text).strip(), 0)
    except ValueError as exc:
        raise ValidationError(f"invalid seed {text!r}: expected decimal or 0x-hex") from exc
    if value < 0:
        raise ValidationError(f"seed must be nonnegative, got {value}")
    return value


@dataclass(frozen=True)
class RngStream:
    """A reproducible random stream keyed by ``(seed, substream)``.

    The same key yields the identical byte stream on every platform;
    distinct substreams of one seed are statistically independent.
    """

    seed: int
    substream: int = 0

    def __post_init__(self):
        if self.seed < 0 or self.substream < 0:
            raise ValidationError("seed and substream must be nonnegative")

    def with_substream(self, substream: int) -> "RngStream":
        return RngStream(self.seed, substream)

    def generator(self) -> np.random.Generator:
        """Fresh generator positioned at the start of this stream."""
        key = np.array([self.seed & _MASK64, self.substream & _MASK64], dtype=np.uint64)
        return np.random.Generator(np.random.Philox(key=key))


_KINDS = ("steinhaus", "complex_gaussian", "uniform_sphere", "fixed")


@dataclass(frozen=True)
class WindowKind:
    """Tag for one of the supported window ensembles.

    ``fixed`` carries an explicit vector; the other kinds are sampled:

    - ``steinhaus``: entries ``exp(2*pi*i*y_m)/sqrt(M)`` with ``y_m`` uniform,
      so every entry has modulus exactly ``1/sqrt(M)``;
    - ``complex_gaussian``: i.i.d. complex normal entries with variance
      ``1/M`` (real and imaginary parts independent, variance ``1/(2M)``);
    - ``uniform_sphere``: a complex Gaussian draw normalized to unit norm.
    """

    kind: str
    vector: np.ndarray | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValidationError(f"unknown window kind {self.kind!r}; expected one of {_KINDS}")
        if self.kind == "fixed":
            if self.vector is None:
                raise ValidationError("fixed window kind requires a vector")
            vec = np.asarray(self.vector, dtype=np.complex128)
            if vec.ndim != 1 or vec.size == 0:
                raise ValidationError("fixed window vector must be a nonempty 1-D array")
            if not np.all(np.isfinite(vec.view(np.float64))):
                raise ValidationError("fixed window vector must be finite")
            object.__setattr__(self, "vector", vec)
        elif self.vector is not None:
            raise ValidationError(f"window kind {self.kind!r} does not take a vector")

    @staticmethod
    def parse(name: str) -> "WindowKind":
        key = name.strip().lower().replace("-", "_")
        if key == "gaussian":
            key = "complex_gaussian"
        if key == "sphere":
            key = "uniform_sphere"
        return WindowKind(key)


STEINHAUS = WindowKind("steinhaus")
COMPLEX_GAUSSIAN = WindowKind("complex_gaussian")
UNIFORM_SPHERE = WindowKind("uniform_sphere")


def fixed_window(vector: np.ndarray) -> WindowKind:
    return WindowKind("fixed", np.asarray(vector, dtype=np.complex128))


def sample_windows(kind: WindowKind, modulus: int, rng: RngStream, count: int) -> np.ndarray:
    """Draw ``count`` windows as a ``(count, modulus)`` complex array.

    Draws are consumed sequentially from ``rng``; one call drawing ``n``
    windows equals ``n`` successive single draws from the same stream.
    """
    if modulus < 1:
        raise ValidationError(f"modulus must be >= 1, got {modulus}")
    if count < 1:
        raise ValidationError(f"count must be >= 1, got {count}")
    if kind.kind == "fixed":
        if kind.vector.shape[0] != modulus:
            raise ModulusMismatchError(
                f"fixed window has modulus {kind.vector.shape[0]}, requested {modulus}"
            )
        return np.broadcast_to(kind.vector, (count, modulus)).copy()

    gen = rng.generator()
    if kind.kind == "steinhaus":
        phases = gen.random((count, modulus))
        return np.exp(2j * np.pi * phases) / np.sqrt(modulus)
    # complex Gaussian, variance 1/M per entry: re/im parts N(0, 1/(2M))
    parts = gen.standard_normal((count, 2 * modulus))
    g = (parts[:, :modulus] + 1j * parts[:, modulus:]) / np.sqrt(2 * modulus)
    if kind.kind == "uniform_sphere":
        g /= np.linalg.norm(g, axis=1, keepdims=True)
    return g


def sample_window(kind: WindowKind, modulus: int, rng: RngStream) -> np.ndarray:
    """Draw a single window of length ``modulus`` from the given ensemble."""
    return sample_windows(kind, modulus, rng, 1)[0]


def iid_gaussian_matrix(n_rows: int, modulus: int, rng: RngStream) -> np.ndarray:
    """i.i.d. complex Gaussian analysis matrix, shape ``(n_rows, modulus)``.

    Entries are complex normal with variance ``1/modulus``, the baseline
    ensemble for comparing against time-frequency structured matrices.
    """
    if modulus < 1:
        raise ValidationError(f"modulus must be >= 1, got {modulus}")
    if n_rows < modulus:
        raise ValidationError(f"need n_rows >= modulus, got {n_rows} < {modulus}")
    gen = rng.generator()
    parts = gen.standard_normal((n_rows, 2 * modulus))
    return (parts[:, :modulus] + 1j * parts[:, modulus:]) / np.sqrt(2 * modulus)

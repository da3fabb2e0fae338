"""Frame index sets: subsets of the time-frequency grid Z_M x Z_M.

A :class:`FrameSet` is an ordered, duplicate-free list of ``(k, ell)``
pairs together with its modulus.  Constructors cover the full grid,
products ``F x L``, Bernoulli-sampled random grids, and explicit lists;
``fibers`` groups a set by its translation index, and ``fourier_bias``
measures the pseudorandomness of a subset of Z_M through its maximal
nontrivial exponential sum.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field

import numpy as np

from .errors import ValidationError
from .windows import RngStream


@dataclass(frozen=True)
class FrameSet:
    """Ordered set of distinct time-frequency indices in ``[0, M) x [0, M)``.

    The order is the construction order and is stable: it fixes the column
    order of every synthesis matrix built from this set.
    """

    modulus: int
    indices: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.modulus < 1:
            raise ValidationError(f"modulus must be >= 1, got {self.modulus}")
        idx = np.asarray(self.indices, dtype=np.int64)
        if idx.size == 0:
            idx = idx.reshape(0, 2)
        if idx.ndim != 2 or idx.shape[1] != 2:
            raise ValidationError("indices must be an (n, 2) integer array")
        idx = np.mod(idx, self.modulus)
        flat = idx[:, 0] * self.modulus + idx[:, 1]
        if np.unique(flat).size != flat.size:
            raise ValidationError("duplicate (k, ell) indices in frame set")
        idx.setflags(write=False)
        object.__setattr__(self, "indices", idx)

    def __len__(self) -> int:
        return self.indices.shape[0]

    @property
    def k(self) -> np.ndarray:
        """Translation indices, in construction order."""
        return self.indices[:, 0]

    @property
    def ell(self) -> np.ndarray:
        """Modulation indices, in construction order."""
        return self.indices[:, 1]

    def subset(self, positions) -> "FrameSet":
        """Sub-frame-set keeping the given column positions (order preserved)."""
        pos = np.asarray(positions, dtype=np.int64)
        return FrameSet(self.modulus, self.indices[pos])

    def pairs(self) -> list[tuple[int, int]]:
        return [(int(k), int(l)) for k, l in self.indices]

    def save_csv(self, path) -> None:
        """Write the set as CSV with header ``k,ell``, one index per row."""
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["k", "ell"])
            for k, l in self.indices:
                writer.writerow([int(k), int(l)])

    @staticmethod
    def load_csv(path, modulus: int) -> "FrameSet":
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if header is None or [h.strip() for h in header[:2]] != ["k", "ell"]:
                raise ValidationError(f"{path}: expected CSV header 'k,ell'")
            rows = [(int(row[0]), int(row[1])) for row in reader if row]
        return explicit_set(rows, modulus)


def full_grid(modulus: int) -> FrameSet:
    """The complete grid Z_M x Z_M, in lexicographic ``(k, ell)`` order."""
    ks, ls = np.divmod(np.arange(modulus * modulus, dtype=np.int64), modulus)
    return FrameSet(modulus, np.column_stack([ks, ls]))


def product_set(f_set, l_set, modulus: int) -> FrameSet:
    """Product set ``F x L`` in lexicographic order.

    Both factors are reduced mod M, deduplicated and sorted; empty factors
    are rejected because they would produce an empty system.
    """
    f = np.unique(np.mod(np.asarray(list(f_set), dtype=np.int64), modulus))
    l = np.unique(np.mod(np.asarray(list(l_set), dtype=np.int64), modulus))
    if f.size == 0 or l.size == 0:
        raise ValidationError("product frame set requires nonempty factors")
    ks = np.repeat(f, l.size)
    ls = np.tile(l, f.size)
    return FrameSet(modulus, np.column_stack([ks, ls]))


def bernoulli_grid(modulus: int, tau: float, rng: RngStream) -> FrameSet:
    """Random set including each grid cell independently with probability tau.

    Cells are scanned in lexicographic order, so the construction order is
    deterministic given the stream.  The result may be empty.
    """
    if not 0.0 < tau < 1.0:
        raise ValidationError(f"tau must lie in (0, 1), got {tau}")
    gen = rng.generator()
    mask = gen.random((modulus, modulus)) < tau
    return FrameSet(modulus, np.argwhere(mask).astype(np.int64))


def explicit_set(pairs, modulus: int) -> FrameSet:
    """Frame set from an explicit list of ``(k, ell)`` pairs, order preserved.

    Indices are wrapped mod M; duplicates (after wrapping) are rejected
    rather than collapsed, since they would silently change every
    cardinality-dependent quantity downstream.
    """
    arr = np.asarray(list(pairs), dtype=np.int64)
    if arr.size == 0:
        raise ValidationError("explicit frame set must not be empty")
    return FrameSet(modulus, arr.reshape(-1, 2))


def fibers(frame_set: FrameSet) -> dict[int, np.ndarray]:
    """Group a frame set by translation index.

    Returns ``{k: sorted array of ell with (k, ell) in the set}`` for every
    ``k`` in Z_M (empty fibers included).  Fiber sizes always sum to the
    set's cardinality.
    """
    m = frame_set.modulus
    out = {k: [] for k in range(m)}
    for k, l in frame_set.indices:
        out[int(k)].append(int(l))
    return {k: np.array(sorted(v), dtype=np.int64) for k, v in out.items()}


def fiber_sizes(frame_set: FrameSet) -> np.ndarray:
    """Sizes of all M fibers as an integer vector indexed by k."""
    sizes = np.zeros(frame_set.modulus, dtype=np.int64)
    np.add.at(sizes, frame_set.k, 1)
    return sizes


def fourier_bias(subset, modulus: int) -> float:
    """Maximal nontrivial exponential sum of a subset of Z_M.

    Returns ``max over m != 0 of |sum_{c in subset} exp(2*pi*i*c*m/M)|``
    (unnormalized convention).  The value is 0 for the full ring, at most
    ``|subset|`` always, and small exactly for pseudorandom subsets.
    """
    if modulus < 2:
        raise ValidationError(f"fourier_bias requires modulus >= 2, got {modulus}")
    c = np.mod(np.asarray(list(subset), dtype=np.int64), modulus)
    if c.size == 0:
        return 0.0
    if np.unique(c).size != c.size:
        raise ValidationError("fourier_bias expects a duplicate-free subset")
    indicator = np.zeros(modulus)
    indicator[c] = 1.0
    spectrum = np.abs(np.fft.fft(indicator))
    return float(spectrum[1:].max())

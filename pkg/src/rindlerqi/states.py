"""Containers for multi-mode occupation states.

Every mode is a two-level system (occupation 0 or 1). A ``ModeLayout`` fixes
the tensor ordering once and for all: the leftmost mode label is the most
significant bit of the basis index, matching the left-to-right order inside
a ket like |0100>.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np


@dataclass(frozen=True)
class ModeLayout:
    """Ordered collection of two-level mode labels.

    The basis index <-> occupation mapping is a bijection: index
    ``i`` has mode ``k`` occupied iff bit ``n-1-k`` of ``i`` is set,
    where ``n`` is the number of modes (leftmost label = most
    significant bit).
    """

    modes: tuple[str, ...]

    def __post_init__(self):
        if not self.modes:
            raise ValueError("layout needs at least one mode")
        if len(set(self.modes)) != len(self.modes):
            raise ValueError(f"duplicate mode labels in {self.modes}")

    @property
    def dim(self) -> int:
        return 1 << len(self.modes)

    def axis(self, label: str) -> int:
        """Tensor axis of a mode label."""
        try:
            return self.modes.index(label)
        except ValueError:
            raise ValueError(f"unknown mode label {label!r}; layout has {self.modes}") from None

    def axes(self, labels: Iterable[str]) -> list[int]:
        """Tensor axes of a set of labels, in layout order."""
        wanted = {label: self.axis(label) for label in labels}
        return sorted(wanted.values())

    def index_of(self, bits: str | Sequence[int]) -> int:
        """Basis index of an occupation pattern, e.g. ``"0100"`` or ``(0,1,0,0)``."""
        if len(bits) != len(self.modes):
            raise ValueError(f"expected {len(self.modes)} occupation bits, got {len(bits)}")
        index = 0
        for b in bits:
            b = int(b)
            if b not in (0, 1):
                raise ValueError(f"occupation bits must be 0 or 1, got {b}")
            index = (index << 1) | b
        return index

    def bits_of(self, index: int) -> tuple[int, ...]:
        """Occupation pattern of a basis index."""
        n = len(self.modes)
        if not 0 <= index < self.dim:
            raise ValueError(f"basis index {index} out of range for dim {self.dim}")
        return tuple((index >> (n - 1 - k)) & 1 for k in range(n))


@dataclass(frozen=True)
class Ket:
    """Sparse pure state: nonzero complex amplitudes keyed by basis index.

    Treated as immutable; operations return new instances.
    """

    layout: ModeLayout
    amplitudes: dict[int, complex] = field(default_factory=dict)

    @classmethod
    def from_terms(cls, layout: ModeLayout, terms: Mapping[str | Sequence[int], complex]) -> "Ket":
        """Build a ket from {occupation pattern: amplitude}, summing duplicates."""
        amps: dict[int, complex] = {}
        for bits, amp in terms.items():
            idx = layout.index_of(bits)
            amps[idx] = amps.get(idx, 0j) + complex(amp)
        return cls(layout, {i: a for i, a in amps.items() if a != 0})

    @classmethod
    def from_array(cls, layout: ModeLayout, array: np.ndarray) -> "Ket":
        vec = np.asarray(array, dtype=complex).reshape(-1)
        if vec.size != layout.dim:
            raise ValueError(f"array length {vec.size} does not match layout dim {layout.dim}")
        return cls(layout, {i: complex(a) for i, a in enumerate(vec) if a != 0})

    def amplitude(self, bits: str | Sequence[int]) -> complex:
        return self.amplitudes.get(self.layout.index_of(bits), 0j)

    def to_array(self) -> np.ndarray:
        vec = np.zeros(self.layout.dim, dtype=complex)
        for idx, amp in self.amplitudes.items():
            vec[idx] = amp
        return vec

    def norm(self) -> float:
        return float(np.sqrt(sum(abs(a) ** 2 for a in self.amplitudes.values())))

    def tensor(self, other: "Ket") -> "Ket":
        """Tensor product; self's modes become the most significant bits."""
        clash = set(self.layout.modes) & set(other.layout.modes)
        if clash:
            raise ValueError(f"mode labels {sorted(clash)} appear in both factors")
        layout = ModeLayout(self.layout.modes + other.layout.modes)
        shift = len(other.layout.modes)
        amps = {
            (ia << shift) | ib: aa * ab
            for ia, aa in self.amplitudes.items()
            for ib, ab in other.amplitudes.items()
        }
        return Ket(layout, amps)


@dataclass(frozen=True)
class DensityMatrix:
    """Dense Hermitian matrix together with the mode layout of its indices."""

    layout: ModeLayout
    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (self.layout.dim, self.layout.dim):
            raise ValueError(
                f"matrix shape {m.shape} does not match layout dim {self.layout.dim}"
            )
        object.__setattr__(self, "matrix", m)

    def entry(self, row_bits: str | Sequence[int], col_bits: str | Sequence[int]) -> complex:
        return complex(self.matrix[self.layout.index_of(row_bits), self.layout.index_of(col_bits)])

    def trace(self) -> float:
        return float(np.trace(self.matrix).real)

    def hermiticity_defect(self) -> float:
        """Largest entrywise deviation from M = M^dagger."""
        return float(np.abs(self.matrix - self.matrix.conj().T).max())

"""Dense Hermitian linear algebra for small mode systems (dim <= 32).

The eigensolver is a cyclic Jacobi iteration run on the real-symmetric
embedding of the complex matrix, so the package needs no LAPACK bindings
for its core results. Everything here is a pure function; inputs are never
mutated.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .states import DensityMatrix, Ket, ModeLayout

HERMITIAN_TOL = 1e-12
MAX_MATRIX_DIM = 32

#: off-diagonal magnitude below which the Jacobi sweep is converged
JACOBI_OFF_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100


class NumericalError(RuntimeError):
    """An iterative routine failed to converge or produced an invalid value."""


def _require_hermitian(matrix: np.ndarray) -> np.ndarray:
    m = np.asarray(matrix, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] > MAX_MATRIX_DIM:
        raise ValueError(f"dimension {m.shape[0]} exceeds the supported maximum {MAX_MATRIX_DIM}")
    defect = float(np.abs(m - m.conj().T).max())
    if defect > HERMITIAN_TOL:
        raise ValueError(f"matrix is not Hermitian (defect {defect:.3e} > {HERMITIAN_TOL})")
    return m


def _jacobi_symmetric_eigenvalues(sym: np.ndarray, off_tol: float, max_sweeps: int) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations."""
    a = sym.copy()
    n = a.shape[0]
    for _ in range(max_sweeps):
        off = np.abs(a - np.diag(np.diagonal(a))).max()
        if off < off_tol:
            return np.sort(np.diagonal(a).copy())
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < off_tol:
                    continue
                # stable rotation choice: tan of the smaller angle
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if t == 0.0:  # sign(0) == 0; take the +45 degree branch
                    t = 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                ap = a[p, :].copy()
                aq = a[q, :].copy()
                rp = c * ap - s * aq
                rq = s * ap + c * aq
                rp[p] = c * c * ap[p] - 2.0 * s * c * apq + s * s * aq[q]
                rq[q] = s * s * ap[p] + 2.0 * s * c * apq + c * c * aq[q]
                rp[q] = 0.0
                rq[p] = 0.0
                a[p, :] = rp
                a[q, :] = rq
                a[:, p] = rp
                a[:, q] = rq
    raise NumericalError(
        f"Jacobi iteration did not converge within {max_sweeps} sweeps "
        f"(off-diagonal residual {np.abs(a - np.diag(np.diagonal(a))).max():.3e})"
    )


def eig_hermitian(matrix: np.ndarray) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix, ascending.

    Works on the 2n x 2n real-symmetric embedding
    ``[[Re M, -Im M], [Im M, Re M]]``, whose spectrum is the spectrum of M
    with every eigenvalue doubled; the doubled values are removed by sorting
    and keeping every other entry.

    Raises
    ------
    ValueError
        If the input is not Hermitian within ``HERMITIAN_TOL``.
    NumericalError
        If the sweep budget is exhausted before convergence.
    """
    m = _require_hermitian(matrix)
    embedding = np.block([[m.real, -m.imag], [m.imag, m.real]])
    doubled = _jacobi_symmetric_eigenvalues(embedding, JACOBI_OFF_TOL, JACOBI_MAX_SWEEPS)
    return doubled[::2]


def trace_norm(matrix: np.ndarray) -> float:
    """Sum of absolute eigenvalues of a Hermitian matrix."""
    return float(np.abs(eig_hermitian(matrix)).sum())


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix tensor product, capped at the supported dimension."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    out_dim = a.shape[0] * b.shape[0]
    if out_dim > MAX_MATRIX_DIM:
        raise ValueError(f"tensor product dimension {out_dim} exceeds {MAX_MATRIX_DIM}")
    return np.kron(a, b)


def kron_ket(a: Ket, b: Ket) -> Ket:
    """Ket tensor product; alias for :meth:`Ket.tensor`."""
    return a.tensor(b)


def partial_transpose(rho: DensityMatrix, subsystem: Iterable[str]) -> DensityMatrix:
    """Transpose the indices of the named modes only.

    Involutive, trace preserving, and Hermiticity preserving. The result is
    returned with the unchanged layout.
    """
    labels = list(subsystem)
    n = len(rho.layout.modes)
    axes = [rho.layout.axis(label) for label in labels]
    perm = list(range(2 * n))
    for k in axes:
        perm[k], perm[n + k] = perm[n + k], perm[k]
    tensor = rho.matrix.reshape([2] * (2 * n))
    out = np.transpose(tensor, perm).reshape(rho.layout.dim, rho.layout.dim)
    return DensityMatrix(rho.layout, out)


def partial_trace(state: Ket | DensityMatrix, keep: Iterable[str]) -> DensityMatrix:
    """Reduced density matrix over the kept modes (in their original order).

    Accepts a pure state or a density matrix; the trace of the input is
    preserved (norm squared for a ket).
    """
    keep_set = set(keep)
    if not keep_set:
        raise ValueError("keep set must not be empty")
    layout = state.layout
    for label in keep_set:
        layout.axis(label)  # raises on unknown labels
    keep_labels = tuple(m for m in layout.modes if m in keep_set)
    keep_axes = [layout.axis(m) for m in keep_labels]
    traced_axes = [i for i in range(len(layout.modes)) if i not in keep_axes]
    kdim = 1 << len(keep_axes)

    if isinstance(state, Ket):
        psi = state.to_array().reshape([2] * len(layout.modes))
        psi = np.transpose(psi, keep_axes + traced_axes).reshape(kdim, -1)
        reduced = psi @ psi.conj().T
    else:
        n = len(layout.modes)
        perm = keep_axes + traced_axes
        tensor = state.matrix.reshape([2] * (2 * n))
        tensor = np.transpose(tensor, perm + [n + i for i in perm])
        tdim = 1 << len(traced_axes)
        tensor = tensor.reshape(kdim, tdim, kdim, tdim)
        reduced = np.trace(tensor, axis1=1, axis2=3)

    return DensityMatrix(ModeLayout(keep_labels), reduced)

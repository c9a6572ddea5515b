"""Dense complex linear-algebra kernels.

Everything downstream works on plain numpy complex matrices.  The helpers
here pin down the numerical conventions the weighted operator calculus
relies on: symmetrization before Hermitian eigensolves, eigenvalue
clamping for positive-semidefinite functional calculus, singular-value
truncation for pseudoinverses, and a certified sweep for the classical
numerical radius.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

#: Default cap on matrix dimension; guards against accidentally huge inputs.
DIM_CAP = 512

#: Relative Frobenius tolerance for "is Hermitian" checks.
HERMITIAN_RTOL = 1e-8

#: Eigenvalues of a nominally PSD matrix may undershoot zero by this
#: relative amount before the input is rejected.
PSD_CLAMP_RTOL = 1e-9

_GRID_MIN = 64
_GRID_CAP = 256
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


class DomainError(Exception):
    """An input lies outside the operation's domain."""


class NonSquare(DomainError):
    """Operation requires a square matrix."""


class NotHermitian(DomainError):
    """Matrix deviates from its conjugate transpose beyond tolerance."""


class NotPSD(DomainError):
    """Matrix has an eigenvalue below the PSD clamp threshold."""


class DimensionMismatch(DomainError):
    """Operands have incompatible shapes."""


class ConvergenceFailure(Exception):
    """An iterative kernel failed to converge."""


def as_matrix(m, *, square: bool = False, max_dim: int = DIM_CAP) -> np.ndarray:
    """Validate and return ``m`` as a C-contiguous complex128 matrix.

    Rejects non-2-D input, non-finite entries, and dimensions beyond
    ``max_dim``.
    """
    out = np.ascontiguousarray(np.asarray(m, dtype=np.complex128))
    if out.ndim != 2:
        raise DimensionMismatch(f"expected a 2-D array, got ndim={out.ndim}")
    rows, cols = out.shape
    if rows == 0 or cols == 0:
        raise DimensionMismatch("matrix must be non-empty")
    if max(rows, cols) > max_dim:
        raise DimensionMismatch(f"dimension {max(rows, cols)} exceeds cap {max_dim}")
    if square and rows != cols:
        raise NonSquare(f"expected a square matrix, got {rows}x{cols}")
    if not np.all(np.isfinite(out)):
        raise DomainError("matrix contains non-finite entries")
    return out


def as_vector(x, *, dim: int | None = None) -> np.ndarray:
    """Validate ``x`` as a flat complex vector (accepts n, nx1 and 1xn)."""
    out = np.asarray(x, dtype=np.complex128)
    if out.ndim == 2 and 1 in out.shape:
        out = out.reshape(-1)
    if out.ndim != 1:
        raise DimensionMismatch(f"expected a vector, got shape {np.shape(x)}")
    if dim is not None and out.shape[0] != dim:
        raise DimensionMismatch(f"expected length {dim}, got {out.shape[0]}")
    if not np.all(np.isfinite(out)):
        raise DomainError("vector contains non-finite entries")
    return np.ascontiguousarray(out)


@dataclass(frozen=True)
class Spectrum:
    """Eigendecomposition of a Hermitian matrix.

    ``eigenvalues`` are real and ascending; ``eigenvectors`` holds the
    matching orthonormal eigenvectors as columns.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def hermitian_defect(m: np.ndarray) -> float:
    """Frobenius distance of ``m`` from its conjugate transpose."""
    return float(np.linalg.norm(m - m.conj().T))


def hermitian_eig(m) -> Spectrum:
    """Eigendecomposition of a Hermitian matrix.

    The input must be Hermitian to relative tolerance
    ``HERMITIAN_RTOL``; it is symmetrized before the solve so downstream
    reconstruction identities hold to rounding.
    """
    mat = as_matrix(m, square=True)
    fro = float(np.linalg.norm(mat))
    if hermitian_defect(mat) > HERMITIAN_RTOL * (1.0 + fro):
        raise NotHermitian("matrix is not Hermitian within tolerance")
    sym = 0.5 * (mat + mat.conj().T)
    try:
        vals, vecs = np.linalg.eigh(sym)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(f"eigensolve failed: {exc}") from exc
    return Spectrum(eigenvalues=vals, eigenvectors=vecs)


def pinv(m, rank_tol: float = 1e-10) -> np.ndarray:
    """Moore-Penrose pseudoinverse via SVD truncation.

    Singular values at or below ``rank_tol`` times the largest one are
    treated as exact zeros.
    """
    if rank_tol <= 0.0:
        raise ValueError("rank_tol must be positive")
    mat = as_matrix(m)
    u, s, vh = np.linalg.svd(mat, full_matrices=False)
    if s.size == 0 or s[0] == 0.0:
        return np.zeros((mat.shape[1], mat.shape[0]), dtype=np.complex128)
    keep = s > rank_tol * s[0]
    if not np.any(keep):
        return np.zeros((mat.shape[1], mat.shape[0]), dtype=np.complex128)
    inv = np.zeros_like(s)
    inv[keep] = 1.0 / s[keep]
    return (vh.conj().T * inv) @ u.conj().T


def _clamped_psd_eig(m) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a PSD matrix with negatives clamped to zero.

    Eigenvalues below ``-PSD_CLAMP_RTOL`` times the spectral radius are a
    domain error; small negatives from rounding are clamped.
    """
    spec = hermitian_eig(m)
    vals = spec.eigenvalues
    top = float(np.max(np.abs(vals))) if vals.size else 0.0
    if float(vals[0]) < -PSD_CLAMP_RTOL * top:
        raise NotPSD(f"eigenvalue {vals[0]:.3e} below PSD clamp threshold")
    return np.clip(vals, 0.0, None), spec.eigenvectors


def psd_sqrt(m) -> np.ndarray:
    """Principal square root of a positive-semidefinite matrix."""
    vals, vecs = _clamped_psd_eig(m)
    return (vecs * np.sqrt(vals)) @ vecs.conj().T


def psd_power(m, p: float) -> np.ndarray:
    """Spectral power ``m**p`` of a PSD matrix, ``p >= 0``.

    Zero eigenvalues map to zero for every ``p`` including ``p == 0``, so
    ``m**0`` is the orthogonal projection onto the range of ``m``.
    """
    if p < 0.0:
        raise ValueError("power must be nonnegative")
    vals, vecs = _clamped_psd_eig(m)
    powered = np.where(vals > 0.0, np.power(vals, p, where=vals > 0.0), 0.0)
    return (vecs * powered) @ vecs.conj().T


def spectral_norm(m) -> float:
    """Largest singular value."""
    return float(np.linalg.norm(as_matrix(m), 2))


def _top_hermitian_part(m: np.ndarray, theta: float) -> float:
    """Largest eigenvalue of the Hermitian part of ``exp(i*theta) * m``."""
    phase = complex(math.cos(theta), math.sin(theta))
    h = 0.5 * (phase * m + np.conj(phase) * m.conj().T)
    return float(np.linalg.eigvalsh(h)[-1])


def _golden_max(f, lo: float, hi: float, iters: int = 44) -> float:
    """Golden-section maximization of a unimodal ``f`` on ``[lo, hi]``."""
    a, b = lo, hi
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    best = max(fc, fd)
    for _ in range(iters):
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
        best = max(best, fc, fd)
    return best


def classical_numerical_radius(m, tol: float = 1e-8) -> float:
    """Numerical radius ``max |x* M x|`` over unit vectors ``x``.

    Sweeps the largest eigenvalue of the Hermitian part of
    ``exp(i*theta) * M`` over a uniform theta grid and refines each
    surviving local maximum by golden section.  The grid is sized from
    the Lipschitz constant ``||M||_2`` against ``tol`` and capped at
    ``_GRID_CAP`` points; Hermitian and normal inputs short-circuit to
    exact eigenvalue computations.
    """
    mat = as_matrix(m, square=True)
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    nrm = spectral_norm(mat)
    if nrm == 0.0:
        return 0.0
    fro = float(np.linalg.norm(mat))
    adj = mat.conj().T
    if float(np.linalg.norm(mat - adj)) <= 1e-12 * (1.0 + fro):
        sym = 0.5 * (mat + adj)
        return float(np.max(np.abs(np.linalg.eigvalsh(sym))))
    commutator = mat @ adj - adj @ mat
    if float(np.linalg.norm(commutator)) <= 1e-12 * (1.0 + fro * fro):
        return float(np.max(np.abs(np.linalg.eigvals(mat))))

    k = int(min(max(_GRID_MIN, math.ceil(2.0 * math.pi * nrm / tol)), _GRID_CAP))
    thetas = np.arange(k) * (2.0 * math.pi / k)
    phases = np.exp(1j * thetas)
    stack = 0.5 * (phases[:, None, None] * mat + np.conj(phases)[:, None, None] * adj)
    try:
        vals = np.linalg.eigvalsh(stack)[:, -1]
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(f"grid eigensolve failed: {exc}") from exc
    delta = 2.0 * math.pi / k
    local = (vals >= np.roll(vals, 1)) & (vals >= np.roll(vals, -1))
    candidates = np.where(local)[0]
    order = np.argsort(vals[candidates])[::-1]
    candidates = candidates[order]

    best = float(np.max(vals))
    slack = nrm * delta
    for idx in candidates:
        if vals[idx] + slack < best:
            break
        lo = thetas[idx] - delta
        hi = thetas[idx] + delta
        best = max(best, _golden_max(lambda t: _top_hermitian_part(mat, t), lo, hi))
    return best

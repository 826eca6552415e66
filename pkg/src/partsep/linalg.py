"""Small dense complex linear algebra.

Matrices are plain ``complex128`` numpy arrays. The eigensolver is a cyclic
Jacobi iteration with complex Givens rotations; it is meant for the tiny
Hermitian matrices this package deals with (4x4 partial transposes, and
density matrices up to a few hundred rows), not for general use.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DimensionMismatch, NotHermitian

JACOBI_MAX_SWEEPS = 100
JACOBI_REL_TOL = 1e-12


def as_matrix(a) -> np.ndarray:
    """Coerce to a square, finite complex128 array (always a fresh copy)."""
    m = np.array(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise DimensionMismatch(f"expected a non-empty square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product; entry ``[i*db + k, j*db + l] = a[i, j] * b[k, l]``."""
    return np.kron(np.asarray(a, dtype=np.complex128), np.asarray(b, dtype=np.complex128))


def dagger(a: np.ndarray) -> np.ndarray:
    return np.conj(np.asarray(a)).T


def is_hermitian(a: np.ndarray, tol: float = 1e-12) -> bool:
    if tol < 0:
        raise ValueError("tol must be non-negative")
    a = np.asarray(a)
    return bool(np.max(np.abs(a - dagger(a)), initial=0.0) <= tol)


def _rotation(app: float, aqq: float, apq: complex) -> tuple[float, float, complex, float]:
    """Return ``(c, s, phase, t)`` for the rotation that annihilates ``apq``.

    With ``apq = |apq| * phase`` the 2x2 block factors as
    ``D [[app, |apq|], [|apq|, aqq]] D^H``, ``D = diag(1, conj(phase))``, so the
    real symmetric Jacobi angle applies unchanged.
    """
    mag = abs(apq)
    phase = apq / mag
    theta = (aqq - app) / (2.0 * mag)
    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
    if theta < 0.0:
        t = -t
    c = 1.0 / math.sqrt(t * t + 1.0)
    return c, t * c, phase, t


def jacobi_eigh(a: np.ndarray, tol: float = 1e-10) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of a Hermitian matrix by cyclic Jacobi sweeps.

    Returns ``(w, v)`` with ``w`` ascending and the columns of ``v`` the
    matching orthonormal eigenvectors, so ``a @ v ~= v * w``.

    Raises :class:`NotHermitian` if ``max|a - a^H| > tol``.
    """
    a = as_matrix(a)
    if not is_hermitian(a, tol):
        raise NotHermitian(
            f"matrix is not Hermitian within {tol!r} "
            f"(max deviation {float(np.max(np.abs(a - dagger(a)))):.3e})"
        )
    a = 0.5 * (a + dagger(a))
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)

    norm = float(np.linalg.norm(a))
    threshold = JACOBI_REL_TOL * norm
    iu, ju = np.triu_indices(n, k=1)

    for _ in range(JACOBI_MAX_SWEEPS):
        off = math.sqrt(2.0 * float(np.sum(np.abs(a[iu, ju]) ** 2)))
        if off <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0:
                    continue
                app, aqq = a[p, p].real, a[q, q].real
                c, s, phase, t = _rotation(app, aqq, apq)
                rot = np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]])
                cols = [p, q]
                a[:, cols] = a[:, cols] @ rot
                a[cols, :] = dagger(rot) @ a[cols, :]
                v[:, cols] = v[:, cols] @ rot
                # closed forms keep the pivot block exact
                mag = abs(apq)
                a[p, p] = app - t * mag
                a[q, q] = aqq + t * mag
                a[p, q] = 0.0
                a[q, p] = 0.0

    w = np.real(np.diag(a)).copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def hermitian_eigenvalues(a: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    """Ascending eigenvalues of a Hermitian matrix (see :func:`jacobi_eigh`)."""
    return jacobi_eigh(a, tol)[0]

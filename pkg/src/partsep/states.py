"""Density matrices, pure states and named state builders.

Basis convention: qubit 1 is the most significant bit of a row/column index,
so for three qubits ABC the index of ``|a b c>`` is ``4a + 2b + c``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    CountMismatch,
    NOutOfRange,
    NotHermitian,
    NotNormalized,
    NotPositive,
    NotPowerOfTwoDim,
    NTooSmall,
    TraceNotOne,
    UnsupportedLayout,
    WeightsInvalid,
    XOutOfRange,
)
from .linalg import as_matrix, dagger, hermitian_eigenvalues, is_hermitian
from .partition import Partition

DEFAULT_TOL = 1e-10


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=np.complex128)
    a.setflags(write=False)
    return a


def num_qubits_for_dim(dim: int) -> int:
    n = dim.bit_length() - 1
    if dim < 2 or (1 << n) != dim:
        raise NotPowerOfTwoDim(f"dimension {dim} is not 2**N with N >= 1")
    return n


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """An N-qubit density matrix. Build through :func:`validate_density`."""

    num_qubits: int
    mat: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "mat", _frozen(self.mat))
        if self.mat.shape != (2 ** self.num_qubits,) * 2:
            raise NotPowerOfTwoDim(f"shape {self.mat.shape} does not match {self.num_qubits} qubits")

    @property
    def dim(self) -> int:
        return self.mat.shape[0]


@dataclass(frozen=True, eq=False)
class PureState:
    num_qubits: int
    amp: np.ndarray

    def __post_init__(self):
        amp = np.array(self.amp, dtype=np.complex128).ravel()
        amp.setflags(write=False)
        object.__setattr__(self, "amp", amp)
        if amp.shape != (2 ** self.num_qubits,):
            raise NotPowerOfTwoDim(f"{amp.size} amplitudes do not match {self.num_qubits} qubits")
        norm = float(np.sum(np.abs(amp) ** 2))
        if abs(norm - 1.0) > DEFAULT_TOL:
            raise NotNormalized(f"squared norm is {norm!r}")

    @classmethod
    def from_amplitudes(cls, amp) -> "PureState":
        amp = np.asarray(amp, dtype=np.complex128).ravel()
        return cls(num_qubits_for_dim(amp.size), amp)


def validate_density(m, tol: float = DEFAULT_TOL) -> DensityMatrix:
    """Check ``m`` is Hermitian, unit-trace and PSD, and wrap it.

    The eigenvalue floor is ``-10 * tol``.
    """
    m = as_matrix(m)
    n = num_qubits_for_dim(m.shape[0])
    if not is_hermitian(m, tol):
        raise NotHermitian(f"matrix deviates from Hermitian by more than {tol!r}")
    tr = complex(np.trace(m))
    if abs(tr - 1.0) > tol:
        raise TraceNotOne(tr.real if tr.imag == 0 else tr)
    lo = float(hermitian_eigenvalues(m, tol)[0])
    if lo < -10 * tol:
        raise NotPositive(lo)
    return DensityMatrix(n, m)


def pure_to_density(psi: PureState) -> DensityMatrix:
    return DensityMatrix(psi.num_qubits, np.outer(psi.amp, np.conj(psi.amp)))


def projector(amp) -> DensityMatrix:
    """Density matrix of a normalized amplitude vector."""
    return pure_to_density(PureState.from_amplitudes(amp))


def _check_x(x: float) -> float:
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise XOutOfRange(f"x={x!r} outside [0, 1]")
    return x


def singlet_projector() -> np.ndarray:
    """``|psi-><psi-|`` with ``|psi-> = (|01> - |10>)/sqrt(2)``, as exact halves."""
    s = np.zeros((4, 4), dtype=np.complex128)
    s[1, 1] = s[2, 2] = 0.5
    s[1, 2] = s[2, 1] = -0.5
    return s


def werner(x: float) -> DensityMatrix:
    """Singlet fraction ``x`` mixed with white noise ``(1 - x) I/4``."""
    x = _check_x(x)
    noise = (1.0 - x) / 4.0
    m = np.diag(np.array([noise, 0.5 - noise, 0.5 - noise, noise], dtype=np.complex128))
    # 0.5 - noise equals x/2 + noise but keeps the trace exactly 1
    m[1, 2] = m[2, 1] = -x / 2.0
    return DensityMatrix(2, m)


def paper_example(variant: str, x: float) -> DensityMatrix:
    """The two three-qubit test matrices ``"prime"`` and ``"doubleprime"``.

    ``"prime"`` reduces to ``werner(x)`` along ``A|BC``, ``"doubleprime"``
    along ``B|AC``.
    """
    x = _check_x(x)
    q, h = (1.0 - x) / 4.0, x / 2.0
    key = variant.lower().replace("_", "").replace("-", "")
    if key == "prime":
        diag, (a, b) = [0, q, q, h, h, q, q, 0], (3, 4)
    elif key == "doubleprime":
        diag, (a, b) = [0, q, h, q, q, h, q, 0], (2, 5)
    else:
        raise ValueError(f"unknown variant {variant!r}; expected 'prime' or 'doubleprime'")
    m = np.diag(np.array(diag, dtype=np.complex128))
    m[a, b] = m[b, a] = -h
    return DensityMatrix(3, m)


def ghz(n: int) -> PureState:
    if n < 2:
        raise NTooSmall(f"GHZ needs at least 2 qubits, got {n}")
    amp = np.zeros(2 ** n, dtype=np.complex128)
    amp[0] = amp[-1] = 1.0 / math.sqrt(2.0)
    return PureState(n, amp)


def maximally_mixed(n: int) -> DensityMatrix:
    if n < 1:
        raise NOutOfRange("n must be positive")
    d = 2 ** n
    return DensityMatrix(n, np.eye(d) / d)


def make_rng(seed: int) -> np.random.Generator:
    """The package's pinned generator: PCG64 seeded directly from ``seed``."""
    return np.random.Generator(np.random.PCG64(seed))


def _ginibre(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def random_density(num_qubits: int, seed: int) -> DensityMatrix:
    """Hilbert-Schmidt random state ``G G^H / tr(G G^H)``, deterministic in ``seed``."""
    if not 1 <= num_qubits <= 10:
        raise NOutOfRange(f"num_qubits={num_qubits} outside 1..10")
    d = 2 ** num_qubits
    g = _ginibre(make_rng(seed), d, d)
    m = g @ dagger(g)
    m = 0.5 * (m + dagger(m))
    return DensityMatrix(num_qubits, m / np.trace(m).real)


def random_pure(num_qubits: int, seed: int) -> PureState:
    if not 1 <= num_qubits <= 10:
        raise NOutOfRange(f"num_qubits={num_qubits} outside 1..10")
    v = _ginibre(make_rng(seed), 2 ** num_qubits, 1).ravel()
    return PureState(num_qubits, v / np.linalg.norm(v))


def construct_inseparable(
    sigmas: Sequence[DensityMatrix],
    weights: Sequence[float],
    layout: Partition,
) -> DensityMatrix:
    """Embed a two-qubit mixture ``sum_i p_i sigma_i`` into three qubits.

    Only the ``B|AC`` layout is supported. Entries are
    ``rho[ijk, rst] = p1 sigma1[ji, sr]`` when ``k = i`` and ``t = r``,
    ``p2 sigma2[ji, sr]`` when ``k = 1-i`` and ``t = 1-r``, and zero
    otherwise, so reducing the result along ``B|AC`` gives back the mixture.
    """
    if layout.n != 3 or layout.left != (2,) or layout.right != (1, 3):
        raise UnsupportedLayout(f"only the B|AC layout on 3 qubits is supported, got {layout}")
    expected = 2 ** (layout.n - 2)
    if len(sigmas) != len(weights) or len(sigmas) != expected:
        raise CountMismatch(
            f"need {expected} sigmas and weights, got {len(sigmas)} and {len(weights)}"
        )
    w = np.asarray(weights, dtype=float)
    if np.any(~np.isfinite(w)) or np.any(w <= 0) or abs(w.sum() - 1.0) > 1e-12:
        raise WeightsInvalid(f"weights must be positive and sum to 1, got {list(weights)}")
    for s in sigmas:
        if s.num_qubits != 2:
            raise CountMismatch("every sigma must be a two-qubit density matrix")

    rho = np.zeros((8, 8), dtype=np.complex128)
    for piece, (p, sigma) in enumerate(zip(w, sigmas)):
        for i, j, r, s in np.ndindex(2, 2, 2, 2):
            k = i if piece == 0 else 1 - i
            t = r if piece == 0 else 1 - r
            rho[4 * i + 2 * j + k, 4 * r + 2 * s + t] = p * sigma.mat[2 * j + i, 2 * s + r]
    return validate_density(rho)

"""Reduction of an N-qubit density matrix to a two-qubit one along a bipartition.

For each canonical split of the partition, the four bit patterns
``x(i, j)`` (``i`` selects the left side, ``j`` the right) pick out a 4x4
principal submatrix; the reduction is the sum of these submatrices. The
patterns of all canonical splits tile the full basis exactly once, which is
why the result keeps unit trace, and principal submatrices of a PSD matrix
are PSD, which is why it stays a state.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, NotAPermutation
from .partition import Partition, SubSplit, enumerate_canonical_splits
from .states import DensityMatrix, PureState


def _check_perm(perm: Sequence[int], n: int) -> tuple[int, ...]:
    perm = tuple(int(k) for k in perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise NotAPermutation(f"{perm} is not a permutation of 1..{n}")
    return perm


def permutation_source(perm: Sequence[int], n: int) -> np.ndarray:
    """``src[new_index]`` = old basis index feeding ``new_index``.

    Qubit ``m`` of the new ordering (1-based) is qubit ``perm[m-1]`` of the
    old one.
    """
    perm = _check_perm(perm, n)
    new = np.arange(2 ** n)
    src = np.zeros_like(new)
    for m, old_q in enumerate(perm):
        bit = (new >> (n - 1 - m)) & 1
        src |= bit << (n - old_q)
    return src


def permutation_matrix(perm: Sequence[int], n: int) -> np.ndarray:
    """0/1 unitary ``S`` with ``S @ rho @ S^H`` equal to :func:`reorder_qubits`."""
    src = permutation_source(perm, n)
    s = np.zeros((2 ** n, 2 ** n), dtype=np.complex128)
    s[np.arange(2 ** n), src] = 1.0
    return s


def partition_permutation(p: Partition) -> tuple[int, ...]:
    """Qubit order that lists the left side first, then the right side."""
    return p.left + p.right


def reorder_qubits(rho: DensityMatrix, perm: Sequence[int]) -> DensityMatrix:
    src = permutation_source(perm, rho.num_qubits)
    return DensityMatrix(rho.num_qubits, rho.mat[np.ix_(src, src)])


def index_vector(split: SubSplit, i: int, j: int) -> tuple[int, ...]:
    """Bits ``x_1..x_N`` selected by ``(i, j)`` under ``split``."""
    x = [0] * split.parent.n
    for k in split.r_prime:
        x[k - 1] = i
    for k in split.r_dprime:
        x[k - 1] = 1 - i
    for k in split.s_prime:
        x[k - 1] = j
    for k in split.s_dprime:
        x[k - 1] = 1 - j
    return tuple(x)


def bits_to_index(bits: Sequence[int]) -> int:
    out = 0
    for b in bits:
        out = (out << 1) | b
    return out


def split_indices(split: SubSplit) -> list[int]:
    """Basis indices for rows ``2i + j`` of the split's 4x4 block."""
    return [bits_to_index(index_vector(split, i, j)) for i in (0, 1) for j in (0, 1)]


def _check_dims(num_qubits: int, p: Partition) -> None:
    if p.n != num_qubits:
        raise DimensionMismatch(f"partition is over {p.n} qubits, state has {num_qubits}")


def extract_submatrix(rho: DensityMatrix, split: SubSplit) -> np.ndarray:
    _check_dims(rho.num_qubits, split.parent)
    idx = split_indices(split)
    return rho.mat[np.ix_(idx, idx)].copy()


def reduce(rho: DensityMatrix, p: Partition) -> DensityMatrix:
    """Two-qubit reduction of ``rho`` along ``p``; first qubit = ``p.left``.

    For two qubits this is the identity map (on ``B|A`` it swaps the qubits).
    """
    _check_dims(rho.num_qubits, p)
    out = np.zeros((4, 4), dtype=np.complex128)
    for split in enumerate_canonical_splits(p):
        out += extract_submatrix(rho, split)
    return DensityMatrix(2, out)


@dataclass(frozen=True, eq=False)
class ReductionTerm:
    split: SubSplit
    eta_squared: float
    term: np.ndarray


def reduce_pure_oracle(psi: PureState, p: Partition) -> list[ReductionTerm]:
    """Pure-state route to the reduction, one rank-1 term per canonical split.

    The split picks four amplitudes ``phi[2i + j] = amp[x(i, j)]``; the term is
    ``phi phi^H`` and ``eta_squared = |phi|^2`` its weight. Works only from
    amplitudes, never from the density matrix.
    """
    _check_dims(psi.num_qubits, p)
    out = []
    for split in enumerate_canonical_splits(p):
        phi = np.array([psi.amp[k] for k in split_indices(split)])
        out.append(ReductionTerm(split, float(np.vdot(phi, phi).real), np.outer(phi, np.conj(phi))))
    return out


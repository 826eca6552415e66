"""PPT test on reduced states and the resulting partial-separability verdicts.

A negative partial transpose of the reduction proves the state is
inseparable across that cut (and therefore entangled). A PPT reduction proves
nothing about the N-qubit state, hence the verdict ``UNDETERMINED`` rather
than "separable". For the reduced two-qubit state alone PPT is equivalent to
separability, which is what ``reduced_separable`` reports.
"""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch
from .linalg import as_matrix, hermitian_eigenvalues
from .partition import Partition, enumerate_partitions
from .reduction import reduce
from .states import DensityMatrix

DEFAULT_PPT_TOL = 1e-9


class VerdictKind(enum.Enum):
    INSEPARABLE = "inseparable"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    partition: Partition
    min_pt_eigenvalue: float
    tolerance: float
    reduced: DensityMatrix | None = field(default=None, compare=False, repr=False)

    @property
    def reduced_separable(self) -> bool:
        return self.min_pt_eigenvalue >= -self.tolerance

    @property
    def inseparable(self) -> bool:
        return self.kind is VerdictKind.INSEPARABLE


@dataclass(frozen=True)
class SeparabilityReport:
    num_qubits: int
    tolerance: float
    verdicts: tuple[Verdict, ...]

    @property
    def entangled(self) -> bool:
        """True if some cut is proven inseparable; False means "not shown"."""
        return any(v.inseparable for v in self.verdicts)


def partial_transpose(rho4) -> np.ndarray:
    """Transpose the second qubit of a 4x4 matrix: ``out[2i+j, 2u+v] = rho[2i+v, 2u+j]``."""
    m = as_matrix(rho4)
    if m.shape != (4, 4):
        raise DimensionMismatch(f"partial transpose needs a 4x4 matrix, got {m.shape}")
    return m.reshape(2, 2, 2, 2).transpose(0, 3, 2, 1).reshape(4, 4)


def ppt_min_eigenvalue(rho: DensityMatrix) -> float:
    if rho.num_qubits != 2:
        raise DimensionMismatch(f"expected a two-qubit state, got {rho.num_qubits} qubits")
    return float(hermitian_eigenvalues(partial_transpose(rho.mat))[0])


def check_partial_separability(
    rho: DensityMatrix, p: Partition, tol: float = DEFAULT_PPT_TOL
) -> Verdict:
    if tol <= 0:
        raise ValueError("tol must be positive")
    red = reduce(rho, p)
    lo = ppt_min_eigenvalue(red)
    kind = VerdictKind.INSEPARABLE if lo < -tol else VerdictKind.UNDETERMINED
    return Verdict(kind, p, lo, tol, red)


def analyze_all(
    rho: DensityMatrix, tol: float = DEFAULT_PPT_TOL, max_workers: int | None = None
) -> SeparabilityReport:
    """Verdicts for every canonical bipartition, in :func:`enumerate_partitions` order."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    parts = enumerate_partitions(rho.num_qubits)
    if max_workers and max_workers > 1:
        with ThreadPoolExecutor(max_workers) as pool:
            verdicts = list(pool.map(lambda p: check_partial_separability(rho, p, tol), parts))
    else:
        verdicts = [check_partial_separability(rho, p, tol) for p in parts]
    return SeparabilityReport(rho.num_qubits, tol, tuple(verdicts))
